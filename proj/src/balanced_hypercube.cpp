#include "bhx/balanced_hypercube.hpp"

#include "bhx/errors.hpp"

#include <algorithm>
#include <charconv>

namespace bhx {

namespace {

void check_dimension(int n)
{
    if (n < 1 || n > kMaxDimension)
        throw InputError("dimension n must be in 1.." + std::to_string(kMaxDimension) + ", got " + std::to_string(n));
}

auto digit(BhId id, int i) -> unsigned { return static_cast<unsigned>((id >> (2 * i)) & 3U); }

auto with_digit(BhId id, int i, unsigned value) -> BhId
{
    return (id & ~(BhId{3} << (2 * i))) | (BhId{value} << (2 * i));
}

} // namespace

auto bh_encode(const BhVertex & v) -> BhId
{
    check_dimension(v.dimension());
    BhId id = 0;
    for (int i = v.dimension() - 1; i >= 0; --i) {
        auto d = v.digits[static_cast<std::size_t>(i)];
        if (d > 3)
            throw InputError("digit a_" + std::to_string(i) + " = " + std::to_string(d) + " is not in {0,1,2,3}");
        id = (id << 2) | d;
    }
    return id;
}

auto bh_decode(BhId id, int n) -> BhVertex
{
    check_dimension(n);
    if (n < kMaxDimension + 1 && (id >> (2 * n)) != 0)
        throw InputError("id " + std::to_string(id) + " is not below 4^" + std::to_string(n));
    BhVertex v;
    v.digits.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        v.digits[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(digit(id, i));
    return v;
}

auto parse_bh_vertex(std::string_view text) -> BhVertex
{
    BhVertex v;
    std::size_t pos = 0;
    while (true) {
        auto comma = text.find(',', pos);
        auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        while (! token.empty() && token.front() == ' ')
            token.remove_prefix(1);
        while (! token.empty() && token.back() == ' ')
            token.remove_suffix(1);
        unsigned d = 0;
        auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), d);
        if (token.empty() || ec != std::errc{} || end != token.data() + token.size() || d > 3)
            throw InputError("bad vertex \"" + std::string(text) + "\": expected comma-separated digits in {0,1,2,3}");
        v.digits.push_back(static_cast<std::uint8_t>(d));
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    check_dimension(v.dimension());
    return v;
}

auto format_bh_vertex(const BhVertex & v) -> std::string
{
    std::string out;
    for (std::size_t i = 0; i < v.digits.size(); ++i) {
        if (i)
            out += ',';
        out += static_cast<char>('0' + v.digits[i]);
    }
    return out;
}

auto format_bh_id(BhId id, int n) -> std::string
{
    return format_bh_vertex(bh_decode(id, n));
}

auto bh_neighbor_ids(int n, BhId id) -> std::vector<BhId>
{
    check_dimension(n);
    auto a0 = digit(id, 0);
    // (-1)^{a_0} as a residue mod 4
    unsigned shift = (a0 % 2 == 0) ? 1U : 3U;

    std::vector<BhId> out;
    out.reserve(static_cast<std::size_t>(2 * n));
    for (unsigned step : {1U, 3U}) {
        auto base = with_digit(id, 0, (a0 + step) % 4);
        out.push_back(base);
        for (int i = 1; i < n; ++i)
            out.push_back(with_digit(base, i, (digit(id, i) + shift) % 4));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.size() != static_cast<std::size_t>(2 * n))
        throw VerificationFailure("BH_" + std::to_string(n) + " vertex " + format_bh_id(id, n) + " produced "
                                  + std::to_string(out.size()) + " distinct neighbours");
    return out;
}

auto bh_neighbors(int n, const BhVertex & v) -> std::vector<BhVertex>
{
    if (v.dimension() != n)
        throw InputError("vertex " + format_bh_vertex(v) + " does not have " + std::to_string(n) + " digits");
    std::vector<BhVertex> out;
    for (auto id : bh_neighbor_ids(n, bh_encode(v)))
        out.push_back(bh_decode(id, n));
    return out;
}

auto equivalent_vertex(int n, const BhVertex & v) -> BhVertex
{
    if (v.dimension() != n)
        throw InputError("vertex " + format_bh_vertex(v) + " does not have " + std::to_string(n) + " digits");
    return bh_decode(equivalent_id(bh_encode(v)), n);
}

ImplicitBh::ImplicitBh(int n) : n_(n)
{
    check_dimension(n);
}

auto ImplicitBh::adjacent(BhId u, BhId v) const -> bool
{
    auto nbrs = neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

auto ImplicitBh::induced_edge_count(std::span<const BhId> subset) const -> std::size_t
{
    std::vector<BhId> sorted(subset.begin(), subset.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::size_t twice = 0;
    for (auto u : sorted)
        for (auto w : neighbors(u))
            twice += std::binary_search(sorted.begin(), sorted.end(), w) ? 1 : 0;
    return twice / 2;
}

auto build_bh(int n, std::size_t materialize_limit) -> Graph
{
    check_dimension(n);
    if (n > 15 || (std::size_t{1} << (2 * n)) > materialize_limit)
        throw Refusal("BH_" + std::to_string(n) + " has 4^" + std::to_string(n)
                      + " vertices, above the materialisation limit of " + std::to_string(materialize_limit)
                      + "; use the implicit-adjacency handle instead");
    auto count = std::size_t{1} << (2 * n);
    std::vector<Edge> edges;
    edges.reserve(count * static_cast<std::size_t>(n));
    for (BhId u = 0; u < count; ++u)
        for (auto w : bh_neighbor_ids(n, u))
            if (u < w)
                edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(w));
    return build_graph(count, edges);
}

auto CommonNeighborSpectrum::holds() const -> bool
{
    auto full = static_cast<std::size_t>(2 * n);
    for (auto [value, count] : histogram)
        if (value != 0 && value != 2 && value != full)
            return false;
    return std::all_of(full_partners.begin(), full_partners.end(), [](const auto & p) { return p.size() == 1; });
}

auto common_neighbor_spectrum(int n, std::size_t materialize_limit) -> CommonNeighborSpectrum
{
    auto g = build_bh(n, materialize_limit);
    CommonNeighborSpectrum spectrum;
    spectrum.n = n;
    spectrum.full_partners.resize(g.vertex_count());
    auto full = static_cast<std::size_t>(2 * n);
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
            auto c = g.row(u).intersection_count(g.row(v));
            ++spectrum.histogram[c];
            if (c == full) {
                spectrum.full_partners[u].push_back(v);
                spectrum.full_partners[v].push_back(u);
            }
        }
    return spectrum;
}

auto ImplicitXn::neighbors(BhId cls) const -> std::vector<BhId>
{
    std::vector<BhId> out;
    for (auto w : bh_.neighbors(fiber_member(cls, 0)))
        out.push_back(quotient_class(w));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

auto build_xn(int n, std::size_t materialize_limit) -> Quotient
{
    auto bh = build_bh(n, materialize_limit);
    auto count = bh.vertex_count();

    Quotient q;
    q.map.class_of.resize(count);
    q.map.fiber_of.resize(count / 2);
    for (Vertex u = 0; u < count; ++u) {
        // the partner is the vertex with an identical neighbourhood
        Vertex partner = u;
        std::size_t found = 0;
        for (auto x : bh.neighbors(u)) {
            for (auto w : bh.neighbors(x))
                if (w != u && std::ranges::equal(bh.neighbors(w), bh.neighbors(u)) && w != partner) {
                    partner = w;
                    ++found;
                }
            break;
        }
        if (found != 1 || partner != equivalent_id(u))
            throw VerificationFailure("BH_" + std::to_string(n) + ": equivalent vertex of " + format_bh_id(u, n)
                                      + " does not match the closed form");
        auto cls = static_cast<Vertex>(quotient_class(u));
        q.map.class_of[u] = cls;
        q.map.fiber_of[cls][static_cast<std::size_t>(fiber_index(u))] = u;
    }

    std::vector<Edge> edges;
    for (auto [u, v] : bh.edges()) {
        auto a = q.map.class_of[u];
        auto b = q.map.class_of[v];
        for (auto x : q.map.fiber_of[a])
            for (auto y : q.map.fiber_of[b])
                if (! bh.adjacent(x, y))
                    throw VerificationFailure("BH_" + std::to_string(n) + ": fibres of " + format_bh_id(u, n) + " and "
                                              + format_bh_id(v, n) + " are not completely joined");
        edges.emplace_back(a, b);
    }
    q.graph = build_graph(count / 2, edges);
    return q;
}

auto verify_lex_decomposition(int n, std::size_t materialize_limit) -> IsoWitness
{
    auto bh = build_bh(n, materialize_limit);
    auto xn = build_xn(n, materialize_limit);
    auto product = lexicographic_product(xn.graph, empty_graph(2));

    IsoWitness witness;
    witness.n = n;
    witness.bijection.resize(bh.vertex_count());
    std::vector<Vertex> image(bh.vertex_count());
    std::vector<Vertex> preimage(bh.vertex_count());
    for (Vertex u = 0; u < bh.vertex_count(); ++u) {
        auto cls = xn.map.class_of[u];
        auto idx = xn.map.fiber_of[cls][0] == u ? 0 : 1;
        witness.bijection[u] = {cls, idx};
        image[u] = product.id(cls, static_cast<Vertex>(idx));
        preimage[image[u]] = u;
    }

    auto name = [&](Vertex u) { return format_bh_id(u, n); };
    for (auto [u, v] : bh.edges()) {
        if (! product.graph.adjacent(image[u], image[v]))
            throw VerificationFailure("BH_" + std::to_string(n) + " edge " + name(u) + " - " + name(v)
                                      + " is not an edge of X_n o 2K_1");
        ++witness.bh_edges_checked;
    }
    for (auto [a, b] : product.graph.edges()) {
        if (! bh.adjacent(preimage[a], preimage[b]))
            throw VerificationFailure("X_n o 2K_1 edge maps to the non-edge " + name(preimage[a]) + " - "
                                      + name(preimage[b]) + " of BH_" + std::to_string(n));
        ++witness.product_edges_checked;
    }
    if (bh.edge_count() != product.graph.edge_count())
        throw VerificationFailure("edge counts differ");
    return witness;
}

} // namespace bhx
