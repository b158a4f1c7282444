#include "bhx/graph.hpp"

#include "bhx/errors.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>

namespace bhx {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

auto sorted_intersection_size(std::span<const Vertex> a, std::span<const Vertex> b) -> std::size_t
{
    std::size_t c = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else {
            ++c;
            ++i;
            ++j;
        }
    }
    return c;
}

void check_vertex(const Graph & g, Vertex v)
{
    if (v >= g.vertex_count())
        throw InputError("vertex " + std::to_string(v) + " not in graph of order " + std::to_string(g.vertex_count()));
}

auto membership(const Graph & g, std::span<const Vertex> subset) -> std::vector<char>
{
    std::vector<char> in(g.vertex_count(), 0);
    for (auto v : subset) {
        check_vertex(g, v);
        in[v] = 1;
    }
    return in;
}

} // namespace

auto build_graph(std::size_t vertex_count, std::span<const Edge> edge_list) -> Graph
{
    if (vertex_count > std::numeric_limits<Vertex>::max())
        throw InputError("vertex count too large");

    Graph g;
    g.edges_.reserve(edge_list.size());
    for (auto [u, v] : edge_list) {
        if (u >= vertex_count || v >= vertex_count)
            throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint out of range 0.."
                             + std::to_string(vertex_count) + "-1");
        if (u == v)
            throw InputError("self-loop (" + std::to_string(u) + "," + std::to_string(v) + ")");
        g.edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

    g.adjacency_.assign(vertex_count, {});
    for (auto [u, v] : g.edges_) {
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (auto & nbrs : g.adjacency_)
        std::sort(nbrs.begin(), nbrs.end());

    if (vertex_count <= Graph::kDenseLimit) {
        g.rows_.assign(vertex_count, VertexSet(vertex_count));
        for (auto [u, v] : g.edges_) {
            g.rows_[u].insert(v);
            g.rows_[v].insert(u);
        }
    }
    return g;
}

auto Graph::adjacent(Vertex u, Vertex v) const -> bool
{
    if (has_rows())
        return rows_[u].contains(v);
    auto nbrs = neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

auto Graph::regular_degree() const -> std::optional<std::size_t>
{
    if (adjacency_.empty())
        return std::nullopt;
    auto k = adjacency_.front().size();
    for (const auto & nbrs : adjacency_)
        if (nbrs.size() != k)
            return std::nullopt;
    return k;
}

auto Graph::max_degree() const -> std::size_t
{
    std::size_t k = 0;
    for (const auto & nbrs : adjacency_)
        k = std::max(k, nbrs.size());
    return k;
}

auto Graph::row_mask(Vertex v) const -> std::uint64_t
{
    std::uint64_t m = 0;
    for (auto w : adjacency_[v])
        m |= std::uint64_t{1} << w;
    return m;
}

auto empty_graph(std::size_t n) -> Graph
{
    return build_graph(n, std::span<const Edge>{});
}

auto connected_components(const Graph & g) -> std::vector<std::vector<Vertex>>
{
    std::vector<std::vector<Vertex>> blocks;
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (seen[s])
            continue;
        std::vector<Vertex> block;
        seen[s] = 1;
        stack.push_back(s);
        while (! stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            block.push_back(v);
            for (auto w : g.neighbors(v))
                if (! seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
    }
    return blocks;
}

auto bipartition(const Graph & g) -> std::variant<Bipartition, OddCycle>
{
    auto n = g.vertex_count();
    std::vector<int> colour(n, -1);
    std::vector<Vertex> parent(n);
    std::vector<std::size_t> depth(n, 0);

    for (Vertex s = 0; s < n; ++s) {
        if (colour[s] != -1)
            continue;
        colour[s] = 0;
        parent[s] = s;
        std::queue<Vertex> q;
        q.push(s);
        while (! q.empty()) {
            auto u = q.front();
            q.pop();
            for (auto w : g.neighbors(u)) {
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    q.push(w);
                }
                else if (colour[w] == colour[u]) {
                    // u..lca..w through the BFS tree, closed by the edge w-u.
                    std::vector<Vertex> up_u{u}, up_w{w};
                    auto a = u, b = w;
                    while (depth[a] > depth[b]) {
                        a = parent[a];
                        up_u.push_back(a);
                    }
                    while (depth[b] > depth[a]) {
                        b = parent[b];
                        up_w.push_back(b);
                    }
                    while (a != b) {
                        a = parent[a];
                        b = parent[b];
                        up_u.push_back(a);
                        up_w.push_back(b);
                    }
                    up_w.pop_back();
                    OddCycle cycle;
                    cycle.walk = std::move(up_u);
                    cycle.walk.insert(cycle.walk.end(), up_w.rbegin(), up_w.rend());
                    return cycle;
                }
            }
        }
    }

    Bipartition parts;
    for (Vertex v = 0; v < n; ++v)
        (colour[v] == 0 ? parts.part_x : parts.part_y).push_back(v);
    return parts;
}

namespace {

auto bfs_distances(const Graph & g, Vertex root) -> std::vector<std::size_t>
{
    std::vector<std::size_t> dist(g.vertex_count(), kUnreached);
    std::queue<Vertex> q;
    dist[root] = 0;
    q.push(root);
    while (! q.empty()) {
        auto u = q.front();
        q.pop();
        for (auto w : g.neighbors(u))
            if (dist[w] == kUnreached) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist;
}

/// Length of the shortest cycle through root, or kUnreached.
auto shortest_cycle_through(const Graph & g, Vertex root, std::size_t cap) -> std::size_t
{
    auto n = g.vertex_count();
    std::vector<std::size_t> dist(n, kUnreached);
    std::vector<Vertex> parent(n), branch(n);
    std::queue<Vertex> q;
    dist[root] = 0;
    parent[root] = root;
    branch[root] = root;
    q.push(root);
    std::size_t best = kUnreached;
    while (! q.empty()) {
        auto u = q.front();
        q.pop();
        if (2 * dist[u] + 1 >= std::min(best, cap))
            break;
        for (auto w : g.neighbors(u)) {
            if (dist[w] == kUnreached) {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                branch[w] = (u == root) ? w : branch[u];
                q.push(w);
            }
            else if (w != parent[u] && u != parent[w] && branch[w] != branch[u])
                best = std::min(best, dist[u] + dist[w] + 1);
        }
    }
    return best;
}

/// Lexicographically first cycle of exactly `length` vertices whose minimum is root.
auto first_cycle_from(const Graph & g, Vertex root, std::size_t length) -> std::optional<std::vector<Vertex>>
{
    auto dist = bfs_distances(g, root);
    std::vector<Vertex> path{root};
    std::vector<char> on_path(g.vertex_count(), 0);
    on_path[root] = 1;

    auto extend = [&](auto && self) -> bool {
        auto u = path.back();
        if (path.size() == length) {
            // orientation: second vertex smaller than last
            return g.adjacent(u, root) && path[1] < path.back();
        }
        for (auto w : g.neighbors(u)) {
            if (w <= root || on_path[w])
                continue;
            auto remaining = length - path.size();   // edges still to walk after stepping to w
            if (dist[w] > remaining)
                continue;
            path.push_back(w);
            on_path[w] = 1;
            if (self(self))
                return true;
            on_path[w] = 0;
            path.pop_back();
        }
        return false;
    };
    if (length >= 3 && extend(extend))
        return path;
    return std::nullopt;
}

} // namespace

auto girth(const Graph & g) -> std::optional<Cycle>
{
    std::size_t best = kUnreached;
    for (Vertex r = 0; r < g.vertex_count(); ++r)
        best = std::min(best, shortest_cycle_through(g, r, best));
    if (best == kUnreached)
        return std::nullopt;

    for (Vertex r = 0; r < g.vertex_count(); ++r)
        if (auto c = first_cycle_from(g, r, best))
            return Cycle{std::move(*c)};
    throw VerificationFailure("girth: shortest cycle length found but no witness cycle");
}

auto induced_subgraph(const Graph & g, std::span<const Vertex> subset) -> InducedSubgraph
{
    std::vector<Vertex> ids(subset.begin(), subset.end());
    for (auto v : ids)
        check_vertex(g, v);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    std::vector<Vertex> new_id(g.vertex_count(), std::numeric_limits<Vertex>::max());
    for (std::size_t i = 0; i < ids.size(); ++i)
        new_id[ids[i]] = static_cast<Vertex>(i);

    std::vector<Edge> edges;
    for (auto u : ids)
        for (auto w : g.neighbors(u))
            if (u < w && new_id[w] != std::numeric_limits<Vertex>::max())
                edges.emplace_back(new_id[u], new_id[w]);
    return {build_graph(ids.size(), edges), std::move(ids)};
}

auto induced_edge_count(const Graph & g, std::span<const Vertex> subset) -> std::size_t
{
    auto in = membership(g, subset);
    std::size_t twice = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (in[v])
            for (auto w : g.neighbors(v))
                twice += static_cast<std::size_t>(in[w]);
    return twice / 2;
}

auto lexicographic_product(const Graph & g, const Graph & h) -> LexProduct
{
    if (g.vertex_count() == 0 || h.vertex_count() == 0)
        throw InputError("lexicographic product needs two nonempty graphs");

    LexProduct p;
    p.h_order = h.vertex_count();
    std::vector<Edge> edges;
    edges.reserve(g.edge_count() * p.h_order * p.h_order + g.vertex_count() * h.edge_count());
    for (auto [u1, u2] : g.edges())
        for (Vertex v1 = 0; v1 < p.h_order; ++v1)
            for (Vertex v2 = 0; v2 < p.h_order; ++v2)
                edges.emplace_back(p.id(u1, v1), p.id(u2, v2));
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (auto [v1, v2] : h.edges())
            edges.emplace_back(p.id(u, v1), p.id(u, v2));
    p.graph = build_graph(g.vertex_count() * p.h_order, edges);
    return p;
}

auto common_neighbors(const Graph & g, Vertex u, Vertex v) -> std::vector<Vertex>
{
    check_vertex(g, u);
    check_vertex(g, v);
    std::vector<Vertex> out;
    auto a = g.neighbors(u);
    auto b = g.neighbors(v);
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

auto find_k33(const Graph & g) -> std::optional<K33Witness>
{
    if (g.edge_count() < 9)
        return std::nullopt;

    auto n = g.vertex_count();
    std::vector<char> mark(n, 0);
    for (Vertex a = 0; a < n; ++a) {
        // b > a sharing at least three neighbours with a
        std::vector<Vertex> partners;
        std::vector<Vertex> touched;
        for (auto x : g.neighbors(a))
            for (auto b : g.neighbors(x))
                if (b > a && ! mark[b]) {
                    mark[b] = 1;
                    touched.push_back(b);
                }
        for (auto b : touched) {
            mark[b] = 0;
            if (sorted_intersection_size(g.neighbors(a), g.neighbors(b)) >= 3)
                partners.push_back(b);
        }
        std::sort(partners.begin(), partners.end());

        for (std::size_t i = 0; i < partners.size(); ++i) {
            auto ab = common_neighbors(g, a, partners[i]);
            for (std::size_t j = i + 1; j < partners.size(); ++j) {
                std::vector<Vertex> abc;
                auto nc = g.neighbors(partners[j]);
                std::set_intersection(ab.begin(), ab.end(), nc.begin(), nc.end(), std::back_inserter(abc));
                if (abc.size() >= 3)
                    return K33Witness{{a, partners[i], partners[j]}, {abc[0], abc[1], abc[2]}};
            }
        }
    }
    return std::nullopt;
}

auto is_complete_bipartite(const Graph & g) -> std::optional<std::pair<std::size_t, std::size_t>>
{
    if (g.vertex_count() == 0)
        return std::nullopt;
    if (g.vertex_count() == 1)
        return std::pair<std::size_t, std::size_t>{1, 0};
    if (connected_components(g).size() != 1)
        return std::nullopt;
    auto parts = bipartition(g);
    auto * bp = std::get_if<Bipartition>(&parts);
    if (! bp)
        return std::nullopt;
    auto x = bp->part_x.size();
    auto y = bp->part_y.size();
    if (g.edge_count() != x * y)
        return std::nullopt;
    return std::pair{std::min(x, y), std::max(x, y)};
}

auto boundary(const Graph & g, std::span<const Vertex> subset) -> Boundary
{
    auto in = membership(g, subset);
    auto size = static_cast<std::size_t>(std::count(in.begin(), in.end(), 1));
    if (size == 0 || size == g.vertex_count())
        throw InputError("boundary needs a nonempty proper subset");
    Boundary b;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (in[v])
            for (auto w : g.neighbors(v))
                if (! in[w])
                    b.edges.emplace_back(v, w);
    b.value = b.edges.size();
    return b;
}

auto is_automorphism(const Graph & g, std::span<const Vertex> perm) -> bool
{
    auto n = g.vertex_count();
    if (perm.size() != n)
        return false;
    std::vector<char> hit(n, 0);
    for (auto v : perm) {
        if (v >= n || hit[v])
            return false;
        hit[v] = 1;
    }
    for (auto [u, v] : g.edges())
        if (! g.adjacent(perm[u], perm[v]))
            return false;
    return true;
}

namespace {

/// Backtracking search for an automorphism extending a partial map.
class AutomorphismSearch
{
public:
    explicit AutomorphismSearch(const Graph & g) : g_(g)
    {
        auto n = g.vertex_count();
        signature_.resize(n);
        for (Vertex v = 0; v < n; ++v) {
            auto & sig = signature_[v];
            sig.push_back(g.degree(v));
            std::vector<std::size_t> shared;
            for (Vertex w = 0; w < n; ++w)
                if (w != v) {
                    auto c = sorted_intersection_size(g.neighbors(v), g.neighbors(w));
                    if (c)
                        shared.push_back(c);
                }
            std::sort(shared.begin(), shared.end());
            sig.insert(sig.end(), shared.begin(), shared.end());
        }
    }

    /// Automorphism with a -> c and b -> d, if one exists.
    auto find(Vertex a, Vertex b, Vertex c, Vertex d) -> std::optional<std::vector<Vertex>>
    {
        auto n = g_.vertex_count();
        map_.assign(n, kFree);
        used_.assign(n, 0);
        if (! try_assign(a, c))
            return std::nullopt;
        if (! try_assign(b, d))
            return std::nullopt;

        // BFS order from a, then any unreached components.
        order_.clear();
        std::vector<char> seen(n, 0);
        for (Vertex s : {a, b}) {
            if (seen[s])
                continue;
            seen[s] = 1;
            order_.push_back(s);
        }
        for (Vertex s = 0; s < n; ++s) {
            if (! seen[s]) {
                seen[s] = 1;
                order_.push_back(s);
            }
            // breadth-first closure of everything queued so far
            for (std::size_t i = 0; i < order_.size(); ++i)
                for (auto w : g_.neighbors(order_[i]))
                    if (! seen[w]) {
                        seen[w] = 1;
                        order_.push_back(w);
                    }
        }
        if (extend(2))
            return map_;
        return std::nullopt;
    }

private:
    static constexpr Vertex kFree = std::numeric_limits<Vertex>::max();

    auto consistent(Vertex v, Vertex image) const -> bool
    {
        if (used_[image] || signature_[v] != signature_[image])
            return false;
        for (auto w : order_) {
            if (map_[w] == kFree)
                continue;
            if (g_.adjacent(v, w) != g_.adjacent(image, map_[w]))
                return false;
        }
        return true;
    }

    auto try_assign(Vertex v, Vertex image) -> bool
    {
        if (map_[v] != kFree)
            return map_[v] == image;
        if (used_[image] || signature_[v] != signature_[image])
            return false;
        for (Vertex w = 0; w < g_.vertex_count(); ++w)
            if (map_[w] != kFree && g_.adjacent(v, w) != g_.adjacent(image, map_[w]))
                return false;
        map_[v] = image;
        used_[image] = 1;
        return true;
    }

    auto extend(std::size_t pos) -> bool
    {
        while (pos < order_.size() && map_[order_[pos]] != kFree)
            ++pos;
        if (pos == order_.size())
            return true;
        auto v = order_[pos];

        // candidates: neighbours of the image of an already mapped neighbour
        std::span<const Vertex> pool;
        std::vector<Vertex> all;
        for (auto w : g_.neighbors(v))
            if (map_[w] != kFree) {
                pool = g_.neighbors(map_[w]);
                break;
            }
        if (pool.empty()) {
            all.resize(g_.vertex_count());
            std::iota(all.begin(), all.end(), Vertex{0});
            pool = all;
        }

        for (auto image : pool) {
            if (! consistent(v, image))
                continue;
            map_[v] = image;
            used_[image] = 1;
            if (extend(pos + 1))
                return true;
            map_[v] = kFree;
            used_[image] = 0;
        }
        return false;
    }

    const Graph & g_;
    std::vector<std::vector<std::size_t>> signature_;
    std::vector<Vertex> map_;
    std::vector<char> used_;
    std::vector<Vertex> order_;
};

class DisjointSets
{
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
    auto find(std::size_t x) -> std::size_t
    {
        while (parent_[x] != x)
            x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

} // namespace

auto edge_orbits(const Graph & g, std::size_t size_limit) -> EdgeOrbitReport
{
    if (g.vertex_count() > size_limit)
        throw Refusal("edge_orbits: graph has " + std::to_string(g.vertex_count()) + " vertices, above the limit of "
                      + std::to_string(size_limit));

    auto edges = g.edges();
    auto edge_index = [&](Vertex u, Vertex v) -> std::size_t {
        Edge e{std::min(u, v), std::max(u, v)};
        return static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
    };

    EdgeOrbitReport report;
    DisjointSets sets(edges.size());
    AutomorphismSearch search(g);
    std::vector<std::size_t> representatives;

    for (std::size_t i = 0; i < edges.size(); ++i) {
        bool merged = false;
        for (auto r : representatives) {
            if (sets.find(r) == sets.find(i)) {
                merged = true;
                break;
            }
        }
        if (merged)
            continue;
        for (auto r : representatives) {
            auto [a, b] = edges[r];
            auto [c, d] = edges[i];
            auto perm = search.find(a, b, c, d);
            if (! perm)
                perm = search.find(a, b, d, c);
            if (perm) {
                for (std::size_t j = 0; j < edges.size(); ++j)
                    sets.unite(j, edge_index((*perm)[edges[j].first], (*perm)[edges[j].second]));
                report.generator_witnesses.push_back(std::move(*perm));
                merged = true;
                break;
            }
        }
        if (! merged)
            representatives.push_back(i);
    }

    std::vector<std::size_t> slot(edges.size(), std::numeric_limits<std::size_t>::max());
    for (std::size_t j = 0; j < edges.size(); ++j) {
        auto root = sets.find(j);
        if (slot[root] == std::numeric_limits<std::size_t>::max()) {
            slot[root] = report.orbits.size();
            report.orbits.emplace_back();
        }
        report.orbits[slot[root]].push_back(edges[j]);
    }
    report.orbit_count = report.orbits.size();
    return report;
}

void write_edge_list(std::ostream & out, const Graph & g, const std::string & comment)
{
    if (! comment.empty())
        out << "c " << comment << '\n';
    out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

auto read_edge_list(std::istream & in) -> Graph
{
    std::string line;
    std::optional<std::size_t> order;
    std::size_t declared = 0;
    std::vector<Edge> edges;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string head;
        if (! (tokens >> head) || head == "c")
            continue;
        if (head == "p") {
            std::size_t count = 0;
            if (order || ! (tokens >> count >> declared))
                throw InputError("edge list line " + std::to_string(line_no) + ": bad or repeated header");
            order = count;
            continue;
        }
        if (! order)
            throw InputError("edge list: edge before the 'p' header");
        long long u = 0, v = 0;
        std::istringstream pair_tokens(line);
        if (! (pair_tokens >> u >> v) || u < 0 || v < 0)
            throw InputError("edge list line " + std::to_string(line_no) + ": expected two vertex ids");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (! order)
        throw InputError("edge list: missing 'p' header");
    if (edges.size() != declared)
        throw InputError("edge list: header declares " + std::to_string(declared) + " edges, found "
                         + std::to_string(edges.size()));
    return build_graph(*order, edges);
}

} // namespace bhx
