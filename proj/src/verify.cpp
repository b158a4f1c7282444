#include "bhx/verify.hpp"

#include "bhx/balanced_hypercube.hpp"
#include "bhx/errors.hpp"
#include "bhx/extra_connectivity.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <variant>

namespace bhx {

auto to_string(RowStatus s) -> std::string
{
    switch (s) {
    case RowStatus::pass:
        return "pass";
    case RowStatus::fail:
        return "fail";
    case RowStatus::skipped:
        return "skipped";
    }
    return "skipped";
}

auto VerifyReport::group_count() const -> std::size_t
{
    std::set<std::string> groups;
    for (const auto & r : rows)
        groups.insert(r.group);
    return groups.size();
}

auto VerifyReport::all_pass() const -> bool
{
    return std::all_of(rows.begin(), rows.end(), [](const VerifyRow & r) { return r.status == RowStatus::pass; });
}

auto VerifyReport::exit_code() const -> int
{
    if (std::any_of(rows.begin(), rows.end(), [](const VerifyRow & r) { return r.status == RowStatus::fail; }))
        return 1;
    if (std::any_of(rows.begin(), rows.end(), [](const VerifyRow & r) { return r.status == RowStatus::skipped; }))
        return 3;
    return 0;
}

namespace {

struct Outcome
{
    bool pass = false;
    std::string detail;
};

using Check = std::function<Outcome()>;

auto bipartite_check(int n) -> Outcome
{
    auto g = build_bh(n);
    auto parts = bipartition(g);
    auto * bp = std::get_if<Bipartition>(&parts);
    if (! bp)
        return {false, "odd cycle found"};
    // parity of a_0 is the colour
    for (auto v : bp->part_x)
        if (v % 2 != 0)
            return {false, "part_x contains odd a_0"};
    return {bp->part_x.size() == bp->part_y.size(),
            "parts " + std::to_string(bp->part_x.size()) + "/" + std::to_string(bp->part_y.size()) + " by parity of a_0"};
}

auto spectrum_check(int n) -> Outcome
{
    auto s = common_neighbor_spectrum(n, std::size_t{1} << 12);
    std::ostringstream out;
    for (auto [value, count] : s.histogram)
        out << value << ":" << count << " ";
    return {s.holds(), "histogram " + out.str()};
}

auto k33_check(int n) -> Outcome
{
    auto w = find_k33(build_bh(n));
    return {! w, w ? "K33 found" : "none"};
}

auto lex_check(int n) -> Outcome
{
    auto w = verify_lex_decomposition(n);
    return {true, std::to_string(w.bh_edges_checked) + " + " + std::to_string(w.product_edges_checked)
                      + " edges checked"};
}

auto girth_check(int n) -> Outcome
{
    auto xn = build_xn(n);
    auto c = girth(xn.graph);
    auto expected = n == 2 ? std::size_t{8} : std::size_t{6};
    if (! c)
        return {false, "acyclic"};
    return {c->length() == expected, "girth " + std::to_string(c->length())};
}

auto orbit_check(int n) -> Outcome
{
    auto r = edge_orbits(build_bh(n));
    return {r.orbit_count == 1, std::to_string(r.orbit_count) + " orbit(s), "
                                    + std::to_string(r.generator_witnesses.size()) + " automorphisms used"};
}

auto k2_star_check() -> Outcome
{
    std::size_t count = 0;
    for (int n = 1; n <= 6; ++n)
        for (int g = 2; g <= 8; ++g) {
            if (g - 1 > 2 * n)
                continue;
            auto w = construct_k2_star(n, g);
            if (w.induced_edge_count != static_cast<std::size_t>(2 * g - 2))
                return {false, "n=" + std::to_string(n) + " g=" + std::to_string(g)};
            ++count;
        }
    return {true, std::to_string(count) + " constructions are K_{2,g-1}"};
}

auto eg_check(int n, int g, const EgBoundsOptions & options) -> Outcome
{
    auto b = eg_bounds(n, g, options);
    auto graph = build_bh(n);
    std::string detail = "lower " + std::to_string(b.lower) + ", upper "
                         + (b.upper ? std::to_string(*b.upper) : std::string("unknown"));
    bool ok = b.matches_2g_minus_2.value_or(false);
    try {
        auto ex = eg_exhaustive(graph, g, options.budget);
        detail += ", exhaustive " + std::to_string(ex.induced_edge_count);
        ok = ok && b.upper && ex.induced_edge_count == *b.upper;
    }
    catch (const Refusal &) {
        detail += ", exhaustive over budget";
    }
    return {ok, detail};
}

auto construction_check(int n, int g, std::size_t minimum) -> Outcome
{
    auto w = construct_dense_witness(n, g);
    bool ok = w.vertices.size() == static_cast<std::size_t>(g + 1) && w.induced_edge_count >= minimum
              && w.induced_edge_count > static_cast<std::size_t>(2 * g - 2);
    return {ok, w.construction + ": " + std::to_string(w.vertices.size()) + " vertices, "
                    + std::to_string(w.induced_edge_count) + " edges (need >= " + std::to_string(minimum) + ")"};
}

} // namespace

auto verify_suite(int max_n, std::chrono::duration<double> budget, const EgBoundsOptions & options) -> VerifyReport
{
    using Clock = std::chrono::steady_clock;
    VerifyReport report;
    report.max_n = max_n;
    auto start = Clock::now();

    auto run = [&](std::string group, std::string name, const Check & check) {
        VerifyRow row{std::move(group), std::move(name), RowStatus::skipped, 0, {}};
        if (report.budget_exhausted || Clock::now() - start > budget) {
            report.budget_exhausted = true;
            row.detail = "budget exhausted";
            report.rows.push_back(std::move(row));
            return;
        }
        auto t0 = Clock::now();
        try {
            auto outcome = check();
            row.status = outcome.pass ? RowStatus::pass : RowStatus::fail;
            row.detail = std::move(outcome.detail);
        }
        catch (const std::exception & e) {
            row.status = RowStatus::fail;
            row.detail = std::string("error: ") + e.what();
        }
        row.elapsed_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        report.rows.push_back(std::move(row));
    };
    auto label = [](int n) { return "BH_" + std::to_string(n); };

    for (int n = 1; n <= max_n; ++n)
        run("bipartite", label(n), [n] { return bipartite_check(n); });
    for (int n = 1; n <= max_n; ++n)
        run("common-neighbour spectrum", label(n), [n] { return spectrum_check(n); });
    for (int n = 1; n <= max_n; ++n)
        run("K33-free", label(n), [n] { return k33_check(n); });
    for (int n = 1; n <= max_n; ++n)
        run("lexicographic decomposition", label(n), [n] { return lex_check(n); });
    for (int n = 2; n <= max_n; ++n)
        run("girth of X_n", "X_" + std::to_string(n), [n] { return girth_check(n); });
    for (int n = 1; n <= std::min(max_n, 2); ++n)
        run("edge orbits", label(n), [n] { return orbit_check(n); });

    run("e_g table", "K_{2,g-1} constructions, n <= 6, g <= 8", [] { return k2_star_check(); });
    for (int n = 2; n <= std::min(max_n, 3); ++n)
        for (int g = 2; g <= std::min(8, 2 * n - 1); ++g)
            run("e_g table", label(n) + " g=" + std::to_string(g),
                [n, g, &options] { return eg_check(n, g, options); });

    struct Case
    {
        int n, g;
        std::size_t minimum;
    };
    for (auto [n, g, minimum] : {Case{5, 9, 17}, Case{6, 10, 20}, Case{6, 11, 24}, Case{7, 12, 24}})
        run("dense constructions", label(n) + " g=" + std::to_string(g),
            [n, g, minimum] { return construction_check(n, g, minimum); });

    std::vector<KnownValueRow> known;
    run("extra connectivity", "known values and pipeline grid", [&] {
        known = known_values_suite(options);
        bool ok = ! known.empty();
        std::string detail;
        for (const auto & r : known) {
            ok = ok && r.pass;
            detail += "(" + std::to_string(r.n) + "," + std::to_string(r.g) + ") " + r.quantity + " " + r.relation + " "
                      + std::to_string(r.expected) + ": "
                      + (r.computed ? std::to_string(*r.computed) : std::string("-")) + (r.pass ? " ok; " : " FAIL; ");
        }
        return Outcome{ok, detail};
    });
    return report;
}

} // namespace bhx
