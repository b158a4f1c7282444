#include "bhx/balanced_hypercube.hpp"
#include "bhx/errors.hpp"
#include "bhx/extra_connectivity.hpp"

#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>

using namespace bhx;

namespace {

auto cycle(std::size_t n) -> Graph
{
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
    return build_graph(n, edges);
}

/// Union of two random perfect matchings twice over, rejected until simple.
auto random_four_regular(std::mt19937_64 & rng, std::size_t order) -> Graph
{
    for (;;) {
        std::vector<Vertex> stubs;
        for (std::size_t v = 0; v < order; ++v)
            for (int k = 0; k < 4; ++k)
                stubs.push_back(static_cast<Vertex>(v));
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::vector<Edge> edges;
        bool simple = true;
        for (std::size_t i = 0; i < stubs.size(); i += 2) {
            auto [a, b] = std::minmax(stubs[i], stubs[i + 1]);
            if (a == b || std::find(edges.begin(), edges.end(), Edge{a, b}) != edges.end()) {
                simple = false;
                break;
            }
            edges.emplace_back(a, b);
        }
        if (simple)
            return build_graph(order, edges);
    }
}

/// Direct evaluation of the g-extra cut definition: every edge subset whose
/// removal leaves components of at least g+1 vertices, minimum size.
auto lambda_by_edge_subsets(const Graph & g, int extra) -> std::optional<std::size_t>
{
    auto edges = g.edges();
    std::optional<std::size_t> best;
    for (std::uint32_t mask = 1; mask < (1U << edges.size()); ++mask) {
        auto size = static_cast<std::size_t>(std::popcount(mask));
        if (best && size >= *best)
            continue;
        std::vector<Edge> kept;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (! (mask >> i & 1U))
                kept.push_back(edges[i]);
        auto comps = connected_components(build_graph(g.vertex_count(), kept));
        if (comps.size() < 2)
            continue;
        bool ok = std::all_of(comps.begin(), comps.end(),
                              [&](const auto & c) { return c.size() >= static_cast<std::size_t>(extra) + 1; });
        if (ok)
            best = size;
    }
    return best;
}

} // namespace

TEST_CASE("conjecture formula")
{
    CHECK(conjecture_value(2, 2) == 8);
    CHECK(conjecture_value(2, 3) == 8);
    CHECK(conjecture_value(5, 9) == 68);
}

TEST_CASE("beta_g")
{
    auto bh2 = build_bh(2);
    CHECK(beta_g(bh2, 2).cut_size == 8);
    CHECK(beta_g(bh2, 3).cut_size == 8);
    CHECK(beta_g(cycle(4), 1).cut_size == 2);
    for (int g = 1; g <= 4; ++g) {
        auto a = beta_g(bh2, g, true);
        auto b = beta_g(bh2, g, false);
        CHECK(a.cut_size == b.cut_size);
        CHECK(revalidate(bh2, a));
        CHECK(revalidate(bh2, b));
        CHECK(b.side_u.size() == static_cast<std::size_t>(g + 1));
    }
}

TEST_CASE("beta_g shortcut on random 4-regular graphs")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        auto order = std::uniform_int_distribution<std::size_t>(6, 14)(rng);
        auto g = random_four_regular(rng, order);
        for (int extra = 1; extra <= 4 && extra + 1 < static_cast<int>(order); ++extra)
            CHECK(beta_g(g, extra, true).cut_size == beta_g(g, extra, false).cut_size);
    }
}

TEST_CASE("gamma_g and lambda_g on small graphs")
{
    auto c4 = gamma_g_bruteforce(cycle(4), 0);
    REQUIRE(c4);
    CHECK(c4->cut_size == 2);

    auto bh2 = build_bh(2);
    const std::size_t expected[] = {6, 8, 8};
    for (int g = 1; g <= 3; ++g) {
        auto gamma = gamma_g_bruteforce(bh2, g);
        auto lambda = lambda_g_bruteforce(bh2, g);
        REQUIRE(gamma);
        REQUIRE(lambda);
        CHECK(gamma->cut_size == expected[g - 1]);
        CHECK(lambda->cut_size == expected[g - 1]);
        CHECK(revalidate(bh2, *gamma));
        CHECK(revalidate(bh2, *lambda));
        CHECK(lambda->min_component_u >= static_cast<std::size_t>(g + 1));
        CHECK(lambda->min_component_ubar >= static_cast<std::size_t>(g + 1));
        CHECK(gamma->cut_size <= beta_g(bh2, g).cut_size);
    }
    CHECK_THROWS_AS(gamma_g_bruteforce(build_bh(3), 1), Refusal);
    CHECK_THROWS_AS(lambda_g_bruteforce(build_graph(4, {{0, 1}, {2, 3}}), 0), InputError);
    CHECK_FALSE(lambda_g_bruteforce(cycle(5), 2));
}

TEST_CASE("lambda_g matches the cut definition on small graphs")
{
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> coin(0, 2);
    int compared = 0;
    while (compared < 25) {
        std::vector<Edge> edges;
        for (Vertex u = 0; u < 8; ++u)
            for (Vertex v = u + 1; v < 8; ++v)
                if (coin(rng) == 0)
                    edges.emplace_back(u, v);
        if (edges.size() > 16)
            continue;
        auto g = build_graph(8, edges);
        if (connected_components(g).size() != 1)
            continue;
        for (int extra = 0; extra <= 3; ++extra) {
            auto lambda = lambda_g_bruteforce(g, extra);
            auto direct = lambda_by_edge_subsets(g, extra);
            CHECK(lambda.has_value() == direct.has_value());
            if (lambda && direct)
                CHECK(lambda->cut_size == *direct);
            auto gamma = gamma_g_bruteforce(g, extra);
            if (lambda && gamma)
                CHECK(gamma->cut_size <= lambda->cut_size);
        }
        ++compared;
    }
}

TEST_CASE("lambda_g is nondecreasing in g on BH_2")
{
    auto bh2 = build_bh(2);
    std::size_t previous = 0;
    for (int g = 0; g <= 7; ++g) {
        auto w = lambda_g_bruteforce(bh2, g);
        if (! w)
            break;
        CHECK(w->cut_size >= previous);
        previous = w->cut_size;
    }
}

TEST_CASE("pipeline")
{
    auto p22 = theorem_pipeline(2, 2);
    CHECK(p22.cond_order);
    CHECK(p22.cond_degree == Condition::holds);
    CHECK(p22.lambda_exact() == 8);
    CHECK(p22.verdict == Verdict::equals_conjecture);

    auto p23 = theorem_pipeline(2, 3);
    CHECK(p23.cond_degree == Condition::fails);
    CHECK(p23.verdict == Verdict::inconclusive);
    CHECK_FALSE(p23.lambda_exact());
    CHECK(p23.lambda_high == 8);

    for (auto [n, g] : {std::pair{3, 2}, {3, 3}}) {
        auto p = theorem_pipeline(n, g);
        CHECK(p.verdict == Verdict::equals_conjecture);
        CHECK(p.lambda_exact() == p.conjecture_value);
    }

    auto p59 = theorem_pipeline(5, 9);
    CHECK(p59.eg_lower >= 17);
    CHECK(p59.lambda_high == 66);
    CHECK(p59.conjecture_value == 68);
    CHECK(p59.verdict == Verdict::below_conjecture);
    CHECK_FALSE(p59.lambda_exact());
    CHECK_FALSE(p59.reasons.empty());

    auto outside = theorem_pipeline(2, 4);
    CHECK(outside.verdict == Verdict::inconclusive);
    CHECK_FALSE(outside.reasons.empty());
}

TEST_CASE("degree condition is never concluded from the wrong bound")
{
    for (int n = 2; n <= 6; ++n)
        for (int g = 2; g <= 2 * n - 1; ++g) {
            auto p = theorem_pipeline(n, g);
            auto lhs = static_cast<std::size_t>(2 * n) * static_cast<std::size_t>(g + 1);
            if (p.cond_degree == Condition::holds) {
                REQUIRE(p.eg_upper);
                CHECK(lhs >= 6 * *p.eg_upper);
            }
            if (p.cond_degree == Condition::fails)
                CHECK(lhs < 6 * p.eg_lower);
            if (p.verdict == Verdict::below_conjecture)
                CHECK(*p.lambda_high < p.conjecture_value);
        }
}

TEST_CASE("known values suite")
{
    auto rows = known_values_suite();
    CHECK(rows.size() >= 7);
    for (const auto & r : rows)
        CHECK_MESSAGE(r.pass, r.quantity << " n=" << r.n << " g=" << r.g);
}
