#include "bhx/balanced_hypercube.hpp"
#include "bhx/errors.hpp"
#include "bhx/extra_connectivity.hpp"
#include "bhx/extremal.hpp"
#include "bhx/graph.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

using namespace bhx;

namespace {

auto cycle(std::size_t n) -> Graph
{
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
    return build_graph(n, edges);
}

auto path(std::size_t n) -> Graph
{
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i)
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
    return build_graph(n, edges);
}

auto k33() -> Graph
{
    std::vector<Edge> edges;
    for (Vertex a = 0; a < 3; ++a)
        for (Vertex b = 3; b < 6; ++b)
            edges.emplace_back(a, b);
    return build_graph(6, edges);
}

auto random_subset(std::mt19937_64 & rng, std::size_t order) -> std::vector<Vertex>
{
    std::vector<Vertex> all(order);
    for (std::size_t i = 0; i < order; ++i)
        all[i] = static_cast<Vertex>(i);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::uniform_int_distribution<std::size_t>(1, order - 1)(rng));
    std::sort(all.begin(), all.end());
    return all;
}

} // namespace

TEST_CASE("build_graph normalises edges")
{
    auto c4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(c4.edge_count() == 4);
    CHECK(c4.regular_degree() == 2);
    CHECK(build_graph(1, {}).vertex_count() == 1);
    CHECK(build_graph(1, {}).edge_count() == 0);
    CHECK(build_graph(4, {{0, 1}, {1, 0}}).edge_count() == 1);
    CHECK_THROWS_AS(build_graph(3, {{0, 3}}), InputError);
    CHECK_THROWS_AS(build_graph(3, {{1, 1}}), InputError);
}

TEST_CASE("connected components")
{
    CHECK(connected_components(cycle(4)).size() == 1);
    CHECK(connected_components(empty_graph(4)).size() == 4);

    auto bh2 = build_bh(2);
    auto cut = lambda_g_bruteforce(bh2, 1);
    REQUIRE(cut);
    std::vector<Edge> kept;
    for (auto e : bh2.edges())
        if (std::find_if(cut->cut_edges.begin(), cut->cut_edges.end(), [&](Edge c) {
                return std::minmax(c.first, c.second) == std::minmax(e.first, e.second);
            }) == cut->cut_edges.end())
            kept.push_back(e);
    CHECK(kept.size() == bh2.edge_count() - 6);
    for (const auto & comp : connected_components(build_graph(16, kept)))
        CHECK(comp.size() >= 2);
}

TEST_CASE("bipartition")
{
    auto parts = bipartition(cycle(4));
    auto * bp = std::get_if<Bipartition>(&parts);
    REQUIRE(bp);
    CHECK(bp->part_x == std::vector<Vertex>{0, 2});
    CHECK(bp->part_y == std::vector<Vertex>{1, 3});

    auto odd = bipartition(cycle(3));
    auto * oc = std::get_if<OddCycle>(&odd);
    REQUIRE(oc);
    CHECK(oc->walk.size() == 3);

    auto bh2 = build_bh(2);
    auto split = std::get<Bipartition>(bipartition(bh2));
    CHECK(split.part_x.size() == 8);
    for (auto v : split.part_x)
        CHECK(v % 2 == 0);
    for (auto [u, v] : bh2.edges())
        CHECK(u % 2 != v % 2);
}

TEST_CASE("girth")
{
    auto c4 = girth(cycle(4));
    REQUIRE(c4);
    CHECK(c4->length() == 4);
    CHECK_FALSE(girth(path(5)));
    auto x3 = girth(build_xn(3).graph);
    REQUIRE(x3);
    CHECK(x3->length() == 6);

    // two components: C5 and C4, girth is the smaller one
    auto g = build_graph(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 6}, {6, 7}, {7, 8}, {8, 5}});
    auto c = girth(g);
    REQUIRE(c);
    CHECK(c->length() == 4);
    CHECK(c->vertices == std::vector<Vertex>{5, 6, 7, 8});
}

TEST_CASE("induced subgraph")
{
    auto c4 = cycle(4);
    std::vector<Vertex> adjacent_pair{0, 1}, opposite{0, 2};
    CHECK(induced_subgraph(c4, adjacent_pair).graph.edge_count() == 1);
    CHECK(induced_subgraph(c4, opposite).graph.edge_count() == 0);
    auto a3 = construct_k2_star(2, 3);
    auto sub = induced_subgraph(build_bh(2), a3.vertices);
    CHECK(sub.graph.edge_count() == 4);
    CHECK(is_complete_bipartite(sub.graph) == std::pair<std::size_t, std::size_t>(2, 2));
    std::vector<Vertex> bad{0, 7};
    CHECK_THROWS_AS(induced_subgraph(c4, bad), InputError);
}

TEST_CASE("lexicographic product")
{
    auto k2 = build_graph(2, {{0, 1}});
    auto c4 = lexicographic_product(k2, empty_graph(2));
    CHECK(c4.graph.edge_count() == 4);
    CHECK(c4.graph.regular_degree() == 2);
    CHECK(girth(c4.graph)->length() == 4);

    auto h0 = lexicographic_product(cycle(6), empty_graph(2));
    CHECK(h0.graph.vertex_count() == 12);
    CHECK(h0.graph.edge_count() == 24);
    CHECK(h0.graph.regular_degree() == 4);

    auto same = lexicographic_product(cycle(5), build_graph(1, {}));
    CHECK(same.graph.edge_count() == 5);

    // degree law on a mixed pair
    auto g = path(4);
    auto h = build_graph(3, {{0, 1}});
    auto prod = lexicographic_product(g, h);
    CHECK(prod.graph.edge_count() == g.edge_count() * 9 + g.vertex_count() * h.edge_count());
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v = 0; v < h.vertex_count(); ++v)
            CHECK(prod.graph.degree(prod.id(u, v)) == g.degree(u) * 3 + h.degree(v));
}

TEST_CASE("common neighbours")
{
    CHECK(common_neighbors(cycle(4), 0, 2).size() == 2);
    auto bh2 = build_bh(2);
    auto id = [](const char * s) { return static_cast<Vertex>(bh_encode(parse_bh_vertex(s))); };
    CHECK(common_neighbors(bh2, id("0,0"), id("2,0")).size() == 4);
    CHECK(common_neighbors(bh2, id("0,0"), id("1,0")).empty());
    CHECK(common_neighbors(bh2, 3, 3).size() == 4);
    CHECK_THROWS_AS(common_neighbors(bh2, 0, 16), InputError);
}

TEST_CASE("K33 search")
{
    auto w = find_k33(k33());
    REQUIRE(w);
    auto g = k33();
    for (auto x : w->x)
        for (auto y : w->y)
            CHECK(g.adjacent(x, y));
    auto pendant = build_graph(8, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {5, 6}, {6, 7}});
    CHECK(find_k33(pendant));
    CHECK_FALSE(find_k33(cycle(8)));
    CHECK_FALSE(find_k33(build_bh(2)));
}

TEST_CASE("complete bipartite recognition")
{
    CHECK(is_complete_bipartite(cycle(4)) == std::pair<std::size_t, std::size_t>(2, 2));
    CHECK(is_complete_bipartite(path(3)) == std::pair<std::size_t, std::size_t>(1, 2));
    CHECK_FALSE(is_complete_bipartite(cycle(6)));
    CHECK(is_complete_bipartite(build_graph(1, {})) == std::pair<std::size_t, std::size_t>(1, 0));
    CHECK_FALSE(is_complete_bipartite(empty_graph(2)));
}

TEST_CASE("boundary")
{
    std::vector<Vertex> one{0};
    CHECK(boundary(cycle(4), one).value == 2);
    auto bh2 = build_bh(2);
    std::vector<Vertex> edge{0, 1};
    CHECK(boundary(bh2, edge).value == 6);
    auto a3 = construct_k2_star(2, 3);
    CHECK(boundary(bh2, a3.vertices).value == 8);
    std::vector<Vertex> none;
    CHECK_THROWS_AS(boundary(bh2, none), InputError);
}

TEST_CASE("boundary identity on random subsets")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coin(0, 2);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Edge> edges;
        for (Vertex u = 0; u < 12; ++u)
            for (Vertex v = u + 1; v < 12; ++v)
                if (coin(rng) == 0)
                    edges.emplace_back(u, v);
        auto g = build_graph(12, edges);
        auto subset = random_subset(rng, 12);
        std::size_t degree_sum = 0;
        for (auto v : subset)
            degree_sum += g.degree(v);
        CHECK(boundary(g, subset).value == degree_sum - 2 * induced_edge_count(g, subset));
    }
}

TEST_CASE("edge orbits")
{
    CHECK(edge_orbits(cycle(4)).orbit_count == 1);
    CHECK(edge_orbits(path(3)).orbit_count == 1);
    CHECK(edge_orbits(path(4)).orbit_count == 2);
    auto bh2 = build_bh(2);
    auto report = edge_orbits(bh2);
    CHECK(report.orbit_count == 1);
    for (const auto & perm : report.generator_witnesses)
        CHECK(is_automorphism(bh2, perm));
    CHECK_THROWS_AS(edge_orbits(cycle(70)), Refusal);
}

TEST_CASE("edge list round trip")
{
    auto bh2 = build_bh(2);
    std::stringstream text;
    write_edge_list(text, bh2, "BH n=2");
    auto first = text.str().substr(0, text.str().find('\n'));
    CHECK(first == "c BH n=2");
    auto back = read_edge_list(text);
    CHECK(back.vertex_count() == 16);
    CHECK(std::equal(back.edges().begin(), back.edges().end(), bh2.edges().begin(), bh2.edges().end()));

    std::stringstream bad("p 3 2\n0 1\n");
    CHECK_THROWS_AS(read_edge_list(bad), InputError);
}
