#include "bhx/balanced_hypercube.hpp"
#include "bhx/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace bhx;

namespace {

auto digits(const char * s) -> BhVertex { return parse_bh_vertex(s); }

auto formatted(const std::vector<BhVertex> & vs) -> std::set<std::string>
{
    std::set<std::string> out;
    for (const auto & v : vs)
        out.insert(format_bh_vertex(v));
    return out;
}

} // namespace

TEST_CASE("vertex codec")
{
    CHECK(bh_encode(digits("0,0")) == 0);
    CHECK(bh_encode(digits("2,0")) == 2);
    CHECK(bh_encode(digits("3,1")) == 7);
    for (BhId id = 0; id < 64; ++id)
        CHECK(bh_encode(bh_decode(id, 3)) == id);
    CHECK(format_bh_id(7, 2) == "3,1");
    CHECK_THROWS_AS(parse_bh_vertex("0,4"), InputError);
    CHECK_THROWS_AS(parse_bh_vertex(""), InputError);
    CHECK_THROWS_AS(bh_decode(16, 2), InputError);
}

TEST_CASE("neighbour rule")
{
    CHECK(formatted(bh_neighbors(1, digits("0"))) == std::set<std::string>{"1", "3"});
    CHECK(formatted(bh_neighbors(2, digits("0,0"))) == std::set<std::string>{"1,0", "3,0", "1,1", "3,1"});
    CHECK(formatted(bh_neighbors(2, digits("1,0"))) == std::set<std::string>{"2,0", "0,0", "2,3", "0,3"});

    for (int n = 1; n <= 3; ++n) {
        ImplicitBh bh(n);
        for (BhId v = 0; v < bh.vertex_count(); ++v) {
            auto nbrs = bh.neighbors(v);
            CHECK(nbrs.size() == static_cast<std::size_t>(2 * n));
            CHECK(std::adjacent_find(nbrs.begin(), nbrs.end()) == nbrs.end());
            for (auto u : nbrs) {
                auto back = bh.neighbors(u);
                CHECK(std::binary_search(back.begin(), back.end(), v));
                CHECK((u % 2) != (v % 2));
            }
        }
    }
}

TEST_CASE("materialised BH_n")
{
    auto bh1 = build_bh(1);
    CHECK(bh1.vertex_count() == 4);
    CHECK(bh1.edge_count() == 4);
    auto bh2 = build_bh(2);
    CHECK(bh2.vertex_count() == 16);
    CHECK(bh2.edge_count() == 32);
    CHECK(bh2.regular_degree() == 4);
    auto bh3 = build_bh(3);
    CHECK(bh3.vertex_count() == 64);
    CHECK(bh3.edge_count() == 192);
    CHECK(bh3.regular_degree() == 6);
    CHECK_THROWS_AS(build_bh(11), Refusal);
}

TEST_CASE("equivalent vertices")
{
    CHECK(format_bh_vertex(equivalent_vertex(4, digits("0,0,0,0"))) == "2,0,0,0");
    CHECK(format_bh_vertex(equivalent_vertex(2, digits("1,0"))) == "3,0");
    for (int n = 1; n <= 3; ++n) {
        ImplicitBh bh(n);
        for (BhId v = 0; v < bh.vertex_count(); ++v) {
            auto w = equivalent_id(v);
            CHECK(w != v);
            CHECK(equivalent_id(w) == v);
            CHECK(bh.neighbors(v) == bh.neighbors(w));
        }
    }
}

TEST_CASE("common neighbour spectrum")
{
    auto s1 = common_neighbor_spectrum(1);
    CHECK(s1.holds());
    CHECK(s1.histogram.count(2) == 1);
    auto s2 = common_neighbor_spectrum(2);
    CHECK(s2.holds());
    CHECK(s2.histogram.at(4) == 8);
    for (auto [value, count] : s2.histogram)
        CHECK((value == 0 || value == 2 || value == 4));
    auto s3 = common_neighbor_spectrum(3);
    CHECK(s3.holds());
    CHECK(s3.histogram.at(6) == 32);
}

TEST_CASE("quotient X_n")
{
    auto x1 = build_xn(1);
    CHECK(x1.graph.vertex_count() == 2);
    CHECK(x1.graph.edge_count() == 1);

    auto x2 = build_xn(2);
    CHECK(x2.graph.vertex_count() == 8);
    CHECK(x2.graph.regular_degree() == 2);
    CHECK(connected_components(x2.graph).size() == 1);
    CHECK(girth(x2.graph)->length() == 8);

    auto x3 = build_xn(3);
    CHECK(x3.graph.vertex_count() == 32);
    CHECK(x3.graph.regular_degree() == 3);
    CHECK(connected_components(x3.graph).size() == 1);
    CHECK(girth(x3.graph)->length() == 6);

    for (BhId id = 0; id < 64; ++id) {
        auto cls = quotient_class(id);
        CHECK(x3.map.class_of[id] == cls);
        CHECK(fiber_member(cls, fiber_index(id)) == id);
    }
    // fibre index 0 holds the representative with a_0 in {0, 1}
    for (BhId cls = 0; cls < 32; ++cls)
        CHECK(bh_decode(fiber_member(cls, 0), 3).digits[0] < 2);

    ImplicitXn implicit(3);
    for (Vertex c = 0; c < 32; ++c) {
        auto nbrs = implicit.neighbors(c);
        auto expected = x3.graph.neighbors(c);
        CHECK(std::equal(nbrs.begin(), nbrs.end(), expected.begin(), expected.end()));
    }
}

TEST_CASE("lexicographic decomposition")
{
    for (int n = 1; n <= 3; ++n) {
        auto w = verify_lex_decomposition(n);
        auto edges = static_cast<std::size_t>(n) << (2 * n);
        CHECK(w.bh_edges_checked == edges);
        CHECK(w.product_edges_checked == edges);
        CHECK(w.bijection.size() == (std::size_t{1} << (2 * n)));
    }
}

TEST_CASE("K33-free")
{
    CHECK_FALSE(find_k33(build_bh(2)));
    CHECK_FALSE(find_k33(build_bh(3)));
}
