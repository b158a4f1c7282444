#include "bhx/balanced_hypercube.hpp"
#include "bhx/errors.hpp"
#include "bhx/json_io.hpp"
#include "bhx/verify.hpp"

#include <doctest.h>

#include <algorithm>

using namespace bhx;

TEST_CASE("subgraph witness JSON round trip")
{
    auto w = construct_dense_witness(5, 9);
    auto j = witness_to_json(w, 5, 9);
    CHECK(j["vertices"][0].get<std::string>().size() == 9);
    auto parsed = witness_from_json(Json::parse(j.dump()));
    CHECK(parsed.n == 5);
    CHECK(parsed.g == 9);
    CHECK(parsed.witness.vertices == w.vertices);
    CHECK(parsed.witness.induced_edge_count == w.induced_edge_count);
    CHECK(check_witness_json(j).ok);

    j["edges"] = 18;
    CHECK_FALSE(check_witness_json(j).ok);
    j["vertices"][0] = "0,0";
    CHECK_THROWS_AS(check_witness_json(j), InputError);
}

TEST_CASE("cut witness JSON round trip")
{
    auto bh2 = build_bh(2);
    auto cut = lambda_g_bruteforce(bh2, 2);
    REQUIRE(cut);
    auto j = cut_to_json(*cut, 2);
    CHECK(j["value"] == 8);
    auto [n, back] = cut_from_json(Json::parse(j.dump()));
    CHECK(n == 2);
    CHECK(back.side_u == cut->side_u);
    CHECK(back.cut_edges == cut->cut_edges);
    CHECK(check_witness_json(j).ok);

    j["side_u"].erase(0);
    CHECK_FALSE(check_witness_json(j).ok);
}

TEST_CASE("reports embed revalidating witnesses")
{
    auto report = pipeline_to_json(theorem_pipeline(2, 2));
    CHECK(report["lambda_value"] == 8);
    CHECK(report["verdict"] == "equals_conjecture");
    auto check = check_witness_json(report);
    CHECK(check.ok);
    CHECK(check.checked >= 2);

    auto contingent = pipeline_to_json(theorem_pipeline(5, 9));
    CHECK(contingent["lambda_value"]["high"] == 66);
    CHECK(contingent["lambda_value"]["low"].is_null());
    CHECK(contingent["cond_degree"] == "fails");
    CHECK(check_witness_json(contingent).ok);

    CHECK(check_witness_json(eg_bounds_to_json(eg_bounds(3, 4))).ok);
    CHECK_THROWS_AS(check_witness_json(Json::object()), InputError);
}

TEST_CASE("reruns are identical")
{
    auto a = pipeline_to_json(theorem_pipeline(3, 3)).dump();
    auto b = pipeline_to_json(theorem_pipeline(3, 3)).dump();
    CHECK(a == b);
    auto c = witness_to_json(construct_dense_witness(7, 12), 7, 12).dump();
    auto d = witness_to_json(construct_dense_witness(7, 12), 7, 12).dump();
    CHECK(c == d);
}

TEST_CASE("verification suite")
{
    auto report = verify_suite(2);
    CHECK(report.group_count() == 9);
    CHECK(report.all_pass());
    CHECK(report.exit_code() == 0);

    auto three = verify_suite(3);
    CHECK(three.all_pass());
    auto girth_row = std::find_if(three.rows.begin(), three.rows.end(),
                                  [](const VerifyRow & r) { return r.name == "X_3"; });
    REQUIRE(girth_row != three.rows.end());
    CHECK(girth_row->detail == "girth 6");

    auto starved = verify_suite(2, std::chrono::duration<double>(0));
    CHECK(starved.budget_exhausted);
    CHECK(starved.exit_code() == 3);
    for (const auto & r : starved.rows)
        CHECK(r.status == RowStatus::skipped);
}
