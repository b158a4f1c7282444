#include "bhx/json_io.hpp"

#include "bhx/balanced_hypercube.hpp"
#include "bhx/errors.hpp"

#include <algorithm>

namespace bhx {

namespace {

auto vertex_strings(const std::vector<Vertex> & ids, int n) -> Json
{
    auto out = Json::array();
    for (auto v : ids)
        out.push_back(format_bh_id(v, n));
    return out;
}

auto parse_vertex_strings(const Json & arr, int n) -> std::vector<Vertex>
{
    std::vector<Vertex> out;
    for (const auto & item : arr) {
        auto v = parse_bh_vertex(item.get<std::string>());
        if (v.dimension() != n)
            throw InputError("witness vertex \"" + item.get<std::string>() + "\" does not have " + std::to_string(n)
                             + " digits");
        out.push_back(static_cast<Vertex>(bh_encode(v)));
    }
    return out;
}

template <typename T>
auto optional_json(const std::optional<T> & v) -> Json
{
    return v ? Json(*v) : Json(nullptr);
}

auto require(const Json & j, const char * key) -> const Json &
{
    if (! j.contains(key))
        throw InputError(std::string("JSON document is missing \"") + key + "\"");
    return j.at(key);
}

auto check_subgraph(const Json & j) -> WitnessCheck
{
    auto parsed = witness_from_json(j);
    ImplicitBh bh(parsed.n);
    auto recount = parsed.witness;
    std::vector<BhId> ids(recount.vertices.begin(), recount.vertices.end());
    auto actual = bh.induced_edge_count(ids);
    bool ok = revalidate(bh, parsed.witness, parsed.g);
    return {ok, 1,
            ok ? "subgraph witness ok"
               : "subgraph witness mismatch: stored " + std::to_string(parsed.witness.induced_edge_count)
                     + " edges, recount " + std::to_string(actual) + ", " + std::to_string(ids.size())
                     + " vertices for g = " + std::to_string(parsed.g)};
}

auto check_cut(const Json & j) -> WitnessCheck
{
    auto [n, cut] = cut_from_json(j);
    auto graph = build_bh(n, std::size_t{1} << 16);
    bool ok = revalidate(graph, cut);
    return {ok, 1, ok ? "cut witness ok" : "cut witness does not revalidate"};
}

} // namespace

auto witness_to_json(const SubgraphWitness & w, int n, int g) -> Json
{
    Json j;
    j["n"] = n;
    j["g"] = g;
    j["vertices"] = vertex_strings(w.vertices, n);
    j["edges"] = w.induced_edge_count;
    j["certification"] = to_string(w.certification);
    j["construction"] = w.construction;
    if (w.upper_bound)
        j["upper_bound"] = *w.upper_bound;
    if (! w.note.empty())
        j["note"] = w.note;
    return j;
}

auto witness_from_json(const Json & j) -> ParsedWitness
{
    ParsedWitness p;
    p.n = require(j, "n").get<int>();
    p.g = require(j, "g").get<int>();
    p.witness.vertices = parse_vertex_strings(require(j, "vertices"), p.n);
    std::sort(p.witness.vertices.begin(), p.witness.vertices.end());
    p.witness.induced_edge_count = require(j, "edges").get<std::size_t>();
    p.witness.certification = parse_certification(require(j, "certification").get<std::string>());
    p.witness.construction = j.value("construction", std::string{});
    if (j.contains("upper_bound") && ! j["upper_bound"].is_null())
        p.witness.upper_bound = j["upper_bound"].get<std::size_t>();
    p.witness.note = j.value("note", std::string{});
    return p;
}

auto cut_to_json(const CutWitness & w, int n) -> Json
{
    Json j;
    j["n"] = n;
    j["g"] = w.g;
    j["certifies"] = to_string(w.certifies);
    j["value"] = w.cut_size;
    j["side_u"] = vertex_strings(w.side_u, n);
    auto edges = Json::array();
    for (auto [a, b] : w.cut_edges)
        edges.push_back(Json::array({format_bh_id(a, n), format_bh_id(b, n)}));
    j["cut_edges"] = std::move(edges);
    j["cut_size"] = w.cut_size;
    j["min_component_u"] = w.min_component_u;
    j["min_component_ubar"] = w.min_component_ubar;
    return j;
}

auto cut_from_json(const Json & j) -> std::pair<int, CutWitness>
{
    auto n = require(j, "n").get<int>();
    CutWitness w;
    w.g = require(j, "g").get<int>();
    auto kind = require(j, "certifies").get<std::string>();
    if (kind == "beta_g")
        w.certifies = CutKind::beta_g;
    else if (kind == "gamma_g")
        w.certifies = CutKind::gamma_g;
    else if (kind == "lambda_g")
        w.certifies = CutKind::lambda_g;
    else
        throw InputError("unknown cut kind \"" + kind + "\"");
    w.side_u = parse_vertex_strings(require(j, "side_u"), n);
    std::sort(w.side_u.begin(), w.side_u.end());
    for (const auto & e : require(j, "cut_edges")) {
        auto pair = parse_vertex_strings(e, n);
        if (pair.size() != 2)
            throw InputError("cut edge must list two vertices");
        w.cut_edges.emplace_back(pair[0], pair[1]);
    }
    w.cut_size = require(j, "cut_size").get<std::size_t>();
    w.min_component_u = require(j, "min_component_u").get<std::size_t>();
    w.min_component_ubar = require(j, "min_component_ubar").get<std::size_t>();
    return {n, std::move(w)};
}

auto eg_bounds_to_json(const EgBounds & b) -> Json
{
    Json j;
    j["n"] = b.n;
    j["g"] = b.g;
    j["lower"] = b.lower;
    j["upper"] = optional_json(b.upper);
    j["matches_2g_minus_2"] = optional_json(b.matches_2g_minus_2);
    auto ws = Json::array();
    for (const auto & w : b.witnesses)
        ws.push_back(witness_to_json(w, b.n, b.g));
    j["witnesses"] = std::move(ws);
    return j;
}

auto pipeline_to_json(const PipelineReport & r) -> Json
{
    Json j;
    j["n"] = r.n;
    j["g"] = r.g;
    j["cond_order"] = r.cond_order;
    j["cond_degree"] = to_string(r.cond_degree);
    j["eg_lower"] = r.eg_lower;
    j["eg_upper"] = optional_json(r.eg_upper);
    Json lambda;
    if (auto exact = r.lambda_exact())
        lambda = *exact;
    else
        lambda = Json{{"low", optional_json(r.lambda_low)}, {"high", optional_json(r.lambda_high)}};
    j["lambda_value"] = std::move(lambda);
    j["conjecture_value"] = r.conjecture_value;
    j["verdict"] = to_string(r.verdict);
    j["lower_end_requires_cond_degree"] = true;
    j["edge_transitivity"] = r.edge_transitivity;
    j["reasons"] = r.reasons;
    auto ws = Json::array();
    for (const auto & w : r.eg_witnesses)
        ws.push_back(witness_to_json(w, r.n, r.g));
    j["eg_witnesses"] = std::move(ws);
    j["beta_witness"] = r.beta_witness ? cut_to_json(*r.beta_witness, r.n) : Json(nullptr);
    return j;
}

auto known_values_to_json(const std::vector<KnownValueRow> & rows) -> Json
{
    auto arr = Json::array();
    for (const auto & r : rows)
        arr.push_back(Json{{"n", r.n},
                           {"g", r.g},
                           {"quantity", r.quantity},
                           {"relation", r.relation},
                           {"expected", r.expected},
                           {"computed", optional_json(r.computed)},
                           {"method", r.method},
                           {"pass", r.pass}});
    return arr;
}

auto verify_report_to_json(const VerifyReport & r) -> Json
{
    Json j;
    j["max_n"] = r.max_n;
    j["budget_exhausted"] = r.budget_exhausted;
    j["groups"] = r.group_count();
    auto rows = Json::array();
    for (const auto & row : r.rows)
        rows.push_back(Json{{"group", row.group},
                            {"name", row.name},
                            {"status", to_string(row.status)},
                            {"elapsed_seconds", row.elapsed_seconds},
                            {"detail", row.detail}});
    j["rows"] = std::move(rows);
    j["all_pass"] = r.all_pass();
    return j;
}

auto check_witness_json(const Json & j) -> WitnessCheck
{
    if (j.contains("eg_witnesses") || j.contains("witnesses")) {
        WitnessCheck total{true, 0, {}};
        auto merge = [&](WitnessCheck c) {
            total.ok = total.ok && c.ok;
            total.checked += c.checked;
            if (! c.ok)
                total.message += c.message + "; ";
        };
        for (const auto & w : j.contains("eg_witnesses") ? j["eg_witnesses"] : j["witnesses"])
            merge(check_subgraph(w));
        if (j.contains("beta_witness") && ! j["beta_witness"].is_null())
            merge(check_cut(j["beta_witness"]));
        if (total.ok)
            total.message = std::to_string(total.checked) + " embedded witnesses ok";
        return total;
    }
    if (j.contains("side_u"))
        return check_cut(j);
    if (j.contains("vertices"))
        return check_subgraph(j);
    throw InputError("document is not a witness, cut witness, or report");
}

} // namespace bhx
