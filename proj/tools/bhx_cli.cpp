#include "bhx/balanced_hypercube.hpp"
#include "bhx/errors.hpp"
#include "bhx/extra_connectivity.hpp"
#include "bhx/extremal.hpp"
#include "bhx/graph.hpp"
#include "bhx/json_io.hpp"
#include "bhx/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace bhx;

namespace {

enum Exit
{
    exit_ok = 0,
    exit_verification = 1,
    exit_usage = 2,
    exit_refusal = 3,
};

struct Options
{
    int n = 0;
    int g = 0;
    std::string method = "auto";
    std::string kind = "auto";
    std::string suite = "all";
    std::string vertex;
    std::string out;
    std::string file;
    bool json = false;
    bool quotient = false;
    bool timings = false;
    int max_n = 3;
    double budget = 60;
    std::uint64_t subset_budget = 100'000'000;
    std::size_t top_k = 16;
};

auto search_budget(const Options & o) -> SearchBudget
{
    SearchBudget b;
    b.wall = std::chrono::duration<double>(o.budget);
    b.subset_budget = o.subset_budget;
    b.top_k = o.top_k;
    return b;
}

auto bounds_options(const Options & o) -> EgBoundsOptions
{
    EgBoundsOptions e;
    e.budget = search_budget(o);
    return e;
}

auto require_n(const Options & o, int low = 1, int high = kMaxDimension)
{
    if (o.n < low || o.n > high)
        throw InputError("--n must be in [" + std::to_string(low) + ", " + std::to_string(high) + "], got "
                         + std::to_string(o.n));
}

auto require_g(const Options & o, int low = 1)
{
    if (o.g < low)
        throw InputError("--g must be at least " + std::to_string(low) + ", got " + std::to_string(o.g));
}

/// Small graphs only: the brute-force oracles work on a materialised BH_n.
auto small_bh(int n, std::size_t limit) -> Graph
{
    auto order = std::size_t{1} << (2 * n);
    if (order > limit)
        throw Refusal("BH_" + std::to_string(n) + " has " + std::to_string(order)
                      + " vertices; this method is limited to " + std::to_string(limit));
    return build_bh(n);
}

auto vertex_list(const std::vector<Vertex> & vs, int n) -> std::string
{
    std::string s;
    for (auto v : vs)
        s += (s.empty() ? "" : " ") + ("(" + format_bh_id(v, n) + ")");
    return s;
}

auto class_label(BhId cls, int n) -> std::string
{
    return "[" + format_bh_id(fiber_member(cls, 0), n) + "]";
}

void emit(const Options & o, const Json & j, const std::string & human)
{
    if (o.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << human;
}

void write_file(const std::string & path, const Graph & g, const std::string & comment)
{
    std::ofstream file(path);
    if (! file)
        throw InputError("cannot open " + path + " for writing");
    write_edge_list(file, g, comment);
}

auto cmd_gen(const Options & o) -> int
{
    require_n(o, 1, 10);
    auto g = build_bh(o.n);
    auto comment = "BH n=" + std::to_string(o.n);
    if (o.out.empty()) {
        if (o.json)
            throw InputError("gen --json needs --out for the edge list");
        write_edge_list(std::cout, g, comment);
        return exit_ok;
    }
    write_file(o.out, g, comment);
    Json j{{"n", o.n}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()}, {"out", o.out}};
    emit(o, j,
         "wrote BH_" + std::to_string(o.n) + ": " + std::to_string(g.vertex_count()) + " vertices, "
             + std::to_string(g.edge_count()) + " edges to " + o.out + "\n");
    return exit_ok;
}

auto cmd_quotient(const Options & o) -> int
{
    require_n(o, 1, 10);
    auto q = build_xn(o.n);
    auto girth_cycle = girth(q.graph);
    Json classes = Json::array();
    std::ostringstream table;
    table << "X_" << o.n << ": " << q.graph.vertex_count() << " classes, " << q.graph.edge_count()
          << " edges, girth " << (girth_cycle ? std::to_string(girth_cycle->length()) : "acyclic") << "\n";
    for (Vertex c = 0; c < q.graph.vertex_count(); ++c) {
        auto a = format_bh_id(fiber_member(c, 0), o.n);
        auto b = format_bh_id(fiber_member(c, 1), o.n);
        classes.push_back(Json::array({a, b}));
        if (q.graph.vertex_count() <= 64)
            table << "  class " << class_label(c, o.n) << " = {(" << a << "), (" << b << ")}\n";
    }
    if (! o.out.empty())
        write_file(o.out, q.graph, "X n=" + std::to_string(o.n));
    Json j{{"n", o.n},
           {"classes", q.graph.vertex_count()},
           {"edges", q.graph.edge_count()},
           {"girth", girth_cycle ? Json(girth_cycle->length()) : Json("acyclic")},
           {"fibres", std::move(classes)}};
    emit(o, j, table.str());
    return exit_ok;
}

auto cmd_neighbors(const Options & o) -> int
{
    auto v = parse_bh_vertex(o.vertex);
    int n = v.dimension();
    if (o.n != 0 && o.n != n)
        throw InputError("--vertex has " + std::to_string(n) + " digits but --n is " + std::to_string(o.n));
    auto nbrs = bh_neighbors(n, v);
    Json list = Json::array();
    std::string human = "(" + format_bh_vertex(v) + ") in BH_" + std::to_string(n) + ", degree "
                        + std::to_string(nbrs.size()) + "\n";
    for (const auto & w : nbrs) {
        list.push_back(format_bh_vertex(w));
        human += "  (" + format_bh_vertex(w) + ")\n";
    }
    auto eq = format_bh_vertex(equivalent_vertex(n, v));
    human += "equivalent vertex (" + eq + ")\n";
    emit(o, Json{{"n", n}, {"vertex", format_bh_vertex(v)}, {"neighbors", std::move(list)}, {"equivalent", eq}},
         human);
    return exit_ok;
}

auto cmd_girth(const Options & o) -> int
{
    require_n(o, 1, 10);
    Graph g = o.quotient ? build_xn(o.n).graph : build_bh(o.n);
    auto c = girth(g);
    Json cycle = Json::array();
    std::string human = std::string(o.quotient ? "X_" : "BH_") + std::to_string(o.n) + " girth ";
    if (! c) {
        emit(o, Json{{"n", o.n}, {"graph", o.quotient ? "X" : "BH"}, {"girth", "acyclic"}}, human + "acyclic\n");
        return exit_ok;
    }
    human += std::to_string(c->length()) + ", cycle";
    for (auto v : c->vertices) {
        auto label = o.quotient ? class_label(v, o.n) : "(" + format_bh_id(v, o.n) + ")";
        cycle.push_back(label);
        human += " " + label;
    }
    emit(o, Json{{"n", o.n}, {"graph", o.quotient ? "X" : "BH"}, {"girth", c->length()}, {"cycle", std::move(cycle)}},
         human + "\n");
    return exit_ok;
}

auto cmd_eg(const Options & o) -> int
{
    require_n(o, 1, 15);
    require_g(o);
    if (o.method == "brute") {
        auto graph = small_bh(o.n, 1U << 12);
        auto w = eg_exhaustive(graph, o.g, search_budget(o));
        emit(o, witness_to_json(w, o.n, o.g),
             "e_" + std::to_string(o.g) + "(BH_" + std::to_string(o.n) + ") = " + std::to_string(w.induced_edge_count)
                 + " (exhaustive), witness " + vertex_list(w.vertices, o.n) + "\n");
        return exit_ok;
    }
    auto b = eg_bounds(o.n, o.g, bounds_options(o));
    std::ostringstream human;
    human << "e_" << o.g << "(BH_" << o.n << "): lower " << b.lower << ", upper "
          << (b.upper ? std::to_string(*b.upper) : std::string("unknown")) << "\n";
    for (const auto & w : b.witnesses)
        human << "  " << std::left << std::setw(30) << w.construction << std::right << std::setw(4)
              << w.induced_edge_count << "  " << std::setw(16) << std::left << to_string(w.certification)
              << std::right << vertex_list(w.vertices, o.n) << "\n";
    emit(o, eg_bounds_to_json(b), human.str());
    return exit_ok;
}

auto cut_document(const CutWitness & w, int n, const std::string & method) -> Json
{
    Json j{{"value", w.cut_size}, {"method", method}};
    auto cut = cut_to_json(w, n);
    for (auto it = cut.begin(); it != cut.end(); ++it)
        if (it.key() != "value")
            j[it.key()] = it.value();
    return j;
}

auto cut_human(const std::string & quantity, const CutWitness & w, int n, const std::string & method) -> std::string
{
    return quantity + "_" + std::to_string(w.g) + "(BH_" + std::to_string(n) + ") = " + std::to_string(w.cut_size)
           + " (" + method + ")\n  U = " + vertex_list(w.side_u, n) + "\n  smallest component in U "
           + std::to_string(w.min_component_u) + ", outside U " + std::to_string(w.min_component_ubar) + "\n";
}

auto cmd_beta(const Options & o) -> int
{
    require_n(o, 1, 6);
    require_g(o);
    bool shortcut = o.method != "brute";
    auto graph = small_bh(o.n, 1U << 12);
    auto w = beta_g(graph, o.g, shortcut, search_budget(o));
    auto method = shortcut ? std::string("regular-shortcut") : std::string("direct");
    emit(o, cut_document(w, o.n, method), cut_human("beta", w, o.n, method));
    return exit_ok;
}

auto not_connected(const Options & o, const std::string & quantity) -> int
{
    emit(o, Json{{"value", nullptr}, {"n", o.n}, {"g", o.g}, {"reason", "no qualifying vertex set"}},
         quantity + "_" + std::to_string(o.g) + "(BH_" + std::to_string(o.n) + "): no qualifying vertex set\n");
    return exit_ok;
}

auto cmd_gamma(const Options & o) -> int
{
    require_n(o, 1, 2);
    require_g(o);
    auto w = gamma_g_bruteforce(small_bh(o.n, kBruteForceMaxVertices), o.g);
    if (! w)
        return not_connected(o, "gamma");
    emit(o, cut_document(*w, o.n, "brute"), cut_human("gamma", *w, o.n, "brute"));
    return exit_ok;
}

auto interval_text(const PipelineReport & r) -> std::string
{
    if (auto exact = r.lambda_exact())
        return std::to_string(*exact);
    auto end = [](const std::optional<long long> & v) { return v ? std::to_string(*v) : std::string("?"); };
    return "[" + end(r.lambda_low) + ", " + end(r.lambda_high) + "]";
}

auto pipeline_human(const PipelineReport & r) -> std::string
{
    std::ostringstream out;
    auto row = [&](const std::string & key, const std::string & value) {
        out << "  " << std::left << std::setw(18) << key << value << "\n";
    };
    out << "BH_" << r.n << ", g = " << r.g << "\n";
    row("cond_order", r.cond_order ? "holds" : "fails");
    row("cond_degree", to_string(r.cond_degree));
    row("e_g", std::to_string(r.eg_lower) + " .. " + (r.eg_upper ? std::to_string(*r.eg_upper) : "unknown"));
    row("lambda_g", interval_text(r));
    row("conjecture", std::to_string(r.conjecture_value));
    row("verdict", to_string(r.verdict));
    row("edge-transitive", r.edge_transitivity);
    for (const auto & reason : r.reasons)
        out << "  - " << reason << "\n";
    return out.str();
}

auto cmd_lambda(const Options & o) -> int
{
    require_n(o, 1, kMaxDimension);
    require_g(o);
    auto method = o.method;
    if (method == "auto")
        method = (std::size_t{1} << (2 * o.n)) <= kBruteForceMaxVertices ? "brute" : "pipeline";
    if (method == "brute") {
        auto w = lambda_g_bruteforce(small_bh(o.n, kBruteForceMaxVertices), o.g);
        if (! w)
            return not_connected(o, "lambda");
        emit(o, cut_document(*w, o.n, "brute"), cut_human("lambda", *w, o.n, "brute"));
        return exit_ok;
    }
    auto r = theorem_pipeline(o.n, o.g, bounds_options(o));
    auto exact = r.lambda_exact();
    Json j{{"value", exact ? Json(*exact) : Json(nullptr)},
           {"method", "pipeline"},
           {"interval", Json::array({r.lambda_low ? Json(*r.lambda_low) : Json(nullptr),
                                     r.lambda_high ? Json(*r.lambda_high) : Json(nullptr)})},
           {"report", pipeline_to_json(r)}};
    emit(o, j, pipeline_human(r));
    return exit_ok;
}

auto cmd_pipeline(const Options & o) -> int
{
    require_n(o, 1, 15);
    require_g(o);
    auto r = theorem_pipeline(o.n, o.g, bounds_options(o));
    emit(o, pipeline_to_json(r), pipeline_human(r));
    return exit_ok;
}

auto cmd_construct(const Options & o) -> int
{
    require_n(o, 1, 15);
    require_g(o, 2);
    auto kind = o.kind;
    if (kind == "auto")
        kind = o.g <= 8 ? "k2-star" : "dense";
    auto w = kind == "k2-star" ? construct_k2_star(o.n, o.g) : construct_dense_witness(o.n, o.g);
    if (! revalidate(ImplicitBh(o.n), w, o.g))
        throw VerificationFailure("construction does not revalidate");
    emit(o, witness_to_json(w, o.n, o.g),
         w.construction + " in BH_" + std::to_string(o.n) + ", g = " + std::to_string(o.g) + ": "
             + std::to_string(w.vertices.size()) + " vertices, " + std::to_string(w.induced_edge_count)
             + " induced edges (2g-2 = " + std::to_string(2 * o.g - 2) + ")\n  " + vertex_list(w.vertices, o.n)
             + "\n");
    return exit_ok;
}

auto cmd_verify(const Options & o) -> int
{
    if (o.suite == "known-values") {
        auto rows = known_values_suite(bounds_options(o));
        std::ostringstream out;
        bool ok = true;
        for (const auto & r : rows) {
            ok = ok && r.pass;
            out << std::left << std::setw(4) << r.n << std::setw(4) << r.g << std::setw(8) << r.quantity
                << std::setw(3) << r.relation << std::right << std::setw(5) << r.expected << std::setw(6)
                << (r.computed ? std::to_string(*r.computed) : "-") << "  " << std::left << std::setw(18) << r.method
                << (r.pass ? "pass" : "FAIL") << "\n";
        }
        emit(o, known_values_to_json(rows), out.str());
        return ok ? exit_ok : exit_verification;
    }
    if (o.max_n < 2 || o.max_n > 6)
        throw InputError("--max-n must be in [2, 6]");
    auto report = verify_suite(o.max_n, std::chrono::duration<double>(o.budget), bounds_options(o));
    auto j = verify_report_to_json(report);
    if (! o.timings)
        for (auto & row : j["rows"])
            row.erase("elapsed_seconds");
    std::ostringstream out;
    for (const auto & r : report.rows) {
        out << std::left << std::setw(30) << r.group << std::setw(44) << r.name << std::setw(8) << to_string(r.status);
        if (o.timings)
            out << std::right << std::fixed << std::setprecision(3) << std::setw(9) << r.elapsed_seconds << "s  ";
        out << r.detail << "\n";
    }
    out << report.group_count() << " groups, " << (report.all_pass() ? "all pass" : "NOT all pass") << "\n";
    emit(o, j, out.str());
    return report.exit_code();
}

auto cmd_check_witness(const Options & o) -> int
{
    std::ifstream in(o.file);
    if (! in)
        throw InputError("cannot read " + o.file);
    Json j;
    try {
        j = Json::parse(in);
    }
    catch (const Json::parse_error & e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    if (j.contains("report"))
        j = j["report"];
    auto result = check_witness_json(j);
    emit(o, Json{{"ok", result.ok}, {"checked", result.checked}, {"message", result.message}},
         std::string(result.ok ? "ok: " : "FAILED: ") + result.message + "\n");
    return result.ok ? exit_ok : exit_verification;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Balanced hypercube BH_n: structure, extremal subgraphs and extra edge-connectivity"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "key=value file with budget defaults; flags override it");

    Options o;
    app.add_option("--budget", o.budget, "wall-clock budget in seconds")->check(CLI::PositiveNumber);
    app.add_option("--subset-budget", o.subset_budget, "maximum subsets for exhaustive enumeration");
    app.add_option("--top-k", o.top_k, "witnesses kept per search");
    app.add_flag("--json", o.json, "emit one JSON document");

    auto add_ng = [&](CLI::App * cmd, bool need_g) {
        cmd->add_option("--n", o.n, "dimension")->required();
        if (need_g)
            cmd->add_option("--g", o.g, "extra-connectivity order g")->required();
        cmd->add_flag("--json", o.json, "emit one JSON document");
    };
    auto method = [&](CLI::App * cmd, std::vector<std::string> choices) {
        cmd->add_option("--method", o.method, "solver")->check(CLI::IsMember(std::move(choices)));
    };

    auto * gen = app.add_subcommand("gen", "write the BH_n edge list");
    add_ng(gen, false);
    gen->add_option("--out", o.out, "output file");

    auto * quotient = app.add_subcommand("quotient", "the quotient X_n and its fibres");
    add_ng(quotient, false);
    quotient->add_option("--out", o.out, "write the X_n edge list here");

    auto * neighbors = app.add_subcommand("neighbors", "neighbours of one vertex");
    neighbors->add_option("--vertex", o.vertex, "digits a0,a1,...")->required();
    neighbors->add_option("--n", o.n, "dimension (checked against the vertex)");
    neighbors->add_flag("--json", o.json, "emit one JSON document");

    auto * girth_cmd = app.add_subcommand("girth", "girth with a shortest-cycle witness");
    add_ng(girth_cmd, false);
    girth_cmd->add_flag("--quotient", o.quotient, "use X_n instead of BH_n");

    auto * eg = app.add_subcommand("eg", "bounds on e_g(BH_n) with witnesses");
    add_ng(eg, true);
    method(eg, {"brute", "auto"});

    auto * beta = app.add_subcommand("beta", "beta_g(BH_n)");
    add_ng(beta, true);
    method(beta, {"brute", "auto"});

    auto * gamma = app.add_subcommand("gamma", "gamma_g(BH_n) by exhaustive sweep");
    add_ng(gamma, true);
    method(gamma, {"brute", "auto"});

    auto * lambda = app.add_subcommand("lambda", "lambda_g(BH_n), exact or as an interval");
    add_ng(lambda, true);
    method(lambda, {"brute", "pipeline", "auto"});

    auto * pipeline = app.add_subcommand("pipeline", "full report comparing lambda_g with 2(g+1)n-4g+4");
    add_ng(pipeline, true);

    auto * construct = app.add_subcommand("construct", "explicit dense (g+1)-vertex subgraph");
    add_ng(construct, true);
    construct->add_option("--kind", o.kind, "construction")->check(CLI::IsMember({"k2-star", "dense", "auto"}));

    auto * verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--suite", o.suite, "which suite")->check(CLI::IsMember({"all", "known-values"}));
    verify->add_option("--max-n", o.max_n, "largest dimension for structural checks");
    verify->add_flag("--timings", o.timings, "include elapsed seconds per row");
    verify->add_flag("--json", o.json, "emit one JSON document");

    auto * check = app.add_subcommand("check-witness", "revalidate a JSON witness or report");
    check->add_option("file", o.file, "JSON file")->required();
    check->add_flag("--json", o.json, "emit one JSON document");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    const std::vector<std::pair<CLI::App *, int (*)(const Options &)>> commands{
        {gen, cmd_gen},           {quotient, cmd_quotient}, {neighbors, cmd_neighbors}, {girth_cmd, cmd_girth},
        {eg, cmd_eg},             {beta, cmd_beta},         {gamma, cmd_gamma},         {lambda, cmd_lambda},
        {pipeline, cmd_pipeline}, {construct, cmd_construct}, {verify, cmd_verify},     {check, cmd_check_witness},
    };
    try {
        for (auto [cmd, run] : commands)
            if (cmd->parsed())
                return run(o);
    }
    catch (const InputError & e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const Refusal & e) {
        std::cerr << "refused: " << e.what() << "\n";
        return exit_refusal;
    }
    catch (const VerificationFailure & e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return exit_verification;
    }
    return exit_usage;
}
