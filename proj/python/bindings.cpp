#include "bhx/balanced_hypercube.hpp"
#include "bhx/errors.hpp"
#include "bhx/extra_connectivity.hpp"
#include "bhx/extremal.hpp"
#include "bhx/graph.hpp"
#include "bhx/json_io.hpp"
#include "bhx/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace bhx;

namespace {

auto to_python(const Json & j) -> py::object
{
    return py::module_::import("json").attr("loads")(j.dump());
}

auto from_python(const py::object & o) -> Json
{
    return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

/// Witnesses on arbitrary graphs carry raw ids; BH witnesses use digit strings.
auto plain_witness(const SubgraphWitness & w) -> py::dict
{
    py::dict d;
    d["vertices"] = w.vertices;
    d["edges"] = w.induced_edge_count;
    d["certification"] = to_string(w.certification);
    d["upper_bound"] = w.upper_bound ? py::cast(*w.upper_bound) : py::none();
    return d;
}

auto plain_cut(const std::optional<CutWitness> & w) -> py::object
{
    if (! w)
        return py::none();
    py::dict d;
    d["value"] = w->cut_size;
    d["side_u"] = w->side_u;
    d["cut_edges"] = w->cut_edges;
    d["min_component_u"] = w->min_component_u;
    d["min_component_ubar"] = w->min_component_ubar;
    d["certifies"] = to_string(w->certifies);
    return d;
}

auto budget_of(double seconds) -> EgBoundsOptions
{
    EgBoundsOptions o;
    o.budget.wall = std::chrono::duration<double>(seconds);
    return o;
}

} // namespace

PYBIND11_MODULE(_bhx, m)
{
    m.doc() = "Balanced hypercubes, extremal induced subgraphs and g-extra edge-connectivity";

    static py::exception<Refusal> refusal(m, "Refusal", PyExc_RuntimeError);
    static py::exception<VerificationFailure> verification(m, "VerificationFailure", PyExc_AssertionError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        }
        catch (const Refusal & e) {
            py::set_error(refusal, e.what());
        }
        catch (const VerificationFailure & e) {
            py::set_error(verification, e.what());
        }
    });

    py::class_<Graph>(m, "Graph")
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("edges", [](const Graph & g) { return std::vector<Edge>(g.edges().begin(), g.edges().end()); })
        .def("neighbors",
             [](const Graph & g, Vertex v) {
                 if (v >= g.vertex_count())
                     throw py::index_error("vertex out of range");
                 return std::vector<Vertex>(g.neighbors(v).begin(), g.neighbors(v).end());
             })
        .def("adjacent", &Graph::adjacent)
        .def("__repr__", [](const Graph & g) {
            return "<Graph " + std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count())
                   + " edges>";
        });

    m.def("build_graph", [](std::size_t n, const std::vector<Edge> & edges) { return build_graph(n, edges); },
          py::arg("vertex_count"), py::arg("edges"));
    m.def("build_bh", [](int n) { return build_bh(n); }, py::arg("n"), "Materialised BH_n; ids are sum a_i 4^i.");
    m.def("build_xn", [](int n) { return build_xn(n).graph; }, py::arg("n"));

    m.def("encode", [](const std::string & v) { return bh_encode(parse_bh_vertex(v)); }, py::arg("vertex"));
    m.def("decode", [](BhId id, int n) { return format_bh_id(id, n); }, py::arg("id"), py::arg("n"));
    m.def(
        "neighbors",
        [](const std::string & v) {
            auto vertex = parse_bh_vertex(v);
            std::vector<std::string> out;
            for (const auto & w : bh_neighbors(vertex.dimension(), vertex))
                out.push_back(format_bh_vertex(w));
            return out;
        },
        py::arg("vertex"));
    m.def(
        "equivalent_vertex",
        [](const std::string & v) {
            auto vertex = parse_bh_vertex(v);
            return format_bh_vertex(equivalent_vertex(vertex.dimension(), vertex));
        },
        py::arg("vertex"));

    m.def(
        "girth",
        [](const Graph & g) -> py::object {
            auto c = girth(g);
            return c ? py::cast(c->vertices) : py::none();
        },
        py::arg("graph"), "Shortest cycle as a vertex list, or None for a forest.");
    m.def("boundary", [](const Graph & g, const std::vector<Vertex> & u) { return boundary(g, u).value; },
          py::arg("graph"), py::arg("subset"));
    m.def("edge_orbit_count", [](const Graph & g) { return edge_orbits(g).orbit_count; }, py::arg("graph"));

    m.def("eg_exhaustive", [](const Graph & g, int extra) { return plain_witness(eg_exhaustive(g, extra)); },
          py::arg("graph"), py::arg("g"));
    m.def("eg_exact", [](const Graph & g, int extra) { return plain_witness(eg_exact(g, extra)); },
          py::arg("graph"), py::arg("g"));
    m.def("eg_bounds",
          [](int n, int extra, double seconds) { return to_python(eg_bounds_to_json(eg_bounds(n, extra, budget_of(seconds)))); },
          py::arg("n"), py::arg("g"), py::arg("budget") = 60.0);
    m.def(
        "construct",
        [](int n, int extra, const std::string & kind) {
            auto w = kind == "k2-star" ? construct_k2_star(n, extra) : construct_dense_witness(n, extra);
            return to_python(witness_to_json(w, n, extra));
        },
        py::arg("n"), py::arg("g"), py::arg("kind") = "dense");

    m.def("beta", [](const Graph & g, int extra, bool shortcut) { return plain_cut(beta_g(g, extra, shortcut)); },
          py::arg("graph"), py::arg("g"), py::arg("shortcut") = true);
    m.def("gamma", [](const Graph & g, int extra) { return plain_cut(gamma_g_bruteforce(g, extra)); },
          py::arg("graph"), py::arg("g"));
    m.def("extra_edge_connectivity", [](const Graph & g, int extra) { return plain_cut(lambda_g_bruteforce(g, extra)); },
          py::arg("graph"), py::arg("g"), "lambda_g by exhaustive sweep; None when no g-extra cut exists.");
    m.def("conjecture_value", &conjecture_value, py::arg("n"), py::arg("g"));
    m.def("pipeline",
          [](int n, int extra, double seconds) { return to_python(pipeline_to_json(theorem_pipeline(n, extra, budget_of(seconds)))); },
          py::arg("n"), py::arg("g"), py::arg("budget") = 60.0);
    m.def("verify", [](int max_n, double seconds) {
              return to_python(verify_report_to_json(verify_suite(max_n, std::chrono::duration<double>(seconds))));
          },
          py::arg("max_n") = 3, py::arg("budget") = 3600.0);
    m.def(
        "check_witness",
        [](const py::object & doc) {
            auto r = check_witness_json(from_python(doc));
            py::dict d;
            d["ok"] = r.ok;
            d["checked"] = r.checked;
            d["message"] = r.message;
            return d;
        },
        py::arg("document"));
}
