#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mec/coloring.hpp"
#include "mec/generators.hpp"
#include "mec/io.hpp"
#include "mec/kernels.hpp"
#include "mec/matching.hpp"
#include "mec/oracle.hpp"
#include "mec/solver.hpp"

namespace py = pybind11;
using namespace mec;

namespace {

ValidityProfile profile_of(int q, const std::optional<std::vector<int>>& f)
{
    return f ? ValidityProfile::per_vertex(*f) : ValidityProfile::uniform(q);
}

EdgeColoring coloring_of(const Graph& g, const std::vector<Color>& colors)
{
    if (static_cast<int>(colors.size()) != g.num_edges())
        throw InvalidInput("coloring needs one color per edge");
    return EdgeColoring(colors);
}

py::tuple edge_tuple(const Edge& e) { return py::make_tuple(e.u, e.v); }

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Maximum edge 2-coloring: exact solver, kernels, oracles and generators.";

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    auto invalid = py::register_exception<InvalidInput>(m, "InvalidInput", error.ptr());
    py::register_exception<ParseError>(m, "ParseError", invalid.ptr());
    auto refusal = py::register_exception<Refusal>(m, "Refusal", error.ptr());
    py::register_exception<EdgeLimitExceeded>(m, "EdgeLimitExceeded", refusal.ptr());
    py::register_exception<C4Found>(m, "C4Found", refusal.ptr());

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n") = 0)
        .def(py::init([](int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
                 Graph g(n);
                 for (const auto& [a, b] : edges)
                     g.add_edge(a, b);
                 return g;
             }),
             py::arg("n"), py::arg("edges"))
        .def("add_edge", &Graph::add_edge, py::arg("u"), py::arg("v"))
        .def_property_readonly("num_vertices", &Graph::num_vertices)
        .def_property_readonly("num_edges", &Graph::num_edges)
        .def_property_readonly("edges",
                               [](const Graph& g) {
                                   py::list out;
                                   for (const Edge& e : g.edges())
                                       out.append(edge_tuple(e));
                                   return out;
                               })
        .def("degree", &Graph::degree, py::arg("v"))
        .def("neighbors", &Graph::neighbors, py::arg("v"))
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.num_vertices()) + ", m=" + std::to_string(g.num_edges()) + ")";
        });

    m.def("load_graph", [](const std::string& text) { return load_graph(text); }, py::arg("text"));
    m.def("render_graph", [](const Graph& g) { return render_graph(g); }, py::arg("graph"));
    m.def(
        "render_coloring",
        [](const Graph& g, const std::vector<Color>& colors) { return render_coloring(g, coloring_of(g, colors)); },
        py::arg("graph"), py::arg("colors"));

    py::class_<VerifyReport>(m, "VerifyReport")
        .def_readonly("valid", &VerifyReport::valid)
        .def_readonly("colors_used", &VerifyReport::colors_used)
        .def_readonly("violations", &VerifyReport::violations)
        .def("__bool__", [](const VerifyReport& r) { return r.valid; });

    m.def(
        "verify",
        [](const Graph& g, const std::vector<Color>& colors, int q, const std::optional<std::vector<int>>& f) {
            return verify_coloring(g, coloring_of(g, colors), profile_of(q, f));
        },
        py::arg("graph"), py::arg("colors"), py::arg("q") = 2, py::arg("f") = py::none(),
        "Checks every vertex palette against its capacity; colors are one int per edge id.");

    m.def(
        "solve",
        [](const Graph& g, int k, int threads) -> std::optional<std::vector<Color>> {
            SolveResult r;
            {
                py::gil_scoped_release release;
                r = solve_exact(g, k, SolveOptions{threads, nullptr});
            }
            if (!r.yes)
                return std::nullopt;
            return r.witness->colors();
        },
        py::arg("graph"), py::arg("k"), py::arg("threads") = 1,
        "A 2-valid coloring with exactly k colors (per edge id), or None when none exists.");

    m.def(
        "sigma_exact",
        [](const Graph& g, int q, const std::optional<std::vector<int>>& f, int edge_limit) {
            const SigmaResult r = sigma_exact(g, profile_of(q, f), edge_limit);
            return py::make_tuple(r.sigma, r.witness.colors());
        },
        py::arg("graph"), py::arg("q") = 2, py::arg("f") = py::none(), py::arg("edge_limit") = kDefaultEdgeLimit,
        "(sigma, witness colors) by exhaustive search; refuses above edge_limit edges.");

    m.def(
        "sigma_frontier",
        [](const Graph& g, int q, const std::optional<std::vector<int>>& f) {
            SigmaResult r;
            {
                py::gil_scoped_release release;
                r = sigma_frontier(g, profile_of(q, f));
            }
            return py::make_tuple(r.sigma, r.witness.colors());
        },
        py::arg("graph"), py::arg("q") = 2, py::arg("f") = py::none());

    m.def(
        "approx_coloring", [](const Graph& g) { return matching_coloring(g, maximal_matching(g)).colors(); },
        py::arg("graph"), "Matching-based coloring with r or r+1 colors for a maximal matching of size r.");

    py::class_<KernelResult>(m, "KernelResult")
        .def_property_readonly("verdict",
                               [](const KernelResult& r) {
                                   switch (r.verdict) {
                                   case KernelVerdict::reduced:
                                       return "reduced";
                                   case KernelVerdict::forced_yes:
                                       return "yes";
                                   case KernelVerdict::forced_no:
                                       break;
                                   }
                                   return "no";
                               })
        .def_readonly("graph", &KernelResult::graph)
        .def_readonly("parameter", &KernelResult::parameter)
        .def_readonly("threshold", &KernelResult::threshold)
        .def_readonly("cover", &KernelResult::cover)
        .def_property_readonly("witness",
                               [](const KernelResult& r) -> std::optional<std::vector<Color>> {
                                   if (!r.witness)
                                       return std::nullopt;
                                   return r.witness->colors();
                               })
        .def_property_readonly("lifting", [](const KernelResult& r) { return render_lifting(r.lifting); });

    m.def(
        "kernelize",
        [](const Graph& g, int k, const std::string& rule) { return kernelize(g, k, parse_kernel_rule(rule)); },
        py::arg("graph"), py::arg("k"), py::arg("rule") = "standard",
        "rule is one of 'standard', 'dual', 'c4free'.");

    m.def(
        "lift_coloring",
        [](const Graph& original, const KernelResult& kernel, const std::vector<Color>& colors) {
            return lift_coloring(original, kernel.lifting, kernel.graph, coloring_of(kernel.graph, colors)).colors();
        },
        py::arg("original"), py::arg("kernel"), py::arg("colors"),
        "Carries a coloring of kernel.graph back to the original graph.");

    m.def("gen_random", &gen_random, py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def("gen_two_factor", &gen_two_factor, py::arg("n"), py::arg("seed"));
}
