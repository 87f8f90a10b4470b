#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trc/classifier.hpp"
#include "trc/coloring.hpp"
#include "trc/families.hpp"
#include "trc/graph.hpp"
#include "trc/ng.hpp"
#include "trc/solver.hpp"

namespace py = pybind11;
using namespace trc;

namespace {

SolveBudget make_budget(std::uint64_t nodes, long long ms, int threads) {
    SolveBudget b;
    b.node_cap = nodes;
    b.time_cap = std::chrono::milliseconds(ms);
    b.threads = threads;
    return b;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "total-rainbow connection toolkit";

    py::class_<Graph>(m, "Graph")
        .def(py::init<>())
        .def(py::init<int>(), py::arg("n"))
        .def_static("from_graph6", &Graph::from_graph6, py::arg("text"))
        .def_static("from_edge_list", &Graph::from_edge_list, py::arg("text"))
        .def("to_graph6", &Graph::to_graph6)
        .def("to_edge_list", &Graph::to_edge_list)
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("add_edge", &Graph::add_edge, py::arg("u"), py::arg("v"))
        .def("degree", &Graph::degree, py::arg("v"))
        .def("complement", &Graph::complement)
        .def("connected", &Graph::connected)
        .def("edges", &Graph::edges)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__",
             [](const Graph& g) { return "Graph(graph6=" + g.to_graph6() + ")"; });

    py::class_<TotalColoring>(m, "TotalColoring")
        .def(py::init<>())
        .def_readwrite("vertex_colors", &TotalColoring::vertex_colors)
        .def_readwrite("edge_colors", &TotalColoring::edge_colors)
        .def("palette", &TotalColoring::palette);

    py::class_<SolveStats>(m, "SolveStats")
        .def_readonly("nodes", &SolveStats::nodes)
        .def_readonly("seconds", &SolveStats::seconds);

    py::class_<TrcResult>(m, "TrcResult")
        .def_readonly("lo", &TrcResult::lo)
        .def_readonly("hi", &TrcResult::hi)
        .def("exact", &TrcResult::exact)
        .def_readonly("certificate", &TrcResult::certificate)
        .def_readonly("method", &TrcResult::method)
        .def_readonly("stats", &TrcResult::stats)
        .def("__repr__", [](const TrcResult& r) {
            return r.exact() ? "TrcResult(" + std::to_string(r.lo) + ")"
                             : "TrcResult([" + std::to_string(r.lo) + "," +
                                   std::to_string(r.hi) + "])";
        });

    m.def(
        "solve_trc",
        [](const Graph& g, std::uint64_t nodes, long long ms, int threads) {
            return solve_trc(g, make_budget(nodes, ms, threads));
        },
        py::arg("g"), py::arg("node_cap") = SolveBudget{}.node_cap,
        py::arg("time_cap_ms") = SolveBudget{}.time_cap.count(), py::arg("threads") = 1,
        py::call_guard<py::gil_scoped_release>());
    m.def(
        "compute_trc",
        [](const Graph& g, std::uint64_t nodes, long long ms, int threads) {
            return compute_trc(g, make_budget(nodes, ms, threads));
        },
        py::arg("g"), py::arg("node_cap") = SolveBudget{}.node_cap,
        py::arg("time_cap_ms") = SolveBudget{}.time_cap.count(), py::arg("threads") = 1,
        py::call_guard<py::gil_scoped_release>());
    m.def(
        "trc_bounds",
        [](const Graph& g) {
            auto b = trc_bounds(g);
            return py::make_tuple(b.lower.value, b.upper.value);
        },
        py::arg("g"));
    m.def(
        "verify",
        [](const Graph& g, const TotalColoring& c) { return verify_trc(g, c).valid; },
        py::arg("g"), py::arg("coloring"));
    m.def("coloring_to_text", &coloring_to_text, py::arg("g"), py::arg("coloring"));
    m.def("coloring_from_text", &coloring_from_text, py::arg("g"), py::arg("text"));
    m.def(
        "classify_line",
        [](const Graph& g) {
            auto rep = classify(g);
            auto res = compute_trc(g);
            return report_line(rep, res);
        },
        py::arg("g"), py::call_guard<py::gil_scoped_release>());
    m.def(
        "generate", [](const std::string& spec) { return generate(spec); }, py::arg("spec"));
    m.def("ng_bound", &ng_bound, py::arg("n"));
}
