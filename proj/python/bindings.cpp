// Python bindings for the automorphism solver: graph construction, DIMACS
// round-trip, solve, and the brute-force oracle for cross-checks.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "autgrp/dimacs.hpp"
#include "autgrp/graph.hpp"
#include "autgrp/oracle.hpp"
#include "autgrp/solver.hpp"

namespace py = pybind11;
using namespace autgrp;

namespace {

SelectorPolicy selector_from_string(const std::string& s) {
    if (s == "first_largest") return SelectorPolicy::first_largest;
    if (s == "first_smallest") return SelectorPolicy::first_smallest;
    if (s == "first") return SelectorPolicy::first;
    throw py::value_error("unknown selector: " + s);
}

// cpp_int -> arbitrary-precision python int, via decimal text
py::int_ to_py_int(const BigInt& v) {
    std::ostringstream os;
    os << v;
    PyObject* obj = PyLong_FromString(os.str().c_str(), nullptr, 10);
    if (obj == nullptr) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

} // namespace

PYBIND11_MODULE(_autgrp, m) {
    m.doc() = "randomized graph-automorphism solver";

    py::class_<Permutation>(m, "Permutation")
        .def(py::init<std::vector<int>>(), py::arg("image"))
        .def_static("from_cycles", &Permutation::from_cycles, py::arg("text"),
                    py::arg("n"))
        .def_property_readonly("image", &Permutation::image)
        .def("__call__", [](const Permutation& p, int v) { return p(v); })
        .def("__len__", &Permutation::degree)
        .def("__eq__", &Permutation::operator==)
        .def("inverse", &Permutation::inverse)
        .def("compose", &Permutation::compose)
        .def("to_cycles", &Permutation::to_cycles)
        .def("__repr__", [](const Permutation& p) {
            return "Permutation(" + p.to_cycles() + ")";
        });

    py::class_<ColoredGraph>(m, "Graph")
        .def(py::init<int, const std::vector<std::pair<int, int>>&,
                      std::vector<int>>(),
             py::arg("n"), py::arg("edges"), py::arg("colors") = std::vector<int>{})
        .def_property_readonly("n", &ColoredGraph::n)
        .def_property_readonly("m", &ColoredGraph::m)
        .def_property_readonly("colors", &ColoredGraph::colors)
        .def("neighbors",
             [](const ColoredGraph& g, int v) {
                 auto span = g.neighbors(v);
                 return std::vector<int>(span.begin(), span.end());
             })
        .def("has_edge", &ColoredGraph::has_edge)
        .def("to_dimacs", [](const ColoredGraph& g) { return to_dimacs(g); })
        .def("__eq__", &ColoredGraph::operator==)
        .def("__repr__", [](const ColoredGraph& g) {
            return "Graph(n=" + std::to_string(g.n()) +
                   ", m=" + std::to_string(g.m()) + ")";
        });

    m.def("parse_dimacs",
          [](const std::string& text) { return parse_dimacs(text); },
          py::arg("text"));
    m.def("load_dimacs", &load_dimacs, py::arg("path"));
    m.def("is_automorphism", &is_automorphism, py::arg("graph"), py::arg("phi"));

    py::class_<SolverResult>(m, "SolveResult")
        .def_property_readonly(
            "generators", [](const SolverResult& r) { return r.generators; })
        .def_property_readonly(
            "order", [](const SolverResult& r) { return to_py_int(r.group_order); })
        .def_property_readonly("base",
                               [](const SolverResult& r) { return r.base; })
        .def_property_readonly(
            "deterministic",
            [](const SolverResult& r) {
                return r.termination == Termination::deterministic;
            })
        .def_property_readonly("epsilon",
                               [](const SolverResult& r) { return r.epsilon; })
        .def_property_readonly(
            "stats",
            [](const SolverResult& r) {
                py::dict d;
                d["walks"] = r.stats.walks;
                d["nodes_expanded"] = r.stats.nodes_expanded;
                d["uniform_samples"] = r.stats.uniform_samples;
                d["bfs_levels"] = r.stats.bfs_levels;
                return d;
            })
        .def("__repr__", [](const SolverResult& r) {
            std::ostringstream os;
            os << "SolveResult(order=" << r.group_order << ", "
               << (r.termination == Termination::deterministic ? "deterministic"
                                                               : "probabilistic")
               << ")";
            return os.str();
        });

    m.def(
        "solve",
        [](const ColoredGraph& g, double epsilon, int threads, uint64_t seed,
           const std::string& selector) {
            SolveOptions o;
            o.epsilon = epsilon;
            o.threads = threads;
            o.seed = seed;
            o.selector = selector_from_string(selector);
            py::gil_scoped_release release;
            return solve(g, o);
        },
        py::arg("graph"), py::arg("epsilon") = 0.01, py::arg("threads") = 1,
        py::arg("seed") = 0, py::arg("selector") = "first_largest");

    m.def(
        "brute_force_order",
        [](const ColoredGraph& g) {
            return brute_force_automorphisms(g, true).order();
        },
        py::arg("graph"), "exhaustive ground truth, n <= 10 only");
}
