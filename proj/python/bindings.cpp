#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pitvd/exact_solver.hpp"
#include "pitvd/harness.hpp"
#include "pitvd/io.hpp"
#include "pitvd/kernel.hpp"
#include "pitvd/recognition.hpp"

namespace py = pybind11;
using namespace pitvd;

namespace {

BootstrapMode parse_mode(const std::string& name) {
    if (name == "exact") return BootstrapMode::Exact;
    if (name == "greedy") return BootstrapMode::Greedy;
    throw py::value_error("bootstrap must be 'exact' or 'greedy'");
}

py::dict kernel_dict(const KernelInstance& ki) {
    py::dict out;
    out["graph"] = ki.graph;
    out["k"] = ki.k;
    out["decided_no"] = ki.decided_no;
    out["base_set"] = ki.base_set;
    out["trace"] = trace_to_json(ki.trace).dump();
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Kernelization for deleting vertices down to a (proper interval, tree)-graph";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ScaleGuardError>(m, "ScaleGuardError", PyExc_RuntimeError);

    py::class_<MultiGraph>(m, "MultiGraph")
        .def(py::init<>())
        .def(py::init<std::size_t>(), py::arg("n"))
        .def("add_vertex", py::overload_cast<>(&MultiGraph::add_vertex))
        .def("add_edge", &MultiGraph::add_edge, py::arg("u"), py::arg("v"), py::arg("multiplicity") = 1)
        .def("set_multiplicity", &MultiGraph::set_multiplicity)
        .def("multiplicity", &MultiGraph::multiplicity)
        .def("delete_vertex", &MultiGraph::delete_vertex)
        .def("vertices", &MultiGraph::vertices)
        .def("edges", &MultiGraph::edges)
        .def("degree", &MultiGraph::degree)
        .def("num_vertices", &MultiGraph::num_vertices)
        .def("num_edges", &MultiGraph::num_edges)
        .def("__eq__", [](const MultiGraph& a, const MultiGraph& b) { return a == b; })
        .def("__repr__", [](const MultiGraph& g) {
            return "<MultiGraph " + std::to_string(g.num_vertices()) + " vertices, " + std::to_string(g.num_edges()) +
                   " edges>";
        });

    m.def("parse_instance", [](const std::string& text) {
        Instance in = parse_instance(text);
        return py::make_tuple(in.graph, in.k);
    }, py::arg("text"), "Parse the text format; returns (graph, k).");
    m.def("serialize_instance", &serialize_instance, py::arg("graph"), py::arg("k"));
    m.def("generate", [](std::size_t n, double density, double double_rate, std::uint64_t seed) {
        GeneratorParams p;
        p.n = n;
        p.density = density;
        p.double_rate = double_rate;
        p.seed = seed;
        return generate_multigraph(p);
    }, py::arg("n"), py::arg("density") = 0.3, py::arg("double_rate") = 0.1, py::arg("seed") = 1);

    m.def("is_pitg", [](const MultiGraph& g) -> py::object {
        PitgVerdict v = is_pitg(g);
        if (v.yes()) return py::none();
        py::dict w;
        w["kind"] = to_string(v.obstruction->kind);
        w["vertices"] = v.obstruction->vertex_set();
        return w;
    }, py::arg("graph"), "None for a (proper interval, tree)-graph, otherwise an obstruction.");

    m.def("decide", [](const MultiGraph& g, int k) {
        Decision d = decide(g, k);
        return py::make_tuple(d.yes, d.solution);
    }, py::arg("graph"), py::arg("k"), "(answer, solution) from the exact solver.");

    m.def("kernelize", [](const MultiGraph& g, int k, const std::string& bootstrap, int mutation) {
        KernelOptions opts;
        opts.bootstrap = parse_mode(bootstrap);
        opts.mutation = mutation;
        return kernel_dict(kernelize(g, k, opts));
    }, py::arg("graph"), py::arg("k"), py::arg("bootstrap") = "exact", py::arg("mutation") = 0);

    m.def("replay", [](const MultiGraph& g, int k, const std::string& trace) {
        return kernel_dict(replay(g, k, trace_from_json(nlohmann::json::parse(trace))));
    }, py::arg("graph"), py::arg("k"), py::arg("trace"));

    m.def("verify", [](std::size_t count, std::size_t max_n, int max_k, std::uint64_t seed, const std::string& bootstrap) {
        VerifyOptions opts;
        opts.count = count;
        opts.max_n = max_n;
        opts.max_k = max_k;
        opts.seed = seed;
        opts.kernel.bootstrap = parse_mode(bootstrap);
        py::list out;
        for (const VerifyRecord& r : run_verify(opts)) {
            py::dict d;
            d["index"] = r.index;
            d["pass"] = r.pass;
            d["input_yes"] = r.input_yes;
            d["kernel_yes"] = r.kernel_yes;
            d["n_before"] = r.n_before;
            d["n_after"] = r.n_after;
            d["error"] = r.error;
            out.append(d);
        }
        return out;
    }, py::arg("count") = 100, py::arg("max_n") = 12, py::arg("max_k") = 4, py::arg("seed") = 1,
       py::arg("bootstrap") = "exact");
}
