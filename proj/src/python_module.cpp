#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rgenus/asymptotics.hpp"
#include "rgenus/census.hpp"
#include "rgenus/embedding.hpp"
#include "rgenus/error.hpp"
#include "rgenus/fragile.hpp"
#include "rgenus/graph.hpp"
#include "rgenus/harness.hpp"
#include "rgenus/random.hpp"

namespace py = pybind11;
using namespace rgenus;

namespace {

std::vector<Edge> to_edges(const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    std::vector<Edge> out;
    out.reserve(pairs.size());
    for (const auto& [u, v] : pairs) out.push_back({u, v});
    return out;
}

std::vector<std::pair<Vertex, Vertex>> from_edges(const std::vector<Edge>& edges) {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edges.size());
    for (const Edge& e : edges) out.emplace_back(e.u, e.v);
    return out;
}

Seed make_seed(std::uint64_t master, std::uint64_t index) { return Seed{master, index}; }

}  // namespace

PYBIND11_MODULE(_rgenus, m) {
    m.doc() = "Genus of random graphs: generators, exact and bounded genus, asymptotic formulas";

    PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> budget_exc, cap_exc, tol_exc;
    budget_exc.call_once_and_store_result([&] { return py::exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError); });
    cap_exc.call_once_and_store_result([&] { return py::exception<CycleCapExceeded>(m, "CycleCapExceeded", PyExc_RuntimeError); });
    tol_exc.call_once_and_store_result(
        [&] { return py::exception<ToleranceNotReached>(m, "ToleranceNotReached", PyExc_RuntimeError); });
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const BudgetExceeded& e) {
            py::object type = budget_exc.get_stored();
            py::object exc = type(e.what());
            exc.attr("best_upper") = e.best_upper();
            exc.attr("budget") = e.budget();
            PyErr_SetObject(type.ptr(), exc.ptr());
        } catch (const CycleCapExceeded& e) {
            py::set_error(cap_exc.get_stored(), e.what());
        } catch (const ToleranceNotReached& e) {
            py::set_error(tol_exc.get_stored(), e.what());
        } catch (const GraphError& e) {
            py::set_error(PyExc_ValueError, e.what());
        } catch (const DomainError& e) {
            py::set_error(PyExc_ValueError, e.what());
        }
    });

    py::class_<Graph>(m, "Graph")
        .def(py::init<std::size_t>(), py::arg("n"))
        .def(py::init([](std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
                 return Graph(n, to_edges(edges));
             }),
             py::arg("n"), py::arg("edges"))
        .def("order", &Graph::order)
        .def("size", &Graph::size)
        .def("edges", [](const Graph& g) { return from_edges(g.edges()); })
        .def("degree", &Graph::degree)
        .def("neighbors", [](const Graph& g, Vertex v) {
            if (v >= g.order()) throw py::index_error("vertex out of range");
            auto nb = g.neighbors(v);
            return std::vector<Vertex>(nb.begin(), nb.end());
        })
        .def("has_edge", &Graph::has_edge)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<rgenus.Graph order=" + std::to_string(g.order()) + " size=" + std::to_string(g.size()) + ">";
        });

    m.def("components", [](const Graph& g) { return components(g).kappa; });
    m.def("two_core", [](const Graph& g) { return two_core(g).graph; });
    m.def("cycles_up_to", [](const Graph& g, unsigned L, std::uint64_t cap) {
        std::vector<std::vector<Vertex>> out;
        for (auto& c : cycles_up_to(g, L, cap)) out.push_back(std::move(c.vertices));
        return out;
    }, py::arg("g"), py::arg("max_length"), py::arg("cap") = kDefaultCycleCap);

    m.def("gnm", [](std::size_t n, std::uint64_t edges, std::uint64_t seed, std::uint64_t index) {
        return gnm(n, edges, make_seed(seed, index));
    }, py::arg("n"), py::arg("m"), py::arg("seed") = 0, py::arg("index") = 0);
    m.def("gnp", [](std::size_t n, double p, std::uint64_t seed, std::uint64_t index) {
        return gnp(n, p, make_seed(seed, index));
    }, py::arg("n"), py::arg("p"), py::arg("seed") = 0, py::arg("index") = 0);
    m.def("kappa_trajectory", [](std::size_t n, std::uint64_t seed, std::optional<std::uint64_t> steps) {
        return kappa_trajectory(n, make_seed(seed, 0), steps);
    }, py::arg("n"), py::arg("seed") = 0, py::arg("steps") = py::none());

    m.def("exact_genus", [](const Graph& g, std::uint64_t budget) {
        const ExactGenus r = exact_genus(g, budget);
        py::dict d;
        d["genus"] = r.genus;
        d["f"] = r.f_min;
        d["visited"] = r.visited;
        return d;
    }, py::arg("g"), py::arg("budget") = kDefaultGenusBudget);
    m.def("genus_upper_bound", &genus_upper_bound);
    m.def("genus_lower_bound_short_cycles", &genus_lower_bound_short_cycles, py::arg("g"), py::arg("ell"),
          py::arg("cap") = kDefaultCycleCap);
    m.def("genus_lower_bound_density", &genus_lower_bound_density);

    m.def("u", [](double c, double tol) { return u(c, tol).value; }, py::arg("c"), py::arg("tol") = 1e-12);
    m.def("u_prime", [](double c, double tol) { return u_prime(c, tol).value; }, py::arg("c"), py::arg("tol") = 1e-12);
    m.def("mu", [](double lambda, double tol) { return mu(lambda, tol).value; }, py::arg("lam"), py::arg("tol") = 1e-12);
    m.def("lambda_i", &lambda_i, py::arg("i"), py::arg("tol") = 1e-10);
    m.def("predict_genus", [](std::uint64_t n, std::uint64_t edges) {
        const RegimePrediction p = predict_genus(n, edges);
        py::dict d;
        d["regime"] = to_string(p.regime);
        d["lo"] = p.lo;
        d["hi"] = p.hi;
        if (p.lambda) d["lambda"] = *p.lambda;
        if (p.s) d["s"] = *p.s;
        if (p.j) d["j"] = *p.j;
        return d;
    }, py::arg("n"), py::arg("m"));
    m.def("contiguity_verdict", [](std::uint64_t n, std::optional<std::uint64_t> edges, double g, double eps) {
        return to_string(contiguity_verdict(n, edges, g, eps));
    }, py::arg("n"), py::arg("m"), py::arg("g"), py::arg("eps"));

    m.def("count_Z", [](const Graph& g, std::uint64_t s, double i) { return count_Z(g, s, i).z; }, py::arg("g"),
          py::arg("s"), py::arg("i") = 1.0);
    m.def("supercritical_report", [](std::uint64_t n, std::uint64_t s, std::uint64_t seed, unsigned ell) {
        SupercriticalOptions opt;
        opt.ell = ell;
        const auto r = supercritical_report(n, s, make_seed(seed, 0), opt);
        py::dict d;
        d["m"] = r.m;
        d["giant_vertices"] = r.giant_vertices;
        d["core_vertices"] = r.core_vertices;
        d["core_edges"] = r.core_edges;
        d["core_excess"] = r.core_excess;
        d["genus_lower"] = r.genus_lower;
        d["genus_upper"] = r.genus_upper;
        d["predicted"] = r.predicted;
        if (r.z_value) d["z"] = *r.z_value;
        return d;
    }, py::arg("n"), py::arg("s"), py::arg("seed") = 0, py::arg("ell") = 4);
    m.def("fragile_experiment", [](const Graph& h, std::uint64_t delta, std::uint64_t k, std::uint64_t seed, unsigned ell) {
        const auto r = fragile_experiment(h, delta, k, make_seed(seed, 0), ell);
        py::dict d;
        d["l"] = r.l;
        d["t"] = r.t;
        d["gamma_edges"] = r.gamma_edges;
        d["good_edge_count"] = r.good_edge_count;
        d["genus_lower_gamma"] = r.genus_lower_gamma;
        d["upper_bound"] = r.upper_bound;
        d["dense_branch"] = r.dense_branch;
        return d;
    }, py::arg("h"), py::arg("delta"), py::arg("k"), py::arg("seed") = 0, py::arg("ell") = 4);
    m.def("path_graph", &path_graph);
    m.def("cycle_graph", &cycle_graph);
    m.def("grid_graph", &grid_graph);

    m.def("suite_names", &suite_names);
    m.def("_run_suite_json", [](const std::string& name, std::uint64_t seed, unsigned jobs) {
        ExperimentConfig c;
        c.command = "suite";
        c.suite = name;
        c.seed = seed;
        c.jobs = jobs;
        py::gil_scoped_release release;
        return run_suite(c).to_json().dump();
    }, py::arg("name"), py::arg("seed") = 0, py::arg("jobs") = 0);
}
