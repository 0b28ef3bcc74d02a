// Python bindings for the core operations: graph construction, coverage
// checks, bounds, closed-form sets, exact solving and conformance sweeps.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <chrono>
#include <sstream>

#include "ktdom/conformance.hpp"
#include "ktdom/constructions.hpp"
#include "ktdom/domination.hpp"
#include "ktdom/errors.hpp"
#include "ktdom/harary.hpp"
#include "ktdom/io.hpp"
#include "ktdom/solver.hpp"

namespace py = pybind11;
using namespace ktdom;

namespace {

std::chrono::milliseconds as_budget(long long ms) {
    return std::chrono::milliseconds(ms);
}

void bind_graph(py::module_& m) {
    py::enum_<ParityClass>(m, "ParityClass")
        .value("EVEN_D", ParityClass::EvenDegree)
        .value("ODD_D_EVEN_N", ParityClass::OddDegreeEvenOrder)
        .value("ODD_D_ODD_N", ParityClass::OddDegreeOddOrder);

    py::class_<HararyParams>(m, "HararyParams")
        .def(py::init<int, int>(), py::arg("d"), py::arg("n"))
        .def_readonly("d", &HararyParams::d)
        .def_readonly("n", &HararyParams::n)
        .def("parity_class", &HararyParams::parity_class)
        .def("half_degree", &HararyParams::half_degree)
        .def("validate", &HararyParams::validate)
        .def("__repr__", [](const HararyParams& p) {
            std::ostringstream out;
            out << "HararyParams(d=" << p.d << ", n=" << p.n << ")";
            return out.str();
        });

    py::class_<VertexSet>(m, "VertexSet")
        .def(py::init<std::vector<int>>(), py::arg("positions"))
        .def_static("from_labels", &VertexSet::from_labels, py::arg("labels"),
                    py::arg("order"))
        .def("positions", &VertexSet::positions)
        .def("labels", &VertexSet::labels)
        .def("__len__", &VertexSet::size)
        .def("__contains__", &VertexSet::contains)
        .def("__eq__",
             [](const VertexSet& a, const VertexSet& b) { return a == b; })
        .def("__repr__", [](const VertexSet& s) {
            std::ostringstream out;
            out << "VertexSet(labels=" << format_set_line(s.labels()) << ")";
            return out.str();
        });

    py::class_<CirculantGraph>(m, "CirculantGraph")
        .def_static("from_edges", &CirculantGraph::from_edges, py::arg("order"),
                    py::arg("edges"))
        .def("order", &CirculantGraph::order)
        .def("offsets", &CirculantGraph::offsets)
        .def("chords", &CirculantGraph::chords)
        .def("adjacent", &CirculantGraph::adjacent)
        .def("neighbors", &CirculantGraph::neighbors)
        .def("degree", &CirculantGraph::degree)
        .def("min_degree", &CirculantGraph::min_degree)
        .def("max_degree", &CirculantGraph::max_degree)
        .def("edge_count", &CirculantGraph::edge_count)
        .def("edges", &CirculantGraph::edges)
        .def("degree_profile", &CirculantGraph::degree_profile);

    m.def(
        "build_harary",
        [](int d, int n) { return build_harary({d, n}); },
        py::arg("d"), py::arg("n"));
    m.def("format_edge_list", &format_edge_list, py::arg("graph"));
    m.def("parse_edge_list", &parse_edge_list_text, py::arg("text"));
}

void bind_domination(py::module_& m) {
    py::class_<BoundsRecord>(m, "BoundsRecord")
        .def_readonly("lb_trivial", &BoundsRecord::lb_trivial)
        .def_readonly("lb_degree", &BoundsRecord::lb_degree)
        .def_readonly("lb_degree_sum", &BoundsRecord::lb_degree_sum)
        .def_readonly("ub_trivial", &BoundsRecord::ub_trivial)
        .def("best_lower", &BoundsRecord::best_lower);

    m.def("coverage", &coverage, py::arg("graph"), py::arg("s"));
    m.def("is_ktds", &is_ktds, py::arg("graph"), py::arg("s"), py::arg("k"));
    m.def("forced_vertices", &forced_vertices, py::arg("graph"), py::arg("k"));
    m.def("lower_bounds", &lower_bounds, py::arg("graph"), py::arg("k"));
}

void bind_constructions(py::module_& m) {
    py::enum_<ClaimKind>(m, "ClaimKind")
        .value("EXACT", ClaimKind::Exact)
        .value("BRACKET", ClaimKind::Bracket)
        .value("SUSPECT", ClaimKind::Suspect);

    py::class_<Claim>(m, "Claim")
        .def_readonly("kind", &Claim::kind)
        .def_readonly("lo", &Claim::lo)
        .def_readonly("hi", &Claim::hi)
        .def("contains", &Claim::contains);

    py::class_<CaseDescriptor>(m, "CaseDescriptor")
        .def_readonly("parity_class", &CaseDescriptor::parity_class)
        .def_readonly("m", &CaseDescriptor::m)
        .def_readonly("l", &CaseDescriptor::ell)
        .def_readonly("r", &CaseDescriptor::r)
        .def_readonly("lp", &CaseDescriptor::ell_p)
        .def_readonly("rp", &CaseDescriptor::r_p)
        .def_readonly("claim", &CaseDescriptor::claim)
        .def_readonly("alt_value", &CaseDescriptor::alt_value)
        .def("k4", &CaseDescriptor::k4);

    py::enum_<FormulaId>(m, "FormulaId")
        .value("T22", FormulaId::T22)
        .value("T22X", FormulaId::T22X)
        .value("T23_K4", FormulaId::T23_K4)
        .value("T23_R0", FormulaId::T23_R0)
        .value("T23_LP0", FormulaId::T23_LP0)
        .value("T23_ODD", FormulaId::T23_ODD)
        .value("T23_ODDX", FormulaId::T23_ODDX)
        .value("T23_EVEN", FormulaId::T23_EVEN)
        .value("T24_R0", FormulaId::T24_R0)
        .value("T24_R1", FormulaId::T24_R1)
        .value("T24_LP0", FormulaId::T24_LP0)
        .value("T24_ODD", FormulaId::T24_ODD)
        .value("T24_EVEN", FormulaId::T24_EVEN);

    py::class_<ConstructionResult>(m, "ConstructionResult")
        .def_readonly("id", &ConstructionResult::id)
        .def_readonly("set", &ConstructionResult::set)
        .def_readonly("cardinality", &ConstructionResult::cardinality)
        .def_readonly("validated", &ConstructionResult::validated)
        .def_readonly("collapsed", &ConstructionResult::collapsed);

    m.def(
        "classify",
        [](int d, int n, int k) { return classify({d, n}, k); },
        py::arg("d"), py::arg("n"), py::arg("k") = 2);
    m.def(
        "construct_2tds",
        [](int d, int n) { return construct_2tds({d, n}); },
        py::arg("d"), py::arg("n"));
    m.def("translate_set", &translate_set, py::arg("graph"), py::arg("s"),
          py::arg("t"));
    m.def("formula_name", [](FormulaId id) { return std::string(to_string(id)); });
}

void bind_solver(py::module_& m) {
    py::enum_<SolveMethod>(m, "SolveMethod")
        .value("BRUTE", SolveMethod::Brute)
        .value("BNB", SolveMethod::BranchAndBound);

    py::class_<SolveStats>(m, "SolveStats")
        .def_readonly("nodes", &SolveStats::nodes)
        .def_readonly("ms", &SolveStats::ms);

    py::class_<SolveResult>(m, "SolveResult")
        .def_readonly("resolved", &SolveResult::resolved)
        .def_readonly("gamma", &SolveResult::gamma)
        .def_readonly("witness", &SolveResult::witness)
        .def_readonly("lo", &SolveResult::lo)
        .def_readonly("hi", &SolveResult::hi)
        .def_readonly("method", &SolveResult::method)
        .def_readonly("stats", &SolveResult::stats);

    m.def(
        "solve_exact",
        [](const CirculantGraph& g, int k, SolveMethod method, long long budget_ms) {
            return solve_exact(g, k, method, as_budget(budget_ms));
        },
        py::arg("graph"), py::arg("k"), py::arg("method") = SolveMethod::BranchAndBound,
        py::arg("budget_ms") = -1, py::call_guard<py::gil_scoped_release>());
    m.def(
        "cross_check",
        [](const CirculantGraph& g, int k, long long budget_ms) {
            return cross_check(g, k, as_budget(budget_ms));
        },
        py::arg("graph"), py::arg("k"), py::arg("budget_ms") = -1,
        py::call_guard<py::gil_scoped_release>());
}

void bind_conformance(py::module_& m) {
    py::enum_<Verdict>(m, "Verdict")
        .value("CONFIRMS", Verdict::Confirms)
        .value("WITHIN_BRACKET", Verdict::WithinBracket)
        .value("CONSTRUCTION_INVALID", Verdict::ConstructionInvalid)
        .value("CLAIM_CONTRADICTED", Verdict::ClaimContradicted)
        .value("UNRESOLVED", Verdict::Unresolved);

    py::class_<InstanceReport>(m, "InstanceReport")
        .def_readonly("params", &InstanceReport::params)
        .def_readonly("k", &InstanceReport::k)
        .def_readonly("descriptor", &InstanceReport::descriptor)
        .def_readonly("bounds", &InstanceReport::bounds)
        .def_readonly("constructions", &InstanceReport::constructions)
        .def_readonly("oracle", &InstanceReport::oracle)
        .def_readonly("verdict", &InstanceReport::verdict)
        .def("to_json",
             [](const InstanceReport& r, bool include_timing) {
                 return report_to_json(r, include_timing);
             },
             py::arg("include_timing") = true);

    py::class_<SkipRecord>(m, "SkipRecord")
        .def_readonly("d", &SkipRecord::d)
        .def_readonly("n", &SkipRecord::n)
        .def_readonly("k", &SkipRecord::k)
        .def_readonly("reason", &SkipRecord::reason);

    py::class_<SweepResult>(m, "SweepResult")
        .def_readonly("reports", &SweepResult::reports)
        .def_readonly("skipped", &SweepResult::skipped);

    m.def(
        "evaluate_instance",
        [](int d, int n, int k, SolveMethod method, long long budget_ms) {
            return evaluate_instance({d, n}, k, method, as_budget(budget_ms));
        },
        py::arg("d"), py::arg("n"), py::arg("k") = 2,
        py::arg("method") = SolveMethod::BranchAndBound, py::arg("budget_ms") = -1,
        py::call_guard<py::gil_scoped_release>());
    m.def(
        "sweep",
        [](int d_min, int d_max, int n_min, int n_max, int k, long long budget_ms,
           SolveMethod method, int workers, const std::string& cache_path) {
            SweepOptions opts;
            opts.d_min = d_min;
            opts.d_max = d_max;
            opts.n_min = n_min;
            opts.n_max = n_max;
            opts.k = k;
            opts.budget = as_budget(budget_ms);
            opts.method = method;
            opts.workers = workers;
            opts.cache_path = cache_path;
            return sweep(opts);
        },
        py::arg("d_min"), py::arg("d_max"), py::arg("n_min"), py::arg("n_max"),
        py::arg("k") = 2, py::arg("budget_ms") = 60000,
        py::arg("method") = SolveMethod::BranchAndBound, py::arg("workers") = 0,
        py::arg("cache_path") = std::string(),
        py::call_guard<py::gil_scoped_release>());
    m.def("sweep_to_json", &sweep_to_json, py::arg("result"),
          py::arg("include_timing") = true);
    m.def("sweep_to_csv", &sweep_to_csv, py::arg("result"),
          py::arg("include_timing") = true);
    m.def("report_from_json", &report_from_json, py::arg("text"));
}

}  // namespace

PYBIND11_MODULE(ktdom, m) {
    m.doc() = "k-tuple total domination on Harary graphs";

    py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
    py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_RuntimeError);

    bind_graph(m);
    bind_domination(m);
    bind_constructions(m);
    bind_solver(m);
    bind_conformance(m);
}
