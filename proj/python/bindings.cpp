#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "msearch/analysis.hpp"
#include "msearch/coverage.hpp"
#include "msearch/io.hpp"
#include "msearch/solver.hpp"
#include "msearch/strategies.hpp"

namespace py = pybind11;
using namespace msearch;

namespace {

std::string search_repr(const Search& s) {
    switch (s.kind) {
        case SearchKind::mode: return "mode:" + std::to_string(s.mode);
        case SearchKind::all_modes: return "all";
        case SearchKind::none: return "none";
    }
    return "?";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Multimodal line-search strategies, parameter solvers, and trace audits";

    py::register_exception<invalid_trace>(m, "InvalidTraceError", PyExc_ValueError);
    py::register_exception<insufficient_horizon>(m, "InsufficientHorizonError", PyExc_ValueError);
    py::register_exception<parse_error>(m, "TraceParseError", PyExc_ValueError);

    py::enum_<Variant>(m, "Variant")
        .value("ODD_OPTIMAL", Variant::odd_optimal)
        .value("EVEN_OPTIMAL", Variant::even_optimal)
        .value("PRACTICAL_ODD", Variant::practical_odd)
        .value("PRACTICAL_EVEN", Variant::practical_even);

    py::class_<MotionSegment>(m, "MotionSegment")
        .def_readonly("t_start", &MotionSegment::t_start)
        .def_readonly("t_end", &MotionSegment::t_end)
        .def_readonly("x_start", &MotionSegment::x_start)
        .def_readonly("x_end", &MotionSegment::x_end)
        .def_property_readonly("search",
                               [](const MotionSegment& s) { return search_repr(s.search); })
        .def("__repr__", [](const MotionSegment& s) {
            return "MotionSegment(t=[" + std::to_string(s.t_start) + ", " +
                   std::to_string(s.t_end) + "], x=[" + std::to_string(s.x_start) + ", " +
                   std::to_string(s.x_end) + "], " + search_repr(s.search) + ")";
        });

    py::class_<Interval>(m, "Interval")
        .def_readonly("lo", &Interval::lo)
        .def_readonly("hi", &Interval::hi);

    py::class_<IslandSnapshot>(m, "IslandSnapshot")
        .def_readonly("t", &IslandSnapshot::t)
        .def_readonly("neg_end", &IslandSnapshot::neg_end)
        .def_readonly("pos_end", &IslandSnapshot::pos_end)
        .def_readonly("islands", &IslandSnapshot::islands);

    py::class_<Trajectory>(m, "Trajectory")
        .def_property_readonly("modes", &Trajectory::modes)
        .def_property_readonly("duration", &Trajectory::duration)
        .def_property_readonly("segments",
                               [](const Trajectory& t) {
                                   return std::vector<MotionSegment>(t.segments().begin(),
                                                                     t.segments().end());
                               })
        .def("position_at",
             [](const Trajectory& t, double at) { return position_at(t, at); }, py::arg("t"))
        .def("exploration_time",
             [](const Trajectory& t, double x) { return exploration_time(t, x); }, py::arg("x"))
        .def("mode_cover_time",
             [](const Trajectory& t, double x, int k) { return mode_cover_time(t, x, k); },
             py::arg("x"), py::arg("mode"))
        .def("islands_at",
             [](const Trajectory& t, double at) { return coverage_islands(t, at); },
             py::arg("t"));

    py::class_<StrategyParams>(m, "StrategyParams")
        .def_readonly("p", &StrategyParams::p)
        .def_readonly("variant", &StrategyParams::variant)
        .def_readonly("a", &StrategyParams::a)
        .def_readonly("r", &StrategyParams::r)
        .def_readonly("eps", &StrategyParams::eps)
        .def_readonly("c", &StrategyParams::c);

    py::class_<CompliantPlan>(m, "CompliantPlan")
        .def_readonly("x_init", &CompliantPlan::x_init)
        .def_readonly("delta", &CompliantPlan::delta)
        .def_readonly("p_prime", &CompliantPlan::p_prime)
        .def_readonly("first_width", &CompliantPlan::first_width)
        .def_readonly("ratio", &CompliantPlan::ratio)
        .def_readonly("widths", &CompliantPlan::widths)
        .def_readonly("n", &CompliantPlan::n);

    py::class_<OptimalOdd>(m, "OptimalOdd")
        .def_readonly("p", &OptimalOdd::p)
        .def_readonly("a", &OptimalOdd::a)
        .def_readonly("cr", &OptimalOdd::cr);

    py::class_<OptimalEven>(m, "OptimalEven")
        .def_readonly("p", &OptimalEven::p)
        .def_readonly("c_star", &OptimalEven::c_star)
        .def_readonly("a", &OptimalEven::a)
        .def_readonly("r", &OptimalEven::r)
        .def_readonly("bracket", &OptimalEven::bracket);

    py::class_<TargetRatio>(m, "TargetRatio")
        .def_readonly("x", &TargetRatio::x)
        .def_readonly("T", &TargetRatio::T)
        .def_readonly("cr", &TargetRatio::cr);

    py::class_<CrReport>(m, "CrReport")
        .def_readonly("params", &CrReport::params)
        .def_readonly("targets", &CrReport::targets)
        .def_readonly("empirical_sup", &CrReport::empirical_sup)
        .def_readonly("analytic_limit", &CrReport::analytic_limit)
        .def_readonly("rounds_used", &CrReport::rounds_used);

    py::class_<WitnessSequences>(m, "WitnessSequences")
        .def(py::init([](std::vector<double> x, std::vector<double> t, int horizon) {
                 WitnessSequences w;
                 w.x = std::move(x);
                 w.t = std::move(t);
                 w.horizon = horizon;
                 return w;
             }),
             py::arg("x"), py::arg("t"), py::arg("horizon"))
        .def_readwrite("x", &WitnessSequences::x)
        .def_readwrite("t", &WitnessSequences::t)
        .def_readonly("horizon", &WitnessSequences::horizon)
        .def("x_at", &WitnessSequences::x_at, py::arg("i"))
        .def("t_at", &WitnessSequences::t_at, py::arg("i"));

    py::class_<IndexMargin>(m, "IndexMargin")
        .def_readonly("index", &IndexMargin::index)
        .def_readonly("margin", &IndexMargin::margin);

    py::class_<AuditReport>(m, "AuditReport")
        .def_readonly("passed", &AuditReport::pass)
        .def_readonly("first_violation", &AuditReport::first_violation)
        .def_readonly("margins", &AuditReport::margins);

    py::class_<SignChangeReport>(m, "SignChangeReport")
        .def_readonly("passed", &SignChangeReport::pass)
        .def_readonly("neg_to_pos", &SignChangeReport::neg_to_pos)
        .def_readonly("pos_to_neg", &SignChangeReport::pos_to_neg)
        .def_readonly("transition_lo", &SignChangeReport::transition_lo)
        .def_readonly("transition_hi", &SignChangeReport::transition_hi);

    // solver
    m.def("odd_optimal", &odd_optimal, py::arg("p"));
    m.def("even_optimal", &even_optimal, py::arg("p"), py::arg("tol") = 1e-12);
    m.def("even_bracket", &even_bracket, py::arg("p"));
    m.def("discriminant_poly", &discriminant_poly, py::arg("p"), py::arg("c"));
    m.def("sign_change_audit", &sign_change_audit, py::arg("p"), py::arg("grid_step"));
    m.def("lower_bound_floor", &lower_bound_floor, py::arg("p"));
    m.def("compliant_cell_count", &compliant_cell_count, py::arg("p"), py::arg("c"),
          py::arg("eps"), py::arg("x_init_abs"), py::arg("delta"));
    m.def("optimal_cr", &optimal_cr, py::arg("p"));
    m.def("cr_table", [](int p_max) {
        std::vector<std::tuple<int, std::string, double>> rows;
        for (const auto& row : cr_table(p_max))
            rows.emplace_back(row.p, row.odd ? "odd" : "even", row.cr);
        return rows;
    }, py::arg("p_max") = 16);

    // strategies
    m.def("make_params", &make_params, py::arg("p"), py::arg("variant"),
          py::arg("eps") = std::nullopt);
    m.def("odd_search", &odd_search, py::arg("p"), py::arg("a"), py::arg("round_limit"));
    m.def("even_search", &even_search, py::arg("p"), py::arg("a"), py::arg("r"),
          py::arg("round_limit"));
    m.def("practical_search", &practical_search, py::arg("p"), py::arg("eps"),
          py::arg("round_limit"));
    m.def("build_strategy", &build_strategy, py::arg("params"), py::arg("round_limit"));
    m.def("compliant_plan", &compliant_plan, py::arg("x_init"), py::arg("delta"), py::arg("p"),
          py::arg("c"), py::arg("eps"));
    m.def("cells_per_round", &cells_per_round, py::arg("params"));

    // analysis
    m.def("worst_case_targets", &worst_case_targets, py::arg("params"), py::arg("rounds"),
          py::arg("eta") = 1e-9);
    m.def("grid_targets", &grid_targets, py::arg("params"), py::arg("rounds"),
          py::arg("per_round"));
    m.def("empirical_cr", &empirical_cr, py::arg("trajectory"), py::arg("params"),
          py::arg("targets"));
    m.def("analytic_cr_limit", &analytic_cr_limit, py::arg("params"));
    m.def("cr_convergence_series", &cr_convergence_series, py::arg("params"), py::arg("rounds"));
    m.def("extract_witness", &extract_witness, py::arg("trajectory"), py::arg("horizon_time"));
    m.def("audit_odd_lower_bound", &audit_odd_lower_bound, py::arg("witness"), py::arg("p"));
    m.def("audit_min_growth", &audit_min_growth, py::arg("witness"), py::arg("claimed_cr"));
    m.def("recurrence_collapse", &recurrence_collapse, py::arg("a"), py::arg("b"), py::arg("y0"),
          py::arg("y1"), py::arg("max_steps") = 10000);

    // trace io
    m.def("trace_to_jsonl", [](const StrategyParams& params, int rounds, const Trajectory& traj) {
        return trace_to_jsonl(TraceHeader::from_params(params, rounds), traj);
    }, py::arg("params"), py::arg("rounds"), py::arg("trajectory"));
    m.def("trace_from_jsonl", [](const std::string& text) {
        const TraceFile f = trace_from_jsonl(text);
        return py::make_tuple(f.header.to_params(), f.header.rounds, f.trajectory);
    }, py::arg("text"));
    m.def("write_trace", [](const std::filesystem::path& path, const StrategyParams& params,
                            int rounds, const Trajectory& traj) {
        write_trace(path, TraceHeader::from_params(params, rounds), traj);
    }, py::arg("path"), py::arg("params"), py::arg("rounds"), py::arg("trajectory"));
    m.def("load_trace", [](const std::filesystem::path& path) {
        const TraceFile f = load_trace(path);
        return py::make_tuple(f.header.to_params(), f.header.rounds, f.trajectory);
    }, py::arg("path"));
    m.def("table_to_csv", &table_to_csv, py::arg("p_max") = 16);
}
