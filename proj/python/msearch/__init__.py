"""Multimodal line search: strategies, parameter solvers, and trace audits."""

from msearch._core import (
    AuditReport,
    CompliantPlan,
    CrReport,
    IndexMargin,
    InsufficientHorizonError,
    Interval,
    InvalidTraceError,
    IslandSnapshot,
    MotionSegment,
    OptimalEven,
    OptimalOdd,
    SignChangeReport,
    StrategyParams,
    TargetRatio,
    TraceParseError,
    Trajectory,
    Variant,
    WitnessSequences,
    analytic_cr_limit,
    audit_min_growth,
    audit_odd_lower_bound,
    build_strategy,
    cells_per_round,
    compliant_cell_count,
    compliant_plan,
    cr_convergence_series,
    cr_table,
    discriminant_poly,
    empirical_cr,
    even_bracket,
    even_optimal,
    even_search,
    extract_witness,
    grid_targets,
    load_trace,
    lower_bound_floor,
    make_params,
    odd_optimal,
    odd_search,
    optimal_cr,
    practical_search,
    recurrence_collapse,
    sign_change_audit,
    table_to_csv,
    trace_from_jsonl,
    trace_to_jsonl,
    worst_case_targets,
    write_trace,
)

__all__ = [
    "AuditReport",
    "CompliantPlan",
    "CrReport",
    "IndexMargin",
    "InsufficientHorizonError",
    "Interval",
    "InvalidTraceError",
    "IslandSnapshot",
    "MotionSegment",
    "OptimalEven",
    "OptimalOdd",
    "SignChangeReport",
    "StrategyParams",
    "TargetRatio",
    "TraceParseError",
    "Trajectory",
    "Variant",
    "WitnessSequences",
    "analytic_cr_limit",
    "audit_min_growth",
    "audit_odd_lower_bound",
    "build_strategy",
    "cells_per_round",
    "compliant_cell_count",
    "compliant_plan",
    "cr_convergence_series",
    "cr_table",
    "discriminant_poly",
    "empirical_cr",
    "even_bracket",
    "even_optimal",
    "even_search",
    "extract_witness",
    "grid_targets",
    "load_trace",
    "lower_bound_floor",
    "make_params",
    "odd_optimal",
    "odd_search",
    "optimal_cr",
    "practical_search",
    "recurrence_collapse",
    "sign_change_audit",
    "table_to_csv",
    "trace_from_jsonl",
    "trace_to_jsonl",
    "worst_case_targets",
    "write_trace",
]

__version__ = "0.1.0"
