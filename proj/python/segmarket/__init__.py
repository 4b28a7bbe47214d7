"""Logit-demand market equilibria and display-set optimization."""

from ._core import (
    BertrandEquilibrium,
    Catalog,
    ConvergenceError,
    CournotEquilibrium,
    DemandVector,
    DisplaySet,
    MonopolyOutcome,
    OracleResult,
    ScanReport,
    SegmentationResult,
    SolveReport,
    TraceEntry,
    best_response,
    best_response_dynamics,
    bertrand_solve,
    brute_force_optimize,
    buyer_utility,
    catalog_digest,
    cournot_solve,
    curvature_ratio,
    lambert_bound_scan,
    lambert_v,
    lambert_v_derivative,
    lambert_w,
    mnl_demand,
    monopoly_revenue_optimal,
    monopoly_welfare_optimal,
    objective_curve,
    optimize,
    potential,
    price_from_demand,
    read_catalog,
    revenue_quasiconvexity_scan,
    share_sigmoid,
    social_welfare,
    total_revenue,
    welfare_slope_scan,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
