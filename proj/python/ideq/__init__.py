"""Rate vs detection-error tradeoff regions for identity-depolarizing-erasure
channel pairs.

The heavy lifting lives in the compiled extension; this package re-exports it.
"""

from ._ideq import (
    ClosedForms,
    DetectionReport,
    Frontier,
    FrontierPoint,
    IdeParams,
    TwoValueDist,
    ValidationError,
    __version__,
    closed_forms,
    compose_unreliable,
    detection_bound,
    empirical_mutual_information,
    example1_params,
    example2_params,
    frontier,
    frontier_bruteforce,
    rate_bound,
    run_detection_trials,
    uniform_pmf,
    unreliable_frontier,
)

__all__ = [
    "ClosedForms",
    "DetectionReport",
    "Frontier",
    "FrontierPoint",
    "IdeParams",
    "TwoValueDist",
    "ValidationError",
    "__version__",
    "closed_forms",
    "compose_unreliable",
    "detection_bound",
    "empirical_mutual_information",
    "example1_params",
    "example2_params",
    "frontier",
    "frontier_bruteforce",
    "rate_bound",
    "run_detection_trials",
    "uniform_pmf",
    "unreliable_frontier",
]
