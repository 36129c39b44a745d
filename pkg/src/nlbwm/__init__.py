"""Closed-form weights and consistency analysis for the nonlinear Best-Worst Method."""

from .analysis import AnalysisReport, analyze, verify_against_oracle
from .consistency import ConsistencyAssessment, ci_table, consistency_index, consistency_ratio
from .engine import (
    Anchor,
    DeviationProfile,
    abw_star,
    best_modified_pcs,
    deviation_profile,
    epsilon_pair,
    epsilon_single,
    interval_weights,
)
from .errors import (
    AggregationMismatchError,
    BwmError,
    InfeasibleEpsilonError,
    InvalidRatioError,
    MiddleCriterionError,
    NonPositiveEntryError,
    NotConsistentError,
    RoleConflictError,
    RoleEntryError,
    SingleRoleRequiredError,
    UnknownTermError,
)
from .estimator import BestWorstWeights
from .legacy import LegacyResult, legacy_analysis, wu_best_modified_pcs, wu_epsilon_star, wu_interval_weights
from .oracle import FeasibilityWitness, feasible, random_pcs, solve_epsilon_star, solve_weight_bounds
from .pcs import (
    PairwiseComparisonSystem,
    aggregate_geometric,
    from_csv,
    from_dict,
    is_consistent,
    validate,
    weights_from_consistent,
)
from .scales import DDM7, LOOTSMA, SAATY, SALO, SCALES, Scale, get_scale, quantify

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "Anchor",
    "BestWorstWeights",
    "BwmError",
    "ConsistencyAssessment",
    "DeviationProfile",
    "FeasibilityWitness",
    "LegacyResult",
    "PairwiseComparisonSystem",
    "Scale",
    "SCALES",
    "SAATY",
    "SALO",
    "LOOTSMA",
    "DDM7",
    "abw_star",
    "aggregate_geometric",
    "analyze",
    "best_modified_pcs",
    "ci_table",
    "consistency_index",
    "consistency_ratio",
    "deviation_profile",
    "epsilon_pair",
    "epsilon_single",
    "feasible",
    "from_csv",
    "from_dict",
    "get_scale",
    "interval_weights",
    "is_consistent",
    "legacy_analysis",
    "quantify",
    "random_pcs",
    "solve_epsilon_star",
    "solve_weight_bounds",
    "validate",
    "verify_against_oracle",
    "weights_from_consistent",
    "wu_best_modified_pcs",
    "wu_epsilon_star",
    "wu_interval_weights",
]
