"""Full analysis bundle: deviations, intervals, best weights and consistency.

This is the one-call entry point used by the CLI, the HTTP service and the
estimator facade. Every emitted optimum is re-checked against the
constraint-level feasibility probe; disagreements (none are known) surface
as warnings rather than silent output.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from . import oracle
from .consistency import ConsistencyAssessment, assess
from .engine import (
    DeviationProfile,
    abw_star_for,
    abw_star,
    best_modified_pcs,
    deviation_profile,
    interval_weights_at,
    max_abs_correction,
)
from .legacy import LegacyResult, legacy_analysis
from .pcs import PairwiseComparisonSystem, weights_from_consistent

_CHECK_TOL = 1e-9


@dataclass(frozen=True)
class AnalysisReport:
    pcs: PairwiseComparisonSystem
    profile: DeviationProfile
    abw_star: float
    intervals: tuple[tuple[float, float], ...]
    best_pcs: PairwiseComparisonSystem
    best_weights: tuple[float, ...]
    assessment: ConsistencyAssessment
    warnings: tuple[str, ...]
    legacy: LegacyResult | None = None

    @property
    def epsilon_star(self) -> float:
        return self.profile.epsilon_star

    @property
    def ci(self) -> float:
        return self.assessment.ci

    @property
    def cr(self) -> float:
        return self.assessment.cr

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {
            "epsilonStar": self.profile.epsilon_star,
            "abwStar": self.abw_star,
            "intervals": [list(iv) for iv in self.intervals],
            "bestWeights": list(self.best_weights),
            "bestModifiedPcs": self.best_pcs.to_dict(),
            "ci": self.assessment.ci,
            "cr": self.assessment.cr,
            "anchor": self.profile.anchor.to_dict(),
            "boundsRespected": self.assessment.bounds_respected,
            "warnings": list(self.warnings),
        }
        if self.legacy is not None:
            d["legacy"] = self.legacy.to_dict()
        return d


def analyze(
    pcs: PairwiseComparisonSystem,
    legacy: bool = False,
    feasibility_check: bool = True,
) -> AnalysisReport:
    """Analyze one validated comparison system.

    With ``legacy`` the historical single-scale results (defects flagged)
    are attached for side-by-side comparison; that path requires a unique
    best and worst criterion.
    """
    profile = deviation_profile(pcs)
    eps = profile.epsilon_star
    abw_s = abw_star(profile, pcs)
    warnings = list(pcs.warnings)

    if len(profile.ties) > 1:
        values = [abw_star_for(a, eps, pcs) for a in profile.ties]
        if max(values) - min(values) > _CHECK_TOL * max(1.0, pcs.abw):
            tied = ", ".join(str(a.to_dict()) for a in profile.ties)
            warnings.append(
                f"tied deviation anchors disagree on the corrected best-to-worst value ({tied}); "
                f"using {profile.anchor.to_dict()}"
            )

    intervals = interval_weights_at(pcs, eps, abw_s)
    best_pcs = best_modified_pcs(pcs, profile)
    best_weights = weights_from_consistent(best_pcs)

    residual = max_abs_correction(pcs, best_pcs)
    if residual > eps + _CHECK_TOL * max(1.0, eps):
        warnings.append(
            f"best corrected system deviates by {residual:.3e}, above the optimum {eps:.3e}"
        )
    for k, (w, (lo, hi)) in enumerate(zip(best_weights, intervals)):
        if not (lo - _CHECK_TOL <= w <= hi + _CHECK_TOL):
            warnings.append(
                f"best weight of criterion {k + 1} ({w:.6f}) escapes its interval "
                f"[{lo:.6f}, {hi:.6f}]"
            )

    if feasibility_check and not oracle.feasible(pcs, eps + 1e-9).feasible:
        warnings.append(
            f"feasibility probe rejected the analytic optimum {eps:.12g}"
        )

    assessment = assess(pcs.abw, eps, pcs.entry_bounds_respected())
    if not assessment.bounds_respected and assessment.cr > 1.0:
        warnings.append(
            f"consistency ratio {assessment.cr:.4f} exceeds 1 because some entries "
            "leave [1, abw]; reported unclamped"
        )
    if assessment.ci == 0.0 and eps > _CHECK_TOL:
        warnings.append(
            "best-to-worst value 1 admits no inconsistency budget; ratio reported as 0 "
            f"despite a positive deviation {eps:.3e}"
        )

    legacy_result = legacy_analysis(pcs) if legacy else None
    return AnalysisReport(
        pcs=pcs,
        profile=profile,
        abw_star=abw_s,
        intervals=intervals,
        best_pcs=best_pcs,
        best_weights=best_weights,
        assessment=assessment,
        warnings=tuple(warnings),
        legacy=legacy_result,
    )


def verify_against_oracle(
    pcs: PairwiseComparisonSystem,
    eps_tol: float = 1e-6,
    weight_tol: float = 5e-4,
    check_weights: bool = True,
) -> dict[str, Any]:
    """Compare the closed forms with the brute-force solver on one system."""
    profile = deviation_profile(pcs)
    analytic = profile.epsilon_star
    solved = oracle.solve_epsilon_star(pcs, tol=eps_tol / 10.0)
    result: dict[str, Any] = {
        "analyticEpsilonStar": analytic,
        "oracleEpsilonStar": solved,
        "epsilonDelta": abs(analytic - solved),
        "ok": abs(analytic - solved) <= eps_tol,
        "weightMismatches": [],
    }
    if check_weights and result["ok"]:
        intervals = interval_weights_at(pcs, analytic, abw_star(profile, pcs))
        for k in range(pcs.n):
            lo, hi = oracle.solve_weight_bounds(pcs, analytic, k)
            a_lo, a_hi = intervals[k]
            if abs(lo - a_lo) > weight_tol or abs(hi - a_hi) > weight_tol:
                result["weightMismatches"].append(
                    {"criterion": k + 1, "analytic": [a_lo, a_hi], "oracle": [lo, hi]}
                )
        result["ok"] = not result["weightMismatches"]
    return result
