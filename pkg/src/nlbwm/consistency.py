"""Consistency index and input-based consistency ratio.

The index is the largest optimal deviation any system with a given
best-to-worst value can produce when all entries stay within [1, abw]; it
has a two-branch closed form. Dividing the optimal deviation by the index
yields a ratio computable directly from the stated preferences, before any
weights are solved for.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .engine import deviation_profile
from .errors import InvalidRatioError
from .pcs import PairwiseComparisonSystem
from .scales import Scale


@dataclass(frozen=True)
class ConsistencyAssessment:
    abw: float
    ci: float
    epsilon_star: float
    cr: float
    input_based: bool
    bounds_respected: bool

    def to_dict(self) -> dict:
        return {
            "abw": self.abw,
            "ci": self.ci,
            "epsilonStar": self.epsilon_star,
            "cr": self.cr,
            "inputBased": self.input_based,
            "boundsRespected": self.bounds_respected,
        }


def consistency_index(abw: float) -> float:
    """Worst-case optimal deviation over all systems with this abw.

    The two branches are the extremes reachable by a single surplus
    criterion at (abw, abw) and by a deficit/surplus pair at (1, 1) and
    (abw, abw); whichever is larger bounds every deviation value.
    """
    if abw < 1.0 - 1e-12:
        raise InvalidRatioError(f"best-to-worst value must be at least 1, got {abw}")
    abw = max(abw, 1.0)
    surplus_branch = (2.0 * abw + 1.0 - math.sqrt(8.0 * abw + 1.0)) / 2.0
    pair_branch = (abw * abw - 1.0) / (2.0 * abw + 2.0)
    return max(surplus_branch, pair_branch)


def ci_table(scale: Scale) -> list[tuple[float, float]]:
    """(abw, index) rows for every scale level above indifference."""
    return [(lv.value, consistency_index(lv.value)) for lv in scale.levels if lv.value > 1.0]


def assess(abw: float, epsilon_star: float, bounds_respected: bool) -> ConsistencyAssessment:
    """Combine a deviation optimum with the index for its abw.

    An abw of 1 forces consistency, so the ratio is defined as 0 there.
    """
    ci = consistency_index(abw)
    cr = epsilon_star / ci if ci > 0.0 else 0.0
    return ConsistencyAssessment(
        abw=abw,
        ci=ci,
        epsilon_star=epsilon_star,
        cr=cr,
        input_based=True,
        bounds_respected=bounds_respected,
    )


def consistency_ratio(pcs: PairwiseComparisonSystem) -> ConsistencyAssessment:
    """Input-based consistency ratio of a comparison system.

    Both numerator (optimal deviation) and denominator (index) are closed
    forms in the stated preferences; no weights are solved for. The ratio
    is guaranteed to lie in [0, 1] only when every entry is in [1, abw];
    out-of-band entries are flagged, not clamped.
    """
    profile = deviation_profile(pcs)
    return assess(pcs.abw, profile.epsilon_star, pcs.entry_bounds_respected())
