"""Historical single-scale analytical formulas, reproduced defects included.

This path restricts the candidate set for the optimal deviation to the
per-class champions and their single pairing. Off the Saaty scale (or on
aggregated group judgments) that restriction undershoots the true optimum,
which makes the derived interval weights non-well-defined (lower bound
above upper bound) and lets per-criterion corrections exceed the claimed
optimum. Both defects are detected and flagged, never repaired.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .engine import epsilon_pair, epsilon_single, interval_weights_at
from .errors import SingleRoleRequiredError
from .pcs import PairwiseComparisonSystem, validate, weights_from_consistent

#: Published index values for the Saaty scale predating the corrected closed
#: form; the value at abw=2 understates the true worst case (0.5).
LEGACY_SAATY_CI: dict[int, float] = {
    2: 0.4384, 3: 1.0, 4: 1.6277, 5: 2.2984, 6: 3.0, 7: 3.7250, 8: 4.4688, 9: 5.2279,
}

FLAG_TOL = 1e-9


@dataclass(frozen=True)
class LegacyResult:
    """Everything the historical path produces for one system."""

    epsilon_star: float
    case: str
    abw_star: float
    intervals: tuple[tuple[float, float], ...]
    best_pcs: PairwiseComparisonSystem
    best_weights: tuple[float, ...]
    eta: dict[int, float]
    malformed_intervals: bool
    eta_exceeds_epsilon: bool

    def to_dict(self) -> dict:
        return {
            "epsilonStar": self.epsilon_star,
            "case": self.case,
            "abwStar": self.abw_star,
            "intervals": [list(iv) for iv in self.intervals],
            "bestWeights": list(self.best_weights),
            "bestModifiedPcs": self.best_pcs.to_dict(),
            "eta": {str(i + 1): v for i, v in sorted(self.eta.items())},
            "malformedIntervals": self.malformed_intervals,
            "etaExceedsEpsilon": self.eta_exceeds_epsilon,
        }


def _require_single(pcs: PairwiseComparisonSystem) -> None:
    if pcs.n_best != 1 or pcs.n_worst != 1:
        raise SingleRoleRequiredError(
            "the legacy formulas only support a unique best and a unique worst criterion"
        )


def wu_epsilon_star(pcs: PairwiseComparisonSystem) -> tuple[float, str]:
    """Optimal deviation per the historical three-case rule.

    Only the deficit champion, the surplus champion and their pairing are
    considered. With one class empty the other champion is returned
    directly (its gate cannot be contradicted); with both empty the system
    is consistent.
    """
    _require_single(pcs)
    singles = {i: epsilon_single(pcs, i) for i in pcs.middle}
    deficit = [i for i in pcs.middle if pcs.best_to_other[i] * pcs.other_to_worst[i] < pcs.abw and singles[i] > 0.0]
    surplus = [i for i in pcs.middle if pcs.best_to_other[i] * pcs.other_to_worst[i] > pcs.abw and singles[i] > 0.0]
    if not deficit and not surplus:
        return 0.0, "consistent"
    if not surplus:
        i1 = max(deficit, key=lambda i: (singles[i], -i))
        return singles[i1], "deficit"
    if not deficit:
        i2 = max(surplus, key=lambda i: (singles[i], -i))
        return singles[i2], "surplus"

    i1 = max(deficit, key=lambda i: (singles[i], -i))
    i2 = max(surplus, key=lambda i: (singles[i], -i))
    e1, e2 = singles[i1], singles[i2]
    ab2, aw2 = pcs.best_to_other[i2], pcs.other_to_worst[i2]
    if (ab2 - e1) * (aw2 - e1) <= pcs.abw - e1:
        return e1, "deficit"
    ab1, aw1 = pcs.best_to_other[i1], pcs.other_to_worst[i1]
    if (ab1 + e2) * (aw1 + e2) >= pcs.abw + e2:
        return e2, "surplus"
    return epsilon_pair(pcs, i1, i2), "pair"


def _champions(pcs: PairwiseComparisonSystem) -> tuple[int | None, int | None]:
    singles = {i: epsilon_single(pcs, i) for i in pcs.middle}
    deficit = [i for i in pcs.middle if pcs.best_to_other[i] * pcs.other_to_worst[i] < pcs.abw and singles[i] > 0.0]
    surplus = [i for i in pcs.middle if pcs.best_to_other[i] * pcs.other_to_worst[i] > pcs.abw and singles[i] > 0.0]
    i1 = max(deficit, key=lambda i: (singles[i], -i)) if deficit else None
    i2 = max(surplus, key=lambda i: (singles[i], -i)) if surplus else None
    return i1, i2


def wu_abw_star(pcs: PairwiseComparisonSystem) -> float:
    """Corrected best-to-worst value implied by the historical case split."""
    eps, case = wu_epsilon_star(pcs)
    if case in ("consistent",):
        return pcs.abw
    if case == "deficit":
        return pcs.abw - eps
    if case == "surplus":
        return pcs.abw + eps
    _, i2 = _champions(pcs)
    return (pcs.best_to_other[i2] - eps) * (pcs.other_to_worst[i2] - eps)


def wu_interval_weights(pcs: PairwiseComparisonSystem) -> tuple[tuple[float, float], ...]:
    """Interval weights from the historical deviation; may be malformed."""
    _require_single(pcs)
    eps, _ = wu_epsilon_star(pcs)
    return interval_weights_at(pcs, eps, wu_abw_star(pcs))


def wu_best_modified_pcs(
    pcs: PairwiseComparisonSystem,
) -> tuple[PairwiseComparisonSystem, dict[int, float]]:
    """Historical best corrected system plus its per-criterion corrections.

    Each correction solves (a_bi +/- eta)(a_iw +/- eta) = abw_star, moving
    the pair toward the corrected best-to-worst value. Off the Saaty scale
    some eta can exceed the claimed optimal deviation.
    """
    _require_single(pcs)
    abw_s = wu_abw_star(pcs)
    a_b = list(pcs.best_to_other)
    a_w = list(pcs.other_to_worst)
    eta: dict[int, float] = {}
    for i in pcs.middle:
        ab, aw = a_b[i], a_w[i]
        disc = max((ab + aw) ** 2 - 4.0 * (ab * aw - abw_s), 0.0)
        eta_i = abs((ab + aw - math.sqrt(disc)) / 2.0)
        eta[i] = eta_i
        sign = 1.0 if ab * aw <= abw_s else -1.0
        a_b[i] = ab + sign * eta_i
        a_w[i] = aw + sign * eta_i
    b, w = pcs.best[0], pcs.worst[0]
    a_b[b], a_w[b] = 1.0, abw_s
    a_b[w], a_w[w] = abw_s, 1.0
    modified = validate(a_b, a_w, pcs.best, pcs.worst, names=pcs.names, scale=pcs.scale)
    return modified, eta


def legacy_analysis(pcs: PairwiseComparisonSystem) -> LegacyResult:
    """Run the full historical path and flag its documented defects."""
    eps, case = wu_epsilon_star(pcs)
    intervals = wu_interval_weights(pcs)
    best_pcs, eta = wu_best_modified_pcs(pcs)
    return LegacyResult(
        epsilon_star=eps,
        case=case,
        abw_star=wu_abw_star(pcs),
        intervals=intervals,
        best_pcs=best_pcs,
        best_weights=weights_from_consistent(best_pcs),
        eta=eta,
        malformed_intervals=any(lo > hi + FLAG_TOL for lo, hi in intervals),
        eta_exceeds_epsilon=any(v > eps + FLAG_TOL for v in eta.values()),
    )
