"""Closed-form optimal deviations, interval weights and the best modified system.

Everything here is driven by two elementary quantities per comparison
system: the per-criterion deviation needed to reconcile one criterion with
the best-to-worst judgment, and the pairwise deviation needed to reconcile
two criteria with each other. Their maximum is the optimal objective value
of the underlying minimax problem; the attaining entry determines the
optimally corrected best-to-worst value, from which interval weights and
the unique best corrected system follow in closed form.

The same formulas cover a unique best/worst criterion and the model with
several equally-preferred best or worst criteria; the role multiplicities
only enter the weight normalization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

from .errors import MiddleCriterionError
from .pcs import DEFAULT_TOL, PairwiseComparisonSystem, validate

#: Products within this relative tolerance of abw count as exactly balanced.
CLASSIFY_TOL = 1e-9

#: Discriminants slightly negative from rounding are clamped to zero.
RADICAND_SLACK = 1e-12


@dataclass(frozen=True)
class Anchor:
    """Names the deviation entry that attains the optimum.

    kind is one of:

    - ``"deficit"``: a criterion whose product a_bi * a_iw falls short of abw
    - ``"surplus"``: a criterion whose product exceeds abw
    - ``"pair"``: two criteria pulled together, i on the deficit side of j
    - ``"none"``: the system is consistent (or has no middle criteria)
    """

    kind: str
    i: int | None = None
    j: int | None = None

    def to_dict(self) -> dict:
        d: dict = {"kind": self.kind}
        if self.i is not None:
            d["i"] = self.i + 1
        if self.j is not None:
            d["j"] = self.j + 1
        return d


@dataclass(frozen=True)
class DeviationProfile:
    """All deviation values of a system plus the attained optimum."""

    deficit: tuple[int, ...]
    surplus: tuple[int, ...]
    balanced: tuple[int, ...]
    single_deviations: Mapping[int, float]
    pair_deviations: Mapping[tuple[int, int], float]
    epsilon_star: float
    anchor: Anchor
    ties: tuple[Anchor, ...] = ()


def _classify(pcs: PairwiseComparisonSystem, i: int) -> int:
    """-1 deficit, +1 surplus, 0 balanced (product vs abw, with tolerance)."""
    product = pcs.best_to_other[i] * pcs.other_to_worst[i]
    if abs(product - pcs.abw) <= CLASSIFY_TOL * max(1.0, pcs.abw):
        return 0
    return -1 if product < pcs.abw else 1


def _require_middle(pcs: PairwiseComparisonSystem, i: int) -> None:
    if i in pcs.best or i in pcs.worst:
        raise MiddleCriterionError(
            f"criterion {i + 1} is a best/worst criterion; deviations are defined "
            "only for the remaining criteria"
        )
    if not 0 <= i < pcs.n:
        raise MiddleCriterionError(f"criterion index {i + 1} out of range")


def epsilon_single(pcs: PairwiseComparisonSystem, i: int) -> float:
    """Smallest entry shift reconciling criterion i with the best-to-worst value.

    Solves (a_bi +/- x)(a_iw +/- x) = abw -/+ x, the sign depending on whether
    the product falls short of or exceeds abw; zero when already balanced.
    """
    _require_middle(pcs, i)
    if _classify(pcs, i) == 0:
        return 0.0
    ab, aw = pcs.best_to_other[i], pcs.other_to_worst[i]
    disc = (ab + aw + 1.0) ** 2 - 4.0 * (ab * aw - pcs.abw)
    if disc < 0.0:
        if disc < -RADICAND_SLACK:
            raise ArithmeticError(f"negative discriminant {disc} for criterion {i + 1}")
        disc = 0.0
    return abs((ab + aw + 1.0 - math.sqrt(disc)) / 2.0)


def epsilon_pair(pcs: PairwiseComparisonSystem, i: int, j: int) -> float:
    """Smallest entry shift balancing the products of criteria i and j.

    Symmetric in (i, j); zero when the products already agree.
    """
    _require_middle(pcs, i)
    _require_middle(pcs, j)
    ab_i, aw_i = pcs.best_to_other[i], pcs.other_to_worst[i]
    ab_j, aw_j = pcs.best_to_other[j], pcs.other_to_worst[j]
    # grouped so the value is bitwise symmetric in (i, j)
    return abs(ab_i * aw_i - ab_j * aw_j) / ((ab_i + aw_i) + (ab_j + aw_j))


def deviation_profile(pcs: PairwiseComparisonSystem) -> DeviationProfile:
    """Compute every deviation value and locate the attained maximum.

    When several entries tie for the maximum, the reported anchor follows a
    deterministic precedence: pair anchors first (lowest index pair), then
    deficit anchors (lowest index), then surplus anchors. All tied anchors
    are kept for downstream cross-checks.
    """
    middle = pcs.middle
    deficit, surplus, balanced = [], [], []
    for i in middle:
        cls = _classify(pcs, i)
        (deficit if cls < 0 else surplus if cls > 0 else balanced).append(i)

    singles = {i: epsilon_single(pcs, i) for i in middle}
    pairs = {
        (i, j): epsilon_pair(pcs, i, j)
        for a, i in enumerate(middle)
        for j in middle[a + 1 :]
    }

    eps_star = max([*singles.values(), *pairs.values()], default=0.0)
    if eps_star <= 0.0:
        anchor, ties = Anchor("none"), (Anchor("none"),)
        return DeviationProfile(
            tuple(deficit), tuple(surplus), tuple(balanced),
            singles, pairs, 0.0, anchor, ties,
        )

    tie_tol = 1e-9 * max(1.0, eps_star)
    candidates: list[tuple[int, tuple[int, ...], Anchor]] = []
    for (i, j), value in pairs.items():
        if value >= eps_star - tie_tol:
            p_i = pcs.best_to_other[i] * pcs.other_to_worst[i]
            p_j = pcs.best_to_other[j] * pcs.other_to_worst[j]
            lo, hi = (i, j) if p_i <= p_j else (j, i)
            candidates.append((0, (min(i, j), max(i, j)), Anchor("pair", lo, hi)))
    for i in deficit:
        if singles[i] >= eps_star - tie_tol:
            candidates.append((1, (i,), Anchor("deficit", i)))
    for i in surplus:
        if singles[i] >= eps_star - tie_tol:
            candidates.append((2, (i,), Anchor("surplus", i)))
    candidates.sort(key=lambda c: (c[0], c[1]))
    ties = tuple(c[2] for c in candidates)
    return DeviationProfile(
        tuple(deficit), tuple(surplus), tuple(balanced),
        singles, pairs, eps_star, ties[0], ties,
    )


def abw_star(profile: DeviationProfile, pcs: PairwiseComparisonSystem) -> float:
    """Best-to-worst value shared by every optimally corrected system."""
    return abw_star_for(profile.anchor, profile.epsilon_star, pcs)


def abw_star_for(anchor: Anchor, eps: float, pcs: PairwiseComparisonSystem) -> float:
    if anchor.kind == "none":
        return pcs.abw
    if anchor.kind == "deficit":
        return pcs.abw - eps
    if anchor.kind == "surplus":
        return pcs.abw + eps
    i = anchor.i
    return (pcs.best_to_other[i] + eps) * (pcs.other_to_worst[i] + eps)


def _entry_bounds(
    pcs: PairwiseComparisonSystem, eps: float, abw_s: float
) -> tuple[dict[int, float], dict[int, float]]:
    """Admissible [low, high] range of each corrected other-to-worst entry.

    The upper ratio bound abw_s / (a_bi - eps) is dropped (treated as
    +infinity) once a_bi - eps is nonpositive: the underlying ratio
    constraint w_b / w_i >= a_bi - eps is then vacuous.
    """
    low: dict[int, float] = {}
    high: dict[int, float] = {}
    for i in pcs.middle:
        ab, aw = pcs.best_to_other[i], pcs.other_to_worst[i]
        low[i] = max(aw - eps, abw_s / (ab + eps))
        slack = ab - eps
        high[i] = min(aw + eps, abw_s / slack) if slack > 1e-12 else aw + eps
    return low, high


def interval_weights(
    pcs: PairwiseComparisonSystem, profile: DeviationProfile | None = None
) -> tuple[tuple[float, float], ...]:
    """Optimal weight interval [lower, upper] for every criterion.

    Criteria sharing the best (or worst) role receive the identical interval.
    """
    if profile is None:
        profile = deviation_profile(pcs)
    return interval_weights_at(pcs, profile.epsilon_star, abw_star(profile, pcs))


def interval_weights_at(
    pcs: PairwiseComparisonSystem, eps: float, abw_s: float
) -> tuple[tuple[float, float], ...]:
    """Endpoint weight formulas evaluated at a given deviation and abw value."""
    low, high = _entry_bounds(pcs, eps, abw_s)
    base = pcs.n_worst + pcs.n_best * abw_s
    sum_low, sum_high = sum(low.values()), sum(high.values())

    best_iv = (abw_s / (base + sum_high), abw_s / (base + sum_low))
    worst_iv = (1.0 / (base + sum_high), 1.0 / (base + sum_low))
    out: list[tuple[float, float]] = [None] * pcs.n  # type: ignore[list-item]
    for b in pcs.best:
        out[b] = best_iv
    for w in pcs.worst:
        out[w] = worst_iv
    for i in pcs.middle:
        lower = low[i] / (base + low[i] + (sum_high - high[i]))
        upper = high[i] / (base + high[i] + (sum_low - low[i]))
        out[i] = (lower, upper)
    return tuple(out)


def best_modified_pcs(
    pcs: PairwiseComparisonSystem, profile: DeviationProfile | None = None
) -> PairwiseComparisonSystem:
    """The unique consistent system minimizing every per-criterion correction.

    Each middle criterion's corrected entries solve
    x * y = abw_star with x - a_bi = y - a_iw, giving the closed form below.
    A consistent input is returned unchanged (up to rounding).
    """
    if profile is None:
        profile = deviation_profile(pcs)
    abw_s = abw_star(profile, pcs)
    a_b = list(pcs.best_to_other)
    a_w = list(pcs.other_to_worst)
    for i in pcs.middle:
        ab, aw = a_b[i], a_w[i]
        root = math.sqrt((ab - aw) ** 2 + 4.0 * abw_s)
        a_b[i] = (ab - aw + root) / 2.0
        a_w[i] = (aw - ab + root) / 2.0
    for b in pcs.best:
        a_b[b], a_w[b] = 1.0, abw_s
    for w in pcs.worst:
        a_b[w], a_w[w] = abw_s, 1.0
    return validate(a_b, a_w, pcs.best, pcs.worst, names=pcs.names, scale=pcs.scale)


def max_abs_correction(
    original: PairwiseComparisonSystem, modified: PairwiseComparisonSystem
) -> float:
    """Largest entrywise difference between two systems of equal shape."""
    return max(
        max(abs(x - y) for x, y in zip(original.best_to_other, modified.best_to_other)),
        max(abs(x - y) for x, y in zip(original.other_to_worst, modified.other_to_worst)),
    )
