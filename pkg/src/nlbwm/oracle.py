"""Independent brute-force solver for the underlying optimization problems.

Nothing in this module uses the closed forms: weights are normalized out
into ratio space (t_w = 1, t_b = r, t_i = w_i / w_w), where each deviation
bound turns into an interval for t_i depending on r. Feasibility of a given
deviation level is decided by scanning candidate values of r; the optimal
deviation is then found by bisection, and per-criterion weight extremes by
scanning r and pushing each t to the box corner that favors the target
criterion. Used to cross-check every analytical result.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .errors import InfeasibleEpsilonError, RoleConflictError
from .pcs import PairwiseComparisonSystem, validate
from .scales import Scale

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class FeasibilityWitness:
    """Outcome of a feasibility probe at one deviation level."""

    epsilon: float
    feasible: bool
    ratio: float | None = None
    entry_intervals: dict[int, tuple[float, float]] | None = None


def _t_interval(
    pcs: PairwiseComparisonSystem, i: int, eps: float, r: float
) -> tuple[float, float]:
    """Admissible range for t_i = w_i / w_w at ratio r = w_b / w_w.

    A nonpositive a_bi - eps removes the upper ratio constraint entirely.
    """
    ab, aw = pcs.best_to_other[i], pcs.other_to_worst[i]
    lo = max(aw - eps, r / (ab + eps), 0.0)
    hi = aw + eps
    if ab - eps > 1e-12:
        hi = min(hi, r / (ab - eps))
    return lo, hi


def _r_candidates(pcs: PairwiseComparisonSystem, eps: float) -> list[float]:
    """Candidate ratios: window ends, constraint-interval corners, midpoints.

    Every per-criterion constraint confines r to an interval, so if any r is
    feasible then some corner of those intervals (or a window end) is too;
    midpoints are added so each segment between corners is probed as well.
    """
    r_lo = max(0.0, pcs.abw - eps)
    r_hi = pcs.abw + eps
    points = {r_lo, r_hi}
    for i in pcs.middle:
        ab, aw = pcs.best_to_other[i], pcs.other_to_worst[i]
        points.add((aw + eps) * (ab + eps))
        if ab - eps > 0.0 and aw - eps > 0.0:
            points.add((aw - eps) * (ab - eps))
    inside = sorted(p for p in points if r_lo <= p <= r_hi)
    mids = [(a + b) / 2.0 for a, b in zip(inside, inside[1:])]
    return sorted(set(inside + mids))


def feasible(
    pcs: PairwiseComparisonSystem, epsilon: float, slack: float = 1e-11
) -> FeasibilityWitness:
    """Probe whether some weight vector attains deviation ``epsilon``."""
    if epsilon < 0.0:
        return FeasibilityWitness(epsilon, False)
    for r in _r_candidates(pcs, epsilon):
        intervals = {i: _t_interval(pcs, i, epsilon, r) for i in pcs.middle}
        if all(lo <= hi + slack for lo, hi in intervals.values()):
            return FeasibilityWitness(epsilon, True, r, intervals)
    return FeasibilityWitness(epsilon, False)


def solve_epsilon_star(
    pcs: PairwiseComparisonSystem,
    tol: float = 1e-8,
    history: list[tuple[float, float]] | None = None,
) -> float:
    """Minimal feasible deviation, by bisection on the feasibility probe."""
    if feasible(pcs, 0.0).feasible:
        return 0.0
    lo = 0.0
    hi = pcs.abw + max(max(pcs.best_to_other), max(pcs.other_to_worst))
    if not feasible(pcs, hi).feasible:  # pragma: no cover - cannot happen for valid input
        raise InfeasibleEpsilonError("no feasible deviation found below the search bound")
    while hi - lo > tol:
        if history is not None:
            history.append((lo, hi))
        mid = (lo + hi) / 2.0
        if feasible(pcs, mid).feasible:
            hi = mid
        else:
            lo = mid
    return (lo + hi) / 2.0


def _feasible_r_window(pcs: PairwiseComparisonSystem, eps: float) -> tuple[float, float]:
    lo = max(0.0, pcs.abw - eps)
    hi = pcs.abw + eps
    for i in pcs.middle:
        ab, aw = pcs.best_to_other[i], pcs.other_to_worst[i]
        hi = min(hi, (aw + eps) * (ab + eps))
        if ab - eps > 0.0 and aw - eps > 0.0:
            lo = max(lo, (aw - eps) * (ab - eps))
    return lo, hi


def _weight_at(pcs: PairwiseComparisonSystem, k: int, eps: float, r: float, low_side: bool) -> float:
    """Weight of criterion k at ratio r with every t pushed against it (or for it)."""
    n1, n2 = pcs.n_best, pcs.n_worst
    total = n1 * r + n2
    if k in pcs.best:
        target = r
    elif k in pcs.worst:
        target = 1.0
    else:
        lo, hi = _t_interval(pcs, k, eps, r)
        target = min(lo, hi) if low_side else hi
        total += target
    for j in pcs.middle:
        if j == k:
            continue
        lo, hi = _t_interval(pcs, j, eps, r)
        total += hi if low_side else min(lo, hi)
    return target / total


def _golden_section(f, a: float, b: float, tol: float = 1e-12) -> float:
    """Return the minimum of f over [a, b] assuming local unimodality."""
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = f(d)
    return min(fc, fd, f((a + b) / 2.0))


def solve_weight_bounds(
    pcs: PairwiseComparisonSystem, epsilon_star: float, k: int, grid: int = 128
) -> tuple[float, float]:
    """Extremes of criterion k's weight over all optima at ``epsilon_star``.

    Scans the feasible ratio window (grid points plus every corner of the
    piecewise constraint bounds, where the extremes must sit) and refines
    the best bracket by golden-section search.
    """
    if not feasible(pcs, epsilon_star).feasible:
        raise InfeasibleEpsilonError(f"deviation {epsilon_star} is not feasible")
    eps = epsilon_star
    r_lo, r_hi = _feasible_r_window(pcs, eps)
    r_hi = max(r_hi, r_lo)

    points = {r_lo, r_hi}
    for j in pcs.middle:
        ab, aw = pcs.best_to_other[j], pcs.other_to_worst[j]
        points.add((aw - eps) * (ab + eps))
        if ab - eps > 1e-12:
            points.add((aw + eps) * (ab - eps))
    if r_hi > r_lo:
        step = (r_hi - r_lo) / grid
        points.update(r_lo + step * g for g in range(1, grid))
    candidates = sorted(p for p in points if r_lo <= p <= r_hi)

    bounds = []
    for low_side in (True, False):
        def value(r: float) -> float:
            w = _weight_at(pcs, k, eps, r, low_side)
            return w if low_side else -w

        best_idx = min(range(len(candidates)), key=lambda idx: value(candidates[idx]))
        a = candidates[max(0, best_idx - 1)]
        b = candidates[min(len(candidates) - 1, best_idx + 1)]
        extreme = value(candidates[best_idx])
        if b > a:
            extreme = min(extreme, _golden_section(value, a, b))
        bounds.append(extreme if low_side else -extreme)
    return bounds[0], bounds[1]


def random_pcs(
    scale: Scale, n: int, multi_roles: bool = False, seed: int = 0
) -> PairwiseComparisonSystem:
    """Deterministic random system with entries drawn from a scale.

    The best-to-worst value comes from the upper half of the scale levels
    above indifference; middle entries are drawn from levels not exceeding
    it. With ``multi_roles`` the best role is duplicated (and the worst
    sometimes too) whenever n allows it.
    """
    if n < 2:
        raise RoleConflictError(f"need at least 2 criteria, got {n}")
    rng = random.Random(f"{scale.name}:{n}:{multi_roles}:{seed}")
    above_one = [v for v in scale.values if v > 1.0]
    upper = above_one[len(above_one) // 2 :]
    abw = rng.choice(upper)
    allowed = [v for v in scale.values if v <= abw * (1.0 + 1e-12)]

    if multi_roles and n >= 3:
        n1 = rng.randint(2, min(3, n - 1))
        n2 = rng.randint(1, min(3, n - n1))
    else:
        n1 = n2 = 1
    positions = rng.sample(range(n), n1 + n2)
    best, worst = sorted(positions[:n1]), sorted(positions[n1:])

    a_b = [0.0] * n
    a_w = [0.0] * n
    for i in best:
        a_b[i], a_w[i] = 1.0, abw
    for j in worst:
        a_b[j], a_w[j] = abw, 1.0
    for i in range(n):
        if a_b[i] == 0.0:
            a_b[i] = rng.choice(allowed)
            a_w[i] = rng.choice(allowed)
    return validate(a_b, a_w, best, worst, scale=scale.name)
