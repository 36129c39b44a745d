"""Pairwise comparison systems: validation, consistency and aggregation.

A system consists of a best-to-other vector and an other-to-worst vector
over n criteria, together with the (possibly non-unique) sets of best and
worst criteria. Multiple equally-preferred best or worst criteria are kept
on the same two vectors; validation enforces that the redundant entries
implied by duplicated roles agree.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

from .errors import (
    AggregationMismatchError,
    NonPositiveEntryError,
    NotConsistentError,
    RoleConflictError,
    RoleEntryError,
)

DEFAULT_TOL = 1e-9


def _close(a: float, b: float, tol: float = DEFAULT_TOL) -> bool:
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


@dataclass(frozen=True)
class PairwiseComparisonSystem:
    """A validated best/worst comparison system.

    Instances are immutable; build them through :func:`validate` (or the
    JSON/CSV readers) rather than directly.
    """

    names: tuple[str, ...]
    best: tuple[int, ...]
    worst: tuple[int, ...]
    best_to_other: tuple[float, ...]
    other_to_worst: tuple[float, ...]
    abw: float
    scale: str | None = None
    warnings: tuple[str, ...] = field(default=(), compare=False)

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def n_best(self) -> int:
        return len(self.best)

    @property
    def n_worst(self) -> int:
        return len(self.worst)

    @property
    def middle(self) -> tuple[int, ...]:
        """Indices of criteria that are neither best nor worst."""
        roles = set(self.best) | set(self.worst)
        return tuple(i for i in range(self.n) if i not in roles)

    def entry_bounds_respected(self) -> bool:
        """True when every comparison value lies in [1, abw]."""
        eps = 1e-12
        lo, hi = 1.0 - eps, self.abw * (1.0 + eps) + eps
        return all(lo <= v <= hi for v in self.best_to_other + self.other_to_worst)

    def to_dict(self) -> dict:
        d = {
            "names": list(self.names),
            "best": [i + 1 for i in self.best],
            "worst": [i + 1 for i in self.worst],
            "bestToOther": list(self.best_to_other),
            "otherToWorst": list(self.other_to_worst),
        }
        if self.scale is not None:
            d["scale"] = self.scale
        return d


def validate(
    best_to_other: Sequence[float],
    other_to_worst: Sequence[float],
    best: int | Iterable[int],
    worst: int | Iterable[int],
    names: Sequence[str] | None = None,
    scale: str | None = None,
    tol: float = DEFAULT_TOL,
) -> PairwiseComparisonSystem:
    """Check a candidate system and return the validated, immutable form.

    ``best`` and ``worst`` are 0-based indices (ints or iterables of ints).
    Structural violations raise; soft violations (entries outside the
    [1, abw] band) are collected as warnings on the returned object.
    """
    a_b = [float(v) for v in best_to_other]
    a_w = [float(v) for v in other_to_worst]
    n = len(a_b)
    if n < 2:
        raise RoleConflictError(f"need at least 2 criteria, got {n}")
    if len(a_w) != n:
        raise RoleConflictError(
            f"bestToOther has {n} entries but otherToWorst has {len(a_w)}"
        )
    if names is None:
        names = [f"c{i + 1}" for i in range(n)]
    else:
        names = [str(x) for x in names]
        if len(names) != n:
            raise RoleConflictError(f"expected {n} names, got {len(names)}")

    for label, vec in (("bestToOther", a_b), ("otherToWorst", a_w)):
        for i, v in enumerate(vec):
            if not math.isfinite(v) or v <= 0.0:
                raise NonPositiveEntryError(f"{label}[{i + 1}] = {v} is not a positive ratio")

    best_set = sorted({int(best)} if isinstance(best, int) else {int(i) for i in best})
    worst_set = sorted({int(worst)} if isinstance(worst, int) else {int(i) for i in worst})
    if not best_set or not worst_set:
        raise RoleConflictError("best and worst index sets must be nonempty")
    for role, idxs in (("best", best_set), ("worst", worst_set)):
        for i in idxs:
            if i < 0 or i >= n:
                raise RoleConflictError(f"{role} index {i + 1} out of range for {n} criteria")
    overlap = set(best_set) & set(worst_set)
    if overlap:
        pretty = ", ".join(str(i + 1) for i in sorted(overlap))
        raise RoleConflictError(f"criteria {pretty} cannot be both best and worst")

    # Role self-comparisons are fixed at 1.
    for i in best_set:
        if not _close(a_b[i], 1.0, tol):
            raise RoleEntryError(f"bestToOther[{i + 1}] must be 1 for a best criterion, got {a_b[i]}")
    for j in worst_set:
        if not _close(a_w[j], 1.0, tol):
            raise RoleEntryError(f"otherToWorst[{j + 1}] must be 1 for a worst criterion, got {a_w[j]}")

    # Every best row and worst column repeats the same best-to-worst value.
    abw_candidates = [("bestToOther", j, a_b[j]) for j in worst_set]
    abw_candidates += [("otherToWorst", i, a_w[i]) for i in best_set]
    abw = abw_candidates[0][2]
    for label, i, v in abw_candidates[1:]:
        if not _close(v, abw, tol):
            raise RoleEntryError(
                f"{label}[{i + 1}] = {v} disagrees with the best-to-worst value {abw}; "
                "equally-preferred best/worst criteria must repeat identical comparisons"
            )

    warnings: list[str] = []
    if abw < 1.0 - 1e-12:
        warnings.append(f"best-to-worst value {abw:.6g} is below 1; roles look inverted")
    elif abs(abw - 1.0) <= 1e-12 and n > len(best_set) + len(worst_set):
        warnings.append("best-to-worst value is 1: all criteria are equally preferred")

    roles = set(best_set) | set(worst_set)
    for label, vec in (("bestToOther", a_b), ("otherToWorst", a_w)):
        for i, v in enumerate(vec):
            if i in roles:
                continue
            if v < 1.0 - 1e-12:
                warnings.append(f"{label}[{i + 1}] = {v:.6g} is below 1")
            if v > abw * (1.0 + 1e-12):
                warnings.append(
                    f"{label}[{i + 1}] = {v:.6g} exceeds the best-to-worst value {abw:.6g}; "
                    "the consistency ratio is only guaranteed to stay in [0, 1] for entries in [1, abw]"
                )

    return PairwiseComparisonSystem(
        names=tuple(names),
        best=tuple(best_set),
        worst=tuple(worst_set),
        best_to_other=tuple(a_b),
        other_to_worst=tuple(a_w),
        abw=abw,
        scale=scale,
        warnings=tuple(warnings),
    )


def is_consistent(pcs: PairwiseComparisonSystem, tol: float = DEFAULT_TOL) -> bool:
    """True iff a_bi * a_iw equals abw for every non-role criterion."""
    return all(
        _close(pcs.best_to_other[i] * pcs.other_to_worst[i], pcs.abw, tol)
        for i in pcs.middle
    )


def weights_from_consistent(
    pcs: PairwiseComparisonSystem, tol: float = DEFAULT_TOL
) -> tuple[float, ...]:
    """Exact weights of a consistent system: each other-to-worst value, normalized.

    Criteria sharing a role receive identical weights because their
    other-to-worst entries coincide by construction.
    """
    if not is_consistent(pcs, tol):
        raise NotConsistentError("system is not consistent; no exact weight set exists")
    total = sum(pcs.other_to_worst)
    return tuple(v / total for v in pcs.other_to_worst)


def aggregate_geometric(
    systems: Sequence[PairwiseComparisonSystem],
) -> PairwiseComparisonSystem:
    """Merge individual judgments by the componentwise geometric mean.

    All systems must agree on the criterion count and on the best/worst
    index sets. The aggregate may leave the discrete scale and may exceed
    the scale maximum; such values are reported as warnings, not clamped.
    """
    if not systems:
        raise AggregationMismatchError("no systems to aggregate")
    first = systems[0]
    for k, other in enumerate(systems[1:], start=2):
        if other.n != first.n:
            raise AggregationMismatchError(f"system {k} has {other.n} criteria, expected {first.n}")
        if other.best != first.best or other.worst != first.worst:
            raise AggregationMismatchError(f"system {k} assigns different best/worst roles")
    m = len(systems)
    gm_b = [
        math.exp(sum(math.log(s.best_to_other[i]) for s in systems) / m)
        for i in range(first.n)
    ]
    gm_w = [
        math.exp(sum(math.log(s.other_to_worst[i]) for s in systems) / m)
        for i in range(first.n)
    ]
    scales = {s.scale for s in systems}
    scale = first.scale if len(scales) == 1 else "custom"
    return validate(gm_b, gm_w, first.best, first.worst, names=first.names, scale=scale)


def from_dict(data: dict) -> PairwiseComparisonSystem:
    """Build a system from the JSON object form (1-based role indices)."""
    if not isinstance(data, dict):
        raise RoleConflictError("expected a JSON object describing a comparison system")
    missing = [k for k in ("bestToOther", "otherToWorst", "best", "worst") if k not in data]
    if missing:
        raise RoleConflictError(f"missing required fields: {', '.join(missing)}")

    def to_indices(key: str) -> list[int]:
        raw = data[key]
        items = [raw] if isinstance(raw, (int, float)) else list(raw)
        out = []
        for x in items:
            if not isinstance(x, (int, float)) or int(x) != x:
                raise RoleConflictError(f"{key} must contain 1-based integer indices, got {x!r}")
            out.append(int(x) - 1)
        return out

    return validate(
        data["bestToOther"],
        data["otherToWorst"],
        to_indices("best"),
        to_indices("worst"),
        names=data.get("names"),
        scale=data.get("scale"),
    )


_ROW_LABELS = {"besttoother": "b", "othertoworst": "w", "best": "B", "worst": "W", "scale": "S"}


def from_csv(text: str) -> PairwiseComparisonSystem:
    """Read a system from CSV.

    Expected layout: an optional first row of criterion names, then one row
    labelled ``bestToOther`` and one labelled ``otherToWorst`` (labels in the
    first cell; plain two-row numeric files are also accepted). Optional
    ``best``/``worst`` rows give 1-based role indices; when absent the roles
    are inferred from the unit entries and the vector maxima.
    """
    rows = [r for r in csv.reader(io.StringIO(text)) if any(c.strip() for c in r)]
    if not rows:
        raise RoleConflictError("empty CSV input")

    names: list[str] | None = None
    vectors: dict[str, list[float]] = {}
    roles: dict[str, list[int]] = {}
    scale: str | None = None

    def is_number(cell: str) -> bool:
        try:
            float(cell)
            return True
        except ValueError:
            return False

    for row in rows:
        cells = [c.strip() for c in row]
        label = _ROW_LABELS.get(cells[0].replace("_", "").replace(" ", "").lower())
        if label in ("b", "w"):
            vectors[label] = [float(c) for c in cells[1:] if c]
        elif label in ("B", "W"):
            roles[label] = [int(float(c)) - 1 for c in cells[1:] if c]
        elif label == "S":
            scale = cells[1] if len(cells) > 1 else None
        elif all(is_number(c) for c in cells if c):
            key = "b" if "b" not in vectors else "w"
            vectors[key] = [float(c) for c in cells if c]
        elif names is None:
            head = cells[0].lower()
            body = cells[1:] if head in ("", "name", "names", "criterion", "criteria") else cells
            names = [c for c in body if c]
        else:
            raise RoleConflictError(f"unrecognized CSV row starting with {cells[0]!r}")

    if "b" not in vectors or "w" not in vectors:
        raise RoleConflictError("CSV must provide bestToOther and otherToWorst rows")
    a_b, a_w = vectors["b"], vectors["w"]

    if "B" in roles and "W" in roles:
        best, worst = roles["B"], roles["W"]
    else:
        hi_w, hi_b = max(a_w), max(a_b)
        best = [i for i, (b, w) in enumerate(zip(a_b, a_w)) if b == 1.0 and w == hi_w]
        worst = [i for i, (b, w) in enumerate(zip(a_b, a_w)) if w == 1.0 and b == hi_b]
        best = roles.get("B", best)
        worst = roles.get("W", worst)
        if not best or not worst:
            raise RoleConflictError(
                "could not infer best/worst roles from the vectors; add best/worst rows"
            )
    return validate(a_b, a_w, best, worst, names=names, scale=scale)


def relabel(pcs: PairwiseComparisonSystem, order: Sequence[int]) -> PairwiseComparisonSystem:
    """Reorder criteria by ``order`` (a permutation of 0..n-1)."""
    if sorted(order) != list(range(pcs.n)):
        raise RoleConflictError("order must be a permutation of the criterion indices")
    inv = {old: new for new, old in enumerate(order)}
    return replace(
        pcs,
        names=tuple(pcs.names[i] for i in order),
        best=tuple(sorted(inv[i] for i in pcs.best)),
        worst=tuple(sorted(inv[i] for i in pcs.worst)),
        best_to_other=tuple(pcs.best_to_other[i] for i in order),
        other_to_worst=tuple(pcs.other_to_worst[i] for i in order),
    )


def drop_criterion(pcs: PairwiseComparisonSystem, index: int) -> PairwiseComparisonSystem:
    """Remove one non-role criterion, keeping everything else unchanged."""
    if index in pcs.best or index in pcs.worst:
        raise RoleConflictError("cannot drop a best or worst criterion")
    keep = [i for i in range(pcs.n) if i != index]
    shift = {old: new for new, old in enumerate(keep)}
    return validate(
        [pcs.best_to_other[i] for i in keep],
        [pcs.other_to_worst[i] for i in keep],
        [shift[i] for i in pcs.best],
        [shift[i] for i in pcs.worst],
        names=[pcs.names[i] for i in keep],
        scale=pcs.scale,
    )
