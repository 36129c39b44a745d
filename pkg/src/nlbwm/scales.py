"""Preference scales and quantification of linguistic terms.

Four established scales are built in (Saaty, Salo-Hamalainen, Lootsma and
the 7-based Donegan-Dodd-McMaster scale); custom scales can be constructed
from any strictly increasing level list starting at 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import InvalidRatioError, UnknownTermError

# Canonical linguistic terms. Even-numbered levels of the classic scales sit
# between two named grades and carry no term of their own.
INDIFFERENCE = "Indifference"
MODERATE = "Moderate preference"
STRONG = "Strong preference"
VERY_STRONG = "Very strong preference"
EXTREME = "Extreme preference"


@dataclass(frozen=True)
class ScaleLevel:
    value: float
    term: str | None = None


@dataclass(frozen=True)
class Scale:
    """An ordered list of preference grades, each mapping to a ratio >= 1."""

    name: str
    levels: tuple[ScaleLevel, ...] = field(repr=False)

    def __post_init__(self):
        if not self.levels:
            raise InvalidRatioError("a scale needs at least one level")
        if abs(self.levels[0].value - 1.0) > 1e-12:
            raise InvalidRatioError("the first scale level must equal 1")
        values = [lv.value for lv in self.levels]
        if any(b <= a for a, b in zip(values, values[1:])):
            raise InvalidRatioError(f"scale {self.name!r} values must be strictly increasing")

    @property
    def values(self) -> tuple[float, ...]:
        return tuple(lv.value for lv in self.levels)

    @property
    def max_value(self) -> float:
        return self.levels[-1].value

    def quantify(self, term: str) -> float:
        """Return the ratio assigned to a linguistic term of this scale."""
        for level in self.levels:
            if level.term == term:
                return level.value
        raise UnknownTermError(f"term {term!r} is not defined on scale {self.name!r}")

    def to_dict(self) -> dict:
        return {
            "id": self.name,
            "maxValue": self.max_value,
            "levels": [{"term": lv.term, "value": lv.value} for lv in self.levels],
        }


def _scale(name: str, values: list[float]) -> Scale:
    terms = [INDIFFERENCE, None, MODERATE, None, STRONG, None, VERY_STRONG, None, EXTREME]
    return Scale(name, tuple(ScaleLevel(v, t) for v, t in zip(values, terms)))


SAATY = _scale("saaty", [1, 2, 3, 4, 5, 6, 7, 8, 9])
SALO = _scale("salo", [1, 1.2222, 1.5, 1.8571, 2.3333, 3, 4, 5.6667, 9])
LOOTSMA = _scale(
    "lootsma",
    [1, math.sqrt(2), 2, 2 * math.sqrt(2), 4, 4 * math.sqrt(2), 8, 8 * math.sqrt(2), 16],
)
DDM7 = _scale("ddm7", [1, 1.1257, 1.2715, 1.4470, 1.6684, 1.9670, 2.4142, 3.2289, 5.8284])

SCALES: dict[str, Scale] = {s.name: s for s in (SAATY, SALO, LOOTSMA, DDM7)}


def get_scale(name: str) -> Scale:
    try:
        return SCALES[name.lower()]
    except KeyError:
        known = ", ".join(sorted(SCALES))
        raise UnknownTermError(f"unknown scale {name!r} (known scales: {known})") from None


def quantify(term: str, scale: Scale | str) -> float:
    """Quantify a linguistic term on a scale given by object or name."""
    if isinstance(scale, str):
        scale = get_scale(scale)
    return scale.quantify(term)
