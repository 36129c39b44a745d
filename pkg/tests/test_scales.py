import math

import pytest

from nlbwm import DDM7, LOOTSMA, SAATY, SALO, Scale, get_scale, quantify
from nlbwm.errors import InvalidRatioError, UnknownTermError
from nlbwm.scales import ScaleLevel


def test_quantify_named_terms():
    assert quantify("Extreme preference", SAATY) == 9
    assert quantify("Indifference", LOOTSMA) == 1
    assert quantify("Strong preference", DDM7) == pytest.approx(1.6684)
    assert quantify("Moderate preference", "salo") == pytest.approx(1.5)


def test_quantify_unknown_term_names_scale():
    with pytest.raises(UnknownTermError, match="lootsma"):
        quantify("Mild preference", LOOTSMA)


def test_builtin_scales_start_at_one_and_increase():
    for scale in (SAATY, SALO, LOOTSMA, DDM7):
        values = scale.values
        assert values[0] == 1
        assert all(b > a for a, b in zip(values, values[1:]))
        assert scale.max_value == values[-1]
        assert scale.levels[0].term == "Indifference"
        assert scale.levels[-1].term == "Extreme preference"


def test_lootsma_is_powers_of_sqrt2():
    for k, value in enumerate(LOOTSMA.values):
        assert value == pytest.approx(math.sqrt(2) ** k)


def test_custom_scale_roundtrip():
    scale = Scale("tiny", (ScaleLevel(1.0, "same"), ScaleLevel(3.0, "more")))
    assert quantify("more", scale) == 3.0
    d = scale.to_dict()
    assert d["maxValue"] == 3.0
    assert d["levels"][0] == {"term": "same", "value": 1.0}


def test_scale_validation():
    with pytest.raises(InvalidRatioError):
        Scale("bad", (ScaleLevel(2.0, "start"),))
    with pytest.raises(InvalidRatioError):
        Scale("bad", (ScaleLevel(1.0), ScaleLevel(1.0)))


def test_get_scale_unknown():
    with pytest.raises(UnknownTermError, match="known scales"):
        get_scale("fibonacci")
    assert get_scale("SAATY") is SAATY
