import json
from fractions import Fraction

import pytest
from hypothesis import given, settings

from capelli_quiver.algebra import make_algebra, skew_preset
from capelli_quiver.linalg import RatMatrix
from capelli_quiver.window import make_example
from capelli_quiver.windowio import (
    WindowFormatError,
    dumps_window,
    loads_window,
    parse_rat,
    window_from_dict,
    window_to_dict,
    witness_from_dict,
    witness_to_dict,
)
from builders import valid_windows


def test_documented_shape():
    doc = window_to_dict(make_example(skew_preset(2), "structure"))
    assert doc == {
        "algebra": {"d": 2, "lambdas": ["0", "2"]},
        "degrees": [-6, 0],
        "dims": [0, 0, 0, 1],
        "theta": [[], [], [], ["0"]],
        "f": [[], [], []],
        "delta": [[], [], []],
    }


@settings(max_examples=40, deadline=None)
@given(valid_windows())
def test_round_trip(w):
    assert loads_window(dumps_window(w)) == w
    assert dumps_window(loads_window(dumps_window(w))) == dumps_window(w)


def test_fractional_lambdas_round_trip():
    spec = make_algebra(2, [0, Fraction(1, 3)])
    w = make_example(spec, "localized", degrees=(-4, 0))
    text = dumps_window(w)
    assert '"1/3"' in text
    assert loads_window(text) == w


def test_nested_rows_accepted():
    doc = window_to_dict(make_example(skew_preset(1), "localized"))
    doc["theta"] = [[["-1"]], [["0"]]]
    assert window_from_dict(doc) == make_example(skew_preset(1), "localized")


@pytest.mark.parametrize("value", [0.5, True, None, "1.5", "1/0", "x"])
def test_parse_rat_rejects(value):
    with pytest.raises(WindowFormatError):
        parse_rat(value)


def test_parse_rat_accepts():
    assert parse_rat("-3/6") == Fraction(-1, 2)
    assert parse_rat(4) == 4


def _doc():
    return window_to_dict(make_example(skew_preset(2), "localized"))


@pytest.mark.parametrize(
    "mutate",
    [
        lambda d: d.pop("theta"),
        lambda d: d.update(degrees=[-6, -1]),
        lambda d: d.update(dims=[1, 1, 1]),
        lambda d: d["f"].pop(),
        lambda d: d["theta"].__setitem__(0, ["-6", "0"]),
        lambda d: d["delta"].__setitem__(1, [-1.0]),
        lambda d: d.update(algebra={"d": 2, "lambdas": ["1", "0"]}),
        lambda d: d.update(dims=[1, 1, 1, -1]),
    ],
)
def test_malformed_documents(mutate):
    doc = _doc()
    mutate(doc)
    with pytest.raises(WindowFormatError):
        window_from_dict(doc)


def test_invalid_json():
    with pytest.raises(WindowFormatError):
        loads_window("{not json")


def test_float_literal_in_text_rejected():
    text = dumps_window(make_example(skew_preset(1), "localized")).replace('"-1"', "-1.0")
    with pytest.raises(WindowFormatError):
        loads_window(text)


def test_witness_round_trip():
    maps = [RatMatrix.zeros(0, 0), RatMatrix.from_rows([[1, Fraction(1, 2)], [0, 3]])]
    doc = json.loads(json.dumps(witness_to_dict([-2, 0], maps)))
    degrees, back = witness_from_dict(doc)
    assert degrees == [-2, 0] and back == maps
    with pytest.raises(WindowFormatError):
        witness_from_dict({"degrees": [0]})
