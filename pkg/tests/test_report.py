import json
from fractions import Fraction

import jsonschema
import pytest

from weakgeo.arith import Mod
from weakgeo.axioms import check_axiom, check_hjelmslev, repro_a12
from weakgeo.plane import Line, MetricModel, Point
from weakgeo.report import (
    KEYS,
    Report,
    decode_assignment,
    encode_scalar,
    entry,
    merge,
    sampled_mode,
    validate,
)
from weakgeo.theorems.medians import check_medians

Q1 = MetricModel.parse("q:c=1")
G3 = MetricModel.parse("gf:3:c=1")


def reports():
    return [
        repro_a12(),
        check_axiom("A4", Q1, samples=20, seed=1, workers=1),
        check_hjelmslev(G3),
        check_medians(G3, workers=1),
    ]


@pytest.mark.parametrize("rep", reports(), ids=lambda r: r.command)
def test_reports_validate_and_round_trip(rep):
    text = rep.to_json()
    doc = json.loads(text)
    validate(doc)
    assert tuple(doc) == KEYS
    assert Report.from_json(text).to_json() == text


def test_scalars_travel_as_strings():
    assert encode_scalar(Fraction(-3, 4)) == "-3/4"
    assert encode_scalar(Fraction(2)) == "2/1"
    assert encode_scalar(Mod(4, 5)) == "4"
    e = entry("x", "witness", {"p": Point(Fraction(1, 2), Fraction(0)), "l": Line(Fraction(1), Fraction(0), Fraction(-1))})
    assert e["assignment"] == {"p": ["1/2", "0/1"], "l": ["1/1", "0/1", "-1/1"]}
    back = decode_assignment(Q1, e)
    assert back["p"] == Point(Fraction(1, 2), Fraction(0))
    assert back["l"] == Line(Fraction(1), Fraction(0), Fraction(-1))


def test_schema_rejects_unknown_keys_and_bad_modes():
    doc = repro_a12().to_dict()
    with pytest.raises(jsonschema.ValidationError):
        validate(dict(doc, extra=1))
    with pytest.raises(jsonschema.ValidationError):
        validate(dict(doc, mode="random"))
    bad = dict(doc, violations=[{"check": "A1"}])
    with pytest.raises(jsonschema.ValidationError):
        validate(bad)


def test_timing_can_be_suppressed():
    rep = repro_a12()
    rep.elapsed_ms = 17
    assert json.loads(rep.to_json(timing=False))["elapsed_ms"] == 0
    assert rep.elapsed_ms == 17


def test_mode_strings_and_merge():
    assert sampled_mode(10, 3) == "sampled(10, 3)"
    a, b = Report("x", "q:c=1", "constructed", checked_count=2), Report("x", "q:c=1", "constructed", checked_count=3)
    b.violations.append(entry("A1", "violation"))
    m = merge("x", [a, b])
    assert m.checked_count == 5 and not m.ok


def test_summary_mentions_violations():
    text = check_medians(G3, workers=1).summary()
    assert "VIOLATION medians" in text and "more" in text
