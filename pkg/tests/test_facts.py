from fractions import Fraction

import pytest

from weakgeo.axioms import GATED, HOLDS, VIOLATION, IncompatibleModel
from weakgeo.plane import Line, MetricModel, Point, foot, line_through, reflect_in_line
from weakgeo.theorems.facts import FACTS, F5_ANCHOR, UnknownFact, check_fact, evaluate_fact

Q1 = MetricModel.parse("q:c=1")
QN2 = MetricModel.parse("q:c=-2")


def P(x, y):
    return Point(Fraction(x), Fraction(y))


def test_registry_uses_the_published_labels():
    assert list(FACTS) == ["F1", "F4", "F5", "F6", "F7", "F8", "F10", "F11", "F12", "F13", "L1", "L2", "L3", "L4"]


@pytest.mark.parametrize("bad", ["F2", "F3", "F9", "L5", "X"])
def test_unknown_ids_are_rejected(bad):
    with pytest.raises(UnknownFact):
        check_fact(bad, Q1, 10)


def test_unordered_model_is_rejected():
    with pytest.raises(IncompatibleModel):
        check_fact("F1", MetricModel.parse("gf:5:c=2"), 10)


@pytest.mark.parametrize("fact", list(FACTS))
def test_no_violation_in_the_standard_plane(fact):
    rep = check_fact(fact, Q1, 300, seed=2, workers=1)
    assert rep.violations == []
    assert rep.checked_count - rep.gated_count > 0


def test_f5_translate_example():
    assert F5_ANCHOR["a'"] - F5_ANCHOR["a"] == P(5, 0)
    assert evaluate_fact("F5", Q1, F5_ANCHOR) == (HOLDS, None)
    rep = check_fact("F5", Q1, 5, workers=1)
    assert rep.witnesses[0]["note"] == "anchor configuration"


def test_f1_isosceles_corner_by_reflection():
    a, b = P(3, 1), P(0, 0)
    g = Line(Fraction(0), Fraction(1), Fraction(0))
    u = reflect_in_line(Q1, a, g)
    p = P(5, 0)
    x, y = foot(Q1, p, line_through(b, a)), foot(Q1, p, line_through(b, u))
    assert Q1.form(p - x) == Q1.form(p - y) == Fraction(5, 2)
    s = {"a": a, "b": b, "u": u, "m": P(2, 0), "p": p}
    assert evaluate_fact("F1", Q1, s) == (HOLDS, None)


def test_l3_with_d_beyond_c_is_gated():
    # o above a on the perpendicular; d on ray oc beyond c: Z(ocd) holds, Z(odc) does not
    a, b, b2, o = P(0, 0), P(1, 0), P(-1, 0), P(0, 1)
    c = P(3, 0)
    d = o + (c - o).scale(2)
    s = {"a": a, "b": b, "b'": b2, "o": o, "c": c, "d": d}
    assert evaluate_fact("L3", Q1, s)[0] == GATED


def test_gating_never_turns_into_a_violation():
    s = {"o": P(0, 0), "a": P(1, 0), "b": P(-1, -1), "c": P(0, 1)}
    assert evaluate_fact("L4", Q1, s)[0] == GATED
    s = {"a": P(0, 0), "b": P(1, 0), "p1": P(0, 1), "p2": P(3, -1)}
    assert evaluate_fact("F13", Q1, s)[0] == GATED


@pytest.mark.parametrize("fact", ["F4", "L2", "L3", "L4"])
def test_evaluators_can_fail_in_the_nonstandard_plane(fact):
    rep = check_fact(fact, QN2, 400, seed=0, workers=1)
    assert rep.violations
    assert all(e["verdict"] == VIOLATION for e in rep.violations)


def test_reports_are_worker_count_independent():
    one = check_fact("F12", Q1, 40, seed=9, workers=1).to_json(timing=False)
    two = check_fact("F12", Q1, 40, seed=9, workers=2).to_json(timing=False)
    assert one == two
