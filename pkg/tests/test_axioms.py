import random
from fractions import Fraction

import pytest

from weakgeo.axioms import (
    AXIOMS,
    GATED,
    HOLDS,
    METRIC,
    ORDERED,
    VIOLATION,
    IncompatibleModel,
    _brute_unique,
    a12_configuration,
    check_axiom,
    check_axioms,
    check_hjelmslev,
    default_axioms,
    evaluate,
    repro_a12,
)
from weakgeo.plane import Line, MetricModel, Point, between, foot, line_through
from weakgeo.sampling import random_point

Q1 = MetricModel.parse("q:c=1")
QN2 = MetricModel.parse("q:c=-2")
G3 = MetricModel.parse("gf:3:c=1")
G5 = MetricModel.parse("gf:5:c=2")


def P(x, y):
    return Point(Fraction(x), Fraction(y))


@pytest.mark.parametrize("axiom", [a for a in AXIOMS if a != "LOWDIM"])
def test_standard_rational_plane_satisfies_every_axiom(axiom):
    rep = check_axiom(axiom, Q1, samples=150, seed=3, workers=1)
    assert rep.violations == []
    assert rep.checked_count >= 150


def test_a12_fails_in_the_nonstandard_plane():
    rep = check_axiom("A12", QN2, samples=50, seed=0, workers=1)
    assert rep.violations
    assert all(e["note"] == "Z(acb) fails" for e in rep.violations)


def test_a12_anchor_is_gated_when_the_angle_is_not_right():
    rep = check_axiom("A12", Q1, samples=1, seed=0, workers=1)
    assert rep.gated_count >= 1 and rep.violations == []


def test_legs_of_a_right_angle_have_norms_of_opposite_sign_for_c_minus_2():
    rng = random.Random(1)
    for _ in range(200):
        o, a = random_point(QN2, rng), random_point(QN2, rng)
        if o == a:
            continue
        d = a - o
        b = o + Point(2 * d.y, d.x)  # B-orthogonal to d when c = -2
        assert QN2.form(a - o) * QN2.form(b - o) < 0


@pytest.mark.parametrize("model", [G3, G5])
@pytest.mark.parametrize("axiom", METRIC)
def test_congruence_axioms_hold_exhaustively(axiom, model):
    if axiom == "A9" and model is G5:
        pytest.skip("covered by the slow run below")
    rep = check_axiom(axiom, model, exhaustive=True, workers=1)
    assert rep.violations == [], rep.violations[:3]
    assert rep.mode == "exhaustive" and rep.seed is None


@pytest.mark.slow
def test_a9_exhaustive_gf5():
    rep = check_axiom("A9", G5, exhaustive=True)
    assert rep.violations == []


@pytest.mark.parametrize("axiom", ["A8", "A10"])
def test_unique_existence_brute_force_agrees_with_algebraic_solution(axiom):
    rng = random.Random(11)
    pts = G5.points()
    for _ in range(400):
        if axiom == "A8":
            a, b = rng.sample(pts, 2)
            c = a + (b - a).scale(G5.scalar(rng.randrange(5)))
            a2 = rng.choice(pts)
            b2 = rng.choice([p for p in pts if G5.form(p - a2) == G5.form(b - a)])
            s = {"a": a, "b": b, "c": c, "a'": a2, "b'": b2}
        else:
            s = {"a": rng.choice(pts), "b": rng.choice(pts), "x": rng.choice(pts)}
        assert _brute_unique(axiom, G5, s)[0] == evaluate(axiom, G5, s)[0]


def test_evaluators_gate_on_false_hypotheses():
    assert evaluate("A1", Q1, {"a": P(0, 0), "b": P(2, 0), "c": P(1, 0)})[0] == GATED
    assert evaluate("A6", Q1, {"a": P(0, 0), "b": P(1, 0), "c": P(3, 3)})[0] == GATED
    assert evaluate("A10", Q1, {"a": P(0, 0), "b": P(1, 0), "x": P(2, 0)})[0] == GATED
    assert evaluate("A1", Q1, {"a": P(0, 0), "b": P(1, 0), "c": P(2, 0)})[0] == HOLDS


def test_a12_configuration_completes_the_triangle():
    s = a12_configuration(QN2, P(0, 1), P(1, 0), P(2, 0))
    assert s["c"] == P(0, 0)
    assert s["a'"] == P(-1, 2) and s["b'"] == P(-2, 0)
    assert evaluate("A12", QN2, s) == (VIOLATION, "Z(acb) fails")


def test_repro_a12_rebuilds_the_counterexample_exactly():
    rep = repro_a12()
    assert rep.model == "q:c=-2" and rep.mode == "constructed"
    right = rep.witnesses[0]
    assert right["verdict"] == "holds"
    assert right["assignment"] == {"<o,a>": ["1/1", "1/1", "-1/1"], "<o,b>": ["1/1", "2/1", "-2/1"]}
    assert right["note"].endswith("= 0")
    (v,) = rep.violations
    got = v["assignment"]
    assert (got["o"], got["a"], got["b"], got["c"]) == (["0/1", "1/1"], ["1/1", "0/1"], ["2/1", "0/1"], ["0/1", "0/1"])
    assert foot(QN2, P(0, 1), line_through(P(1, 0), P(2, 0))) == P(0, 0)
    assert not between(P(1, 0), P(0, 0), P(2, 0))
    assert repro_a12().to_json(timing=False) == rep.to_json(timing=False)


def test_repro_with_c_equal_one_reports_the_mismatch():
    rep = repro_a12(1)
    assert rep.witnesses[0]["verdict"] == "fails"
    assert rep.witnesses[1]["verdict"] == "hypothesis-mismatch"
    assert rep.violations == []


def test_lowdim_witness():
    rep = check_axioms(["LOWDIM"], G5)
    assert rep.witnesses[0]["check"] == "LOWDIM" and rep.ok


def test_model_and_budget_errors():
    with pytest.raises(IncompatibleModel):
        check_axiom("A1", G5, samples=10)
    with pytest.raises(IncompatibleModel):
        check_axiom("A5", Q1, exhaustive=True)
    with pytest.raises(ValueError):
        check_axiom("A5", Q1, samples=0)
    with pytest.raises(ValueError):
        check_axiom("A13", Q1, samples=5)


def test_default_axioms_follow_the_model():
    assert set(ORDERED) <= set(default_axioms(Q1))
    assert not set(ORDERED) & set(default_axioms(G5))


@pytest.mark.parametrize("model", [G3, G5])
def test_hjelmslev_axioms_hold(model):
    rep = check_hjelmslev(model)
    assert rep.violations == []
    assert [w["check"] for w in rep.witnesses] == ["H5"]
    w = rep.witnesses[0]["assignment"]
    a, b = (Line(*(model.scalar(int(x)) for x in w[k])) for k in ("a", "b"))
    assert model.c * a.u * b.u + a.v * b.v == 0


def test_hjelmslev_needs_a_finite_model_and_known_ids():
    with pytest.raises(IncompatibleModel):
        check_hjelmslev(Q1)
    with pytest.raises(ValueError):
        check_hjelmslev(G3, ["H6"])
