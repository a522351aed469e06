from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from weakgeo.plane import (
    DegenerateError,
    Line,
    MetricModel,
    Point,
    collinear,
    intersect,
    line_through,
    norm,
)
from weakgeo.poly import Interval, sturm_isolate
from weakgeo.sampling import rng_for
from weakgeo.theorems.sl import (
    CONCLUSION_HOLDS,
    COUNTEREXAMPLE,
    HYPOTHESIS_FAILED,
    SLConfig,
    build_sl_family,
    check_sl_instance,
    classify_root,
    sample_family,
    sl_falsification_search,
)

Q1 = MetricModel.parse("q:c=1")
X_AXIS = Line(Fraction(0), Fraction(1), Fraction(0))


def P(x, y):
    return Point(Fraction(x), Fraction(y))


def example_family():
    # a = origin, bisector = x-axis, b = (2, 1), s = (1, 0)
    return build_sl_family(Q1, P(0, 0), P(2, 1), X_AXIS, Fraction(1, 2))


def test_family_places_s_where_asked():
    assert example_family().at(Fraction(2)).s == P(1, 0)


def test_symmetric_parameter_is_isosceles():
    fam = example_family()
    assert fam.fiber(Fraction(1)) == 0
    cfg = fam.at(Fraction(1))
    assert cfg.c == P(2, -1)
    assert check_sl_instance(Q1, cfg).kind == CONCLUSION_HOLDS


def test_generic_parameter_fails_the_congruent_cevians():
    fam = example_family()
    cfg = fam.at(Fraction(2))
    # independent route: Cevian feet as line intersections
    m = intersect(line_through(cfg.b, cfg.s), line_through(cfg.a, cfg.c))
    n = intersect(line_through(cfg.c, cfg.s), line_through(cfg.a, cfg.b))
    assert (m, n) == (cfg.m, cfg.n)
    assert norm(Q1, m, cfg.b) == Fraction(32, 9)
    assert norm(Q1, n, cfg.c) == Fraction(832, 49)
    assert fam.fiber(Fraction(2)) == Fraction(32, 9) - Fraction(832, 49)
    v = check_sl_instance(Q1, cfg)
    assert (v.kind, v.conjunct) == (HYPOTHESIS_FAILED, "bm≡cn")


def test_s_off_the_cevian_fails_z_bsm():
    cfg = example_family().at(Fraction(1))
    beyond = SLConfig(**{**cfg.__dict__, "s": P(3, 0)})
    v = check_sl_instance(Q1, beyond)
    assert (v.kind, v.conjunct) == (HYPOTHESIS_FAILED, "Z(bsm)")


@pytest.mark.parametrize("kwargs", [
    {"s_param": 0},
    {"s_param": -1},
    {"b": P(5, 0)},
    {"bisector": Line(Fraction(0), Fraction(1), Fraction(-1))},
    {"s_param": 2},
])
def test_degenerate_seeds_raise(kwargs):
    args = {"m": Q1, "a": P(0, 0), "b": P(2, 1), "bisector": X_AXIS, "s_param": Fraction(1, 2)}
    args.update(kwargs)
    with pytest.raises(DegenerateError):
        build_sl_family(**args)


def test_unordered_model_is_refused():
    with pytest.raises(DegenerateError):
        build_sl_family(MetricModel.parse("gf:5:c=2"), P(0, 0), P(2, 1), X_AXIS, 1)


def test_boundary_root_is_a_failed_hypothesis():
    fam = example_family()
    mu = fam.k / (1 - fam.k)
    assert fam.fiber(mu) == 0
    v = classify_root(fam, Interval(mu, mu))
    assert (v.kind, v.conjunct, v.boundary) == (HYPOTHESIS_FAILED, "Z(amc)", True)


ts = st.builds(Fraction, st.integers(-40, 40), st.integers(1, 9)).filter(lambda t: t not in (0,))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), ts)
def test_family_points_satisfy_their_incidences(index, t):
    fam = sample_family(Q1, rng_for(99, index))
    if t == fam.k or t == fam.k / (1 - fam.k):
        return
    cfg = fam.at(t)
    assert collinear(cfg.b, cfg.s, cfg.m) and collinear(cfg.a, cfg.m, cfg.c)
    assert collinear(cfg.c, cfg.s, cfg.n) and collinear(cfg.a, cfg.n, cfg.b)
    assert fam.fiber(t) == norm(Q1, cfg.m, cfg.b) - norm(Q1, cfg.n, cfg.c)
    assert fam.bisector.contains(cfg.s)


def test_every_root_is_classified_and_t_one_is_always_a_root():
    for i in range(20):
        fam = sample_family(Q1, rng_for(5, i))
        roots = sturm_isolate(fam.fiber_numerator)
        assert sum(1 in iso for iso in roots) == 1
        for iso in roots:
            assert classify_root(fam, iso).kind in (HYPOTHESIS_FAILED, CONCLUSION_HOLDS)


def test_small_search_finds_no_counterexample():
    rep = sl_falsification_search(Q1, 40, seed=1, workers=1)
    assert rep.violations == []
    summary = rep.witnesses[-1]["counts"]
    assert summary["families"] == 40
    assert summary["roots"] == rep.checked_count
    assert rep.checked_count == rep.gated_count + summary.get("conclusion_holds", 0)
    assert not any(e["verdict"] == COUNTEREXAMPLE for e in rep.witnesses)


def test_search_is_worker_count_independent():
    one = sl_falsification_search(Q1, 12, seed=4, workers=1).to_json(timing=False)
    two = sl_falsification_search(Q1, 12, seed=4, workers=2).to_json(timing=False)
    assert one == two


def test_search_rejects_bad_budgets_and_models():
    with pytest.raises(ValueError):
        sl_falsification_search(Q1, 0)
    with pytest.raises(DegenerateError):
        sl_falsification_search(MetricModel.parse("gf:7:c=1"), 3)
