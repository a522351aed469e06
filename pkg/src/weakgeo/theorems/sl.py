"""Generalized Steiner-Lehmus configurations over an ordered field.

Two Cevians bm and cn of a triangle abc meet at s on the internal bisector
at a; if they are congruent, the triangle should be isosceles.  A family
fixes a, b, the bisector and s, and moves c along the mirror image of the
ray ab.  The congruence bm ≡ cn then cuts out finitely many parameter values
(roots of the fiber polynomial), and every hypothesis is decided exactly at
each root, rational or not.

With e1 = b - a, e2 = σ(b) - a and s - a = k (e1 + e2), the Cevian feet are

    m = a + k/(1-k) e2,    n = a + tk/(t-k) e1,    c = a + t e2,

so m does not move with t and the fiber numerator is a quartic with the
symmetric value t = 1 always among its roots.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from typing import Callable, Optional, Union

from ..arith import sign
from ..plane import (
    DegenerateError,
    Line,
    MetricModel,
    Point,
    det,
    reflect_in_line,
)
from ..poly import Interval, Polynomial, RationalFunction, refine_to_sign, sturm_isolate
from ..report import Report, entry, sampled_mode, timed
from ..sampling import parallel_map, random_line_through, random_point, random_unit, rng_for

Value = Union[Fraction, RationalFunction]
SignFn = Callable[[Value], int]

HYPOTHESES = (
    "¬L(abc)",
    "Z(amc)",
    "Z(anb)",
    "ad≡ab∧(Z(adc)∨Z(acd)∨d=c)",
    "sb≡sd",
    "Z(bsm)",
    "Z(csn)",
    "bm≡cn",
    "M(mpn)",
    "M(boc)",
)
CONCLUSION = "ab≡ac"

HYPOTHESIS_FAILED, CONCLUSION_HOLDS, COUNTEREXAMPLE = "HypothesisFailed", "ConclusionHolds", "Counterexample"


@dataclass(frozen=True)
class Verdict:
    kind: str
    conjunct: Optional[str] = None
    boundary: bool = False

    def __str__(self):
        if self.kind == HYPOTHESIS_FAILED:
            return f"{self.kind}({self.conjunct!r})"
        return self.kind


@dataclass(frozen=True)
class SLConfig:
    """The points of the Steiner-Lehmus statement, plus the family parameter t when known."""

    a: Point
    b: Point
    c: Point
    d: Point
    m: Point
    n: Point
    s: Point
    p: Point
    o: Point
    t: Optional[Fraction] = None

    def assignment(self) -> dict:
        return {k: getattr(self, k) for k in "abcdmnspo"}


# ---------------------------------------------------------------------------
# conjuncts evaluated through a sign oracle


def _form(m: MetricModel, v: Point) -> Value:
    return v.x * v.x + m.c * (v.y * v.y)


def _between(sg: SignFn, x: Point, y: Point, z: Point) -> tuple[bool, bool]:
    """Z(xyz) and whether a failure sits exactly on the boundary (y at an endpoint)."""
    d, e = x - z, y - z
    if sg(det(d, e)) != 0:
        return False, False
    length = d.x * d.x + d.y * d.y
    if sg(length) == 0:
        return False, True
    dot = e.x * d.x + e.y * d.y
    lo, hi = sg(dot), sg(length - dot)
    return lo > 0 and hi > 0, lo == 0 or hi == 0


def _congruent(m: MetricModel, sg: SignFn, a: Point, b: Point, c: Point, d: Point) -> bool:
    return sg(_form(m, a - b) - _form(m, c - d)) == 0


def _equal(sg: SignFn, x: Point, y: Point) -> bool:
    return sg(x.x - y.x) == 0 and sg(x.y - y.y) == 0


def decide(m: MetricModel, sg: SignFn, cfg: dict) -> Verdict:
    """Evaluate every hypothesis of the statement in order, then the conclusion."""
    a, b, c, d, mm, n, s, p, o = (cfg[k] for k in "abcdmnspo")

    def fail(name, boundary=False):
        return Verdict(HYPOTHESIS_FAILED, name, boundary)

    if sg(det(b - a, c - a)) == 0:
        return fail("¬L(abc)", True)
    for name, (x, y, z) in (("Z(amc)", (a, mm, c)), ("Z(anb)", (a, n, b))):
        ok, edge = _between(sg, x, y, z)
        if not ok:
            return fail(name, edge)
    if not _congruent(m, sg, a, d, a, b):
        return fail(HYPOTHESES[3])
    z1, e1 = _between(sg, a, d, c)
    z2, e2 = _between(sg, a, c, d)
    if not (z1 or z2 or _equal(sg, d, c)):
        return fail(HYPOTHESES[3], e1 or e2)
    if not _congruent(m, sg, s, b, s, d):
        return fail("sb≡sd")
    for name, (x, y, z) in (("Z(bsm)", (b, s, mm)), ("Z(csn)", (c, s, n))):
        ok, edge = _between(sg, x, y, z)
        if not ok:
            return fail(name, edge)
    if not _congruent(m, sg, b, mm, c, n):
        return fail("bm≡cn")
    for name, (x, y, z) in (("M(mpn)", (mm, p, n)), ("M(boc)", (b, o, c))):
        ok, edge = _between(sg, x, y, z)
        if not ok:
            return fail(name, edge)
        if not _congruent(m, sg, y, x, y, z):
            return fail(name)
    if _congruent(m, sg, a, b, a, c):
        return Verdict(CONCLUSION_HOLDS)
    return Verdict(COUNTEREXAMPLE)


def check_sl_instance(m: MetricModel, cfg: SLConfig) -> Verdict:
    """Decide the statement on concrete points."""
    if not m.ordered:
        raise DegenerateError("the Steiner-Lehmus statement needs an ordered model")
    return decide(m, sign, cfg.assignment())


# ---------------------------------------------------------------------------
# families


@dataclass
class SLFamily:
    model: MetricModel
    a: Point
    b: Point
    bisector: Line
    s_param: Fraction
    mirror: Point  # σ_bisector(b)
    k: Fraction
    points: dict  # name -> Point with RationalFunction coordinates (d excluded)
    fiber: RationalFunction

    @property
    def fiber_numerator(self) -> Polynomial:
        return self.fiber.num

    def d_for_sign(self, t_sign: int) -> Point:
        """The transported point on the closed ray from a through c(t): σ(b) for t > 0, its mirror through a for t < 0."""
        e2 = self.mirror - self.a
        return self.a + e2.scale(Fraction(t_sign))

    def at(self, t: Fraction) -> SLConfig:
        """The concrete configuration at a rational parameter value."""
        pts = {k: Point(_val(v.x, t), _val(v.y, t)) for k, v in self.points.items()}
        d = self.d_for_sign(sign(t)) if t != 0 else self.a
        return SLConfig(d=d, t=t, **pts)


def _val(v: Value, t: Fraction) -> Fraction:
    return v(t) if isinstance(v, RationalFunction) else v


def build_sl_family(m: MetricModel, a: Point, b: Point, bisector: Line, s_param) -> SLFamily:
    """The one-parameter family c(t) = a + t (σ(b) - a) with s = a + s_param ((b + σ(b))/2 - a)."""
    if not m.ordered:
        raise DegenerateError("Steiner-Lehmus families need an ordered model")
    s_param = Fraction(s_param)
    if not bisector.contains(a):
        raise DegenerateError("the bisector must pass through a")
    if bisector.contains(b):
        raise DegenerateError("b lies on the bisector")
    if s_param <= 0:
        raise DegenerateError("s must lie strictly inside the angle at a")
    mirror = reflect_in_line(m, b, bisector)
    e1, e2 = b - a, mirror - a
    if det(e1, e2) == 0:
        raise DegenerateError("the bisector is perpendicular to ab; the angle at a is straight")
    k = s_param / 2
    if k == 1:
        raise DegenerateError("s on the line through b and σ(b): the Cevian bm is parallel to ac")
    T = RationalFunction.t()
    mu = k / (1 - k)
    nu = T * k / (T - k)

    def at(base: Point, u: Value, v: Value) -> Point:
        return Point(base.x + u * e1.x + v * e2.x, base.y + u * e1.y + v * e2.y)

    zero = Fraction(0)
    c = at(a, zero, T)
    mm = at(a, zero, mu)
    n = at(a, nu, zero)
    s = at(a, k, k)
    p = Point((mm.x + n.x) / 2, (mm.y + n.y) / 2)
    o = Point((b.x + c.x) / 2, (b.y + c.y) / 2)
    pts = {"a": a, "b": b, "c": c, "m": mm, "n": n, "s": s, "p": p, "o": o}
    fiber = RationalFunction(_form(m, mm - b)) - _form(m, n - c)
    return SLFamily(m, a, b, bisector, s_param, mirror, k, pts, fiber)


class RootSigns:
    """Sign oracle for rational functions of t at one isolated real root of ``p``."""

    def __init__(self, p: Polynomial, iso: Interval):
        self.p, self.iso = p, iso
        self._cache: dict = {}

    def poly_sign(self, q: Polynomial) -> int:
        key = tuple(q.coeffs)
        if key not in self._cache:
            self._cache[key] = refine_to_sign(self.p, q, self.iso)
        return self._cache[key]

    def __call__(self, v: Value) -> int:
        if not isinstance(v, RationalFunction):
            return sign(v)
        if v.num.degree <= 0:
            return sign(v.num.coeffs[0]) if v.num.degree == 0 else 0
        den = self.poly_sign(v.den) if v.den.degree > 0 else 1
        if den == 0:
            raise ZeroDivisionError("configuration undefined at this root")
        return self.poly_sign(v.num) * den


def classify_root(fam: SLFamily, iso: Interval) -> Verdict:
    """Decide the statement at the root of the fiber numerator isolated by ``iso``."""
    sg = RootSigns(fam.fiber_numerator, iso)
    t_sign = sg(RationalFunction.t())
    if t_sign == 0:
        return Verdict(HYPOTHESIS_FAILED, "¬L(abc)", True)
    cfg = dict(fam.points)
    cfg["d"] = fam.d_for_sign(t_sign)
    try:
        return decide(fam.model, sg, cfg)
    except ZeroDivisionError:
        # n runs off to infinity (t = k): the Cevian cn is parallel to ab
        return Verdict(HYPOTHESIS_FAILED, "Z(anb)", True)


def sample_family(m: MetricModel, rng: random.Random) -> SLFamily:
    """Random seed parameters for a family; s sits on the internal bisector."""
    while True:
        a = random_point(m, rng)
        bisector = random_line_through(m, rng, a)
        b = random_point(m, rng)
        if bisector.contains(b):
            continue
        if rng.random() < 0.85:
            s_param = 2 * random_unit(rng)
        else:
            s_param = 2 + 2 * random_unit(rng)
        try:
            return build_sl_family(m, a, b, bisector, s_param)
        except DegenerateError:
            continue


@dataclass
class FamilyResult:
    roots: int
    verdicts: list  # (Verdict, Interval)
    family: SLFamily
    indeterminate: bool = False


def _run_family(descriptor: str, seed: int, index: int) -> FamilyResult:
    m = MetricModel.parse(descriptor)
    fam = sample_family(m, rng_for(seed, index))
    if fam.fiber_numerator.is_zero():
        return FamilyResult(0, [], fam, indeterminate=True)
    isos = sturm_isolate(fam.fiber_numerator)
    return FamilyResult(len(isos), [(classify_root(fam, iso), iso) for iso in isos], fam)


def _scalar_note(iso: Interval) -> str:
    if iso.is_point:
        return f"t={iso.lo}"
    return f"t in ({iso.lo}, {iso.hi})"


def sl_falsification_search(
    m: MetricModel, n_families: int, seed: int = 0, workers: Optional[int] = None, max_witnesses: int = 5
) -> Report:
    """Isolate every real root of every sampled family's fiber and decide the statement there."""
    if not m.ordered:
        raise DegenerateError("the Steiner-Lehmus search needs an ordered model")
    if n_families <= 0:
        raise ValueError("family budget must be positive")
    rep = Report("theorem sl-general", m.descriptor, sampled_mode(n_families, seed), seed)
    with timed(rep):
        results = parallel_map(partial(_run_family, m.descriptor, seed), range(n_families), workers)
        tally: Counter = Counter()
        failures: Counter = Counter()
        for index, res in enumerate(results):
            tally["families"] += 1
            if res.indeterminate:
                tally["indeterminate"] += 1
                continue
            tally["roots"] += res.roots
            for verdict, iso in res.verdicts:
                rep.checked_count += 1
                if verdict.kind == HYPOTHESIS_FAILED:
                    rep.gated_count += 1
                    failures[verdict.conjunct] += 1
                    if verdict.boundary:
                        tally["boundary"] += 1
                elif verdict.kind == CONCLUSION_HOLDS:
                    tally["conclusion_holds"] += 1
                    if iso.is_point and len(rep.witnesses) < max_witnesses:
                        cfg = res.family.at(iso.lo)
                        rep.witnesses.append(entry(
                            "sl", CONCLUSION_HOLDS, dict(cfg.assignment(), t=iso.lo), note=f"family {index}",
                        ))
                else:
                    tally["counterexamples"] += 1
                    fam = res.family
                    rep.violations.append(entry(
                        "sl", COUNTEREXAMPLE,
                        {"a": fam.a, "b": fam.b, "bisector": fam.bisector, "s_param": fam.s_param},
                        note=f"family {index}, {_scalar_note(iso)}",
                    ))
        counts = dict(tally)
        counts.update({f"failed {k}": v for k, v in sorted(failures.items())})
        rep.witnesses.append(entry("sl-summary", "summary", counts=counts))
    return rep
