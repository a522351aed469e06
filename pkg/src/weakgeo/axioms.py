"""Checking the axioms of ordered metric planes and of Hjelmslev groups on a model.

Order axioms (A1-A4, A11, A12) need an ordered model and are checked by
constructive sampling.  The congruence axioms A5-A10 run on any model; over
a finite field they can also be enumerated exhaustively.  Because every
predicate is invariant under translation, exhaustive sweeps pin the first
point of each congruent configuration at the origin.

Every evaluator returns one of three outcomes for an assignment: the
hypothesis fails (gated), the conclusion holds, or a violation.
"""

from __future__ import annotations

import random
from functools import partial
from itertools import product
from typing import Callable, Iterable, Optional

from .motion import (
    apply,
    compose,
    in_S,
    is_involution,
    product_of,
    reflections_P,
    reflections_S,
)
from .plane import (
    Line,
    MetricModel,
    Point,
    between,
    circle_circle,
    collinear,
    congruent,
    foot,
    intersect,
    line_circle,
    line_through,
    perpendicular,
    reflect_in_line,
    strictly_collinear,
)
from .report import Report, entry, sampled_mode, timed
from .sampling import (
    parallel_map,
    random_motion,
    random_point,
    random_scalar,
    random_unit,
    rng_for,
)

ORDERED = ("A1", "A2", "A3", "A4", "A11", "A12")
METRIC = ("A5", "A6", "A7", "A8", "A9", "A10")
AXIOMS = ("A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9", "A10", "A11", "A12", "LOWDIM")
HJELMSLEV = ("H1", "H2", "H3", "H4", "H5")

MAX_RECORDED = 100

GATED, HOLDS, VIOLATION = "gated", "holds", "violation"


class IncompatibleModel(ValueError):
    pass


# ---------------------------------------------------------------------------
# evaluators: assignment -> (outcome, note)


def _eval_a1(m, s):
    if not between(s["a"], s["b"], s["c"]):
        return GATED, "Z(abc)"
    return (HOLDS, None) if between(s["c"], s["b"], s["a"]) else (VIOLATION, "Z(cba) fails")


def _eval_a2(m, s):
    if not between(s["a"], s["b"], s["c"]):
        return GATED, "Z(abc)"
    return (HOLDS, None) if not between(s["a"], s["c"], s["b"]) else (VIOLATION, "Z(acb) holds")


def _lam(a, b, c):
    return between(a, b, c) or between(b, c, a) or between(c, a, b)


def _eval_a3(m, s):
    a, b, c, d = s["a"], s["b"], s["c"], s["d"]
    if not (_lam(a, b, c) and (_lam(a, b, d) or b == d)):
        return GATED, "λ(abc)∧(λ(abd)∨b=d)"
    return (HOLDS, None) if _lam(c, d, a) or c == d else (VIOLATION, "λ(cda)∨c=d fails")


def pasch_candidates(a: Point, b: Point, c: Point, d: Point, e: Point) -> list[Point]:
    """Intersections of ⟨d,e⟩ with ⟨a,c⟩ and ⟨b,c⟩, the only places a Pasch point can sit."""
    de = line_through(d, e)
    out = []
    for side in (line_through(a, c), line_through(b, c)):
        f = intersect(de, side)
        if f is not None:
            out.append(f)
    return out


def _eval_a4(m, s):
    a, b, c, d, e = (s[k] for k in "abcde")
    if collinear(a, b, c) or not between(a, d, b) or collinear(a, b, e) or c == e or _lam(c, d, e):
        return GATED, "¬L(abc)∧Z(adb)∧¬L(abe)∧c≠e∧¬λ(cde)"
    for f in pasch_candidates(a, b, c, d, e):
        if (between(a, f, c) or between(b, f, c)) and (_lam(e, d, f) or f == e):
            return HOLDS, None
    return VIOLATION, "no f on ⟨d,e⟩ inside ac or bc"


def _eval_a5(m, s):
    a, b, p, q, r, t = s["a"], s["b"], s["p"], s["q"], s["r"], s["s"]
    if not (congruent(m, a, b, p, q) and congruent(m, a, b, r, t)):
        return GATED, "ab≡pq∧ab≡rs"
    return (HOLDS, None) if congruent(m, p, q, r, t) else (VIOLATION, "pq≢rs")


def _eval_a6(m, s):
    a, b, c = s["a"], s["b"], s["c"]
    if not congruent(m, a, b, c, c):
        return GATED, "ab≡cc"
    return (HOLDS, None) if a == b else (VIOLATION, "a≠b")


def _eval_a7(m, s):
    a, b = s["a"], s["b"]
    return (HOLDS, None) if congruent(m, a, b, b, a) and congruent(m, a, a, b, b) else (VIOLATION, None)


def a8_solutions(m: MetricModel, a, b, c, a2, b2) -> list[Point]:
    """Every c' with λ(a'b'c') ∧ ac≡a'c' ∧ bc≡b'c', solved on the line ⟨a',b'⟩."""
    out = []
    for p in line_circle(m, a2, m.form(c - a), line_through(a2, b2)):
        if congruent(m, b, c, b2, p) and strictly_collinear(a2, b2, p):
            out.append(p)
    return out


def _eval_a8(m, s):
    a, b, c, a2, b2 = s["a"], s["b"], s["c"], s["a'"], s["b'"]
    if not (strictly_collinear(a, b, c) and congruent(m, a, b, a2, b2)):
        return GATED, "λ(abc)∧ab≡a'b'"
    sols = a8_solutions(m, a, b, c, a2, b2)
    if len(sols) == 1:
        return HOLDS, None
    return VIOLATION, f"{len(sols)} solutions for c'"


def _eval_a9(m, s):
    a, b, c, x, a2, b2, c2, x2 = (s[k] for k in ("a", "b", "c", "x", "a'", "b'", "c'", "x'"))
    hyp = (
        not collinear(a, b, x)
        and collinear(a, b, c)
        and collinear(a2, b2, c2)
        and congruent(m, a, b, a2, b2)
        and congruent(m, b, c, b2, c2)
        and congruent(m, a, c, a2, c2)
        and congruent(m, a, x, a2, x2)
        and congruent(m, b, x, b2, x2)
    )
    if not hyp:
        return GATED, "hypothesis of A9"
    return (HOLDS, None) if congruent(m, x, c, x2, c2) else (VIOLATION, "xc≢x'c'")


def a10_solutions(m: MetricModel, a, b, x) -> list[Point]:
    return [p for p in circle_circle(m, a, m.form(x - a), b, m.form(x - b)) if p != x]


def _eval_a10(m, s):
    a, b, x = s["a"], s["b"], s["x"]
    if collinear(a, b, x):
        return GATED, "¬L(abx)"
    sols = a10_solutions(m, a, b, x)
    if len(sols) == 1 and sols[0] == reflect_in_line(m, x, line_through(a, b)):
        return HOLDS, None
    return VIOLATION, f"{len(sols)} solutions for x'"


def _eval_a11(m, s):
    a, b, x, x2 = s["a"], s["b"], s["x"], s["x'"]
    if collinear(a, b, x) or x2 == x or not (congruent(m, a, x, a, x2) and congruent(m, b, x, b, x2)):
        return GATED, "¬L(abx)∧x'≠x∧ax≡ax'∧bx≡bx'"
    y = foot(m, x, line_through(a, b))
    if collinear(a, b, y) and between(x, y, x2):
        return HOLDS, None
    return VIOLATION, "Z(xyx') fails at the foot y"


A12_CONJUNCTS = ("Z(aoa')", "oa≡oa'", "ba≡ba'", "o≠b", "λ(abc)", "Z(bcb')", "cb≡cb'", "ob≡ob'")


def a12_hypotheses(m: MetricModel, s: dict) -> list[tuple[str, bool]]:
    o, a, b, c, a2, b2 = (s[k] for k in ("o", "a", "b", "c", "a'", "b'"))
    return [
        ("Z(aoa')", between(a, o, a2)),
        ("oa≡oa'", congruent(m, o, a, o, a2)),
        ("ba≡ba'", congruent(m, b, a, b, a2)),
        ("o≠b", o != b),
        ("λ(abc)", strictly_collinear(a, b, c)),
        ("Z(bcb')", between(b, c, b2)),
        ("cb≡cb'", congruent(m, c, b, c, b2)),
        ("ob≡ob'", congruent(m, o, b, o, b2)),
    ]


def _eval_a12(m, s):
    for name, ok in a12_hypotheses(m, s):
        if not ok:
            return GATED, name
    if between(s["a"], s["c"], s["b"]):
        return HOLDS, None
    return VIOLATION, "Z(acb) fails"


EVALUATORS: dict[str, Callable] = {
    "A1": _eval_a1,
    "A2": _eval_a2,
    "A3": _eval_a3,
    "A4": _eval_a4,
    "A5": _eval_a5,
    "A6": _eval_a6,
    "A7": _eval_a7,
    "A8": _eval_a8,
    "A9": _eval_a9,
    "A10": _eval_a10,
    "A11": _eval_a11,
    "A12": _eval_a12,
}


def evaluate(axiom: str, m: MetricModel, assignment: dict) -> tuple[str, Optional[str]]:
    return EVALUATORS[axiom](m, assignment)


# ---------------------------------------------------------------------------
# constructive samplers: rng -> list of assignments


def _param(m: MetricModel, rng: random.Random):
    """A line parameter, strictly inside (0, 1) most of the time over Q."""
    if m.ordered and rng.random() < 0.7:
        return random_unit(rng)
    return random_scalar(m, rng)


def _distinct_pair(m, rng):
    while True:
        a, b = random_point(m, rng), random_point(m, rng)
        if a != b:
            return a, b


def _triangle(m, rng):
    while True:
        a, b, c = (random_point(m, rng) for _ in range(3))
        if not collinear(a, b, c):
            return a, b, c


def _on_segment_line(m, rng, a, b):
    return a + (b - a).scale(_param(m, rng))


def _sample_a1(m, rng):
    a, c = _distinct_pair(m, rng)
    return [{"a": a, "b": _on_segment_line(m, rng, a, c), "c": c}]


def _sample_a3(m, rng):
    p, q = _distinct_pair(m, rng)
    pts = [p + (q - p).scale(random_scalar(m, rng)) for _ in range(4)]
    a, b, c, d = pts
    roll = rng.random()
    if roll < 0.2:
        d = b
    elif roll < 0.3:
        d = c
    return [{"a": a, "b": b, "c": c, "d": d}]


def _sample_a4(m, rng):
    a, b, c = _triangle(m, rng)
    d = a + (b - a).scale(random_unit(rng))
    e = random_point(m, rng)
    return [{"a": a, "b": b, "c": c, "d": d, "e": e}]


def _image_or_random(m, rng, alpha_prob, *pts):
    if rng.random() < alpha_prob:
        mo = random_motion(m, rng)
        return [apply(mo, p) for p in pts]
    return [random_point(m, rng) for _ in pts]


def _sample_a5(m, rng):
    a, b = random_point(m, rng), random_point(m, rng)
    p, q = _image_or_random(m, rng, 0.8, a, b)
    r, s = _image_or_random(m, rng, 0.8, a, b)
    return [{"a": a, "b": b, "p": p, "q": q, "r": r, "s": s}]


def _sample_a6(m, rng):
    a = random_point(m, rng)
    b = a if rng.random() < 0.3 else random_point(m, rng)
    return [{"a": a, "b": b, "c": random_point(m, rng)}]


def _sample_a7(m, rng):
    return [{"a": random_point(m, rng), "b": random_point(m, rng)}]


def _sample_a8(m, rng):
    a, b = _distinct_pair(m, rng)
    c = a + (b - a).scale(random_scalar(m, rng))
    a2, b2 = _image_or_random(m, rng, 0.9, a, b)
    return [{"a": a, "b": b, "c": c, "a'": a2, "b'": b2}]


def _sample_a9(m, rng):
    a, b, x = _triangle(m, rng)
    roll = rng.random()
    c = a if roll < 0.1 else b if roll < 0.2 else a + (b - a).scale(random_scalar(m, rng))
    a2, b2 = _image_or_random(m, rng, 0.9, a, b)
    base = {"a": a, "b": b, "c": c, "x": x, "a'": a2, "b'": b2}
    if a2 == b2 or not congruent(m, a, b, a2, b2):
        return [dict(base, **{"c'": c, "x'": x})]
    c_opts = [p for p in line_circle(m, a2, m.form(c - a), line_through(a2, b2)) if congruent(m, b, c, b2, p)]
    x_opts = circle_circle(m, a2, m.form(x - a), b2, m.form(x - b))
    out = [dict(base, **{"c'": c2, "x'": x2}) for c2 in c_opts for x2 in x_opts]
    return out or [dict(base, **{"c'": c, "x'": x})]


def _sample_a10(m, rng):
    return [{"a": random_point(m, rng), "b": random_point(m, rng), "x": random_point(m, rng)}]


def _sample_a11(m, rng):
    a, b, x = _triangle(m, rng)
    x2 = reflect_in_line(m, x, line_through(a, b)) if rng.random() < 0.9 else random_point(m, rng)
    return [{"a": a, "b": b, "x": x, "x'": x2}]


def a12_configuration(m: MetricModel, o: Point, a: Point, b: Point) -> dict:
    """Complete (o, a, b) to the A12 assignment: a' = ϱ_o(a), c the foot from o on ⟨a,b⟩, b' = ϱ_c(b)."""
    c = foot(m, o, line_through(a, b))
    return {"o": o, "a": a, "b": b, "c": c, "a'": o.scale(2) - a, "b'": c.scale(2) - b}


A12_CANONICAL = {"o": (0, 1), "a": (1, 0), "b": (2, 0)}


def _sample_a12(m, rng):
    o, a = _distinct_pair(m, rng)
    d = a - o
    # a direction B-orthogonal to d, so that ⟨o,b⟩ ⊥ ⟨o,a⟩
    e = Point(-m.c * d.y, d.x)
    k = random_scalar(m, rng)
    while k == 0:
        k = random_scalar(m, rng)
    return [a12_configuration(m, o, a, o + e.scale(k))]


SAMPLERS: dict[str, Callable] = {
    "A1": _sample_a1,
    "A2": _sample_a1,
    "A3": _sample_a3,
    "A4": _sample_a4,
    "A5": _sample_a5,
    "A6": _sample_a6,
    "A7": _sample_a7,
    "A8": _sample_a8,
    "A9": _sample_a9,
    "A10": _sample_a10,
    "A11": _sample_a11,
    "A12": _sample_a12,
}


def anchors(axiom: str, m: MetricModel) -> list[dict]:
    """Fixed assignments evaluated ahead of the random samples."""
    if axiom == "A12":
        pts = {k: m.point(*v) for k, v in A12_CANONICAL.items()}
        return [a12_configuration(m, pts["o"], pts["a"], pts["b"])]
    return []


# ---------------------------------------------------------------------------
# exhaustive enumerators for finite models (outer loop index -> assignments)


def _exhaustive_outer(axiom: str, m: MetricModel) -> list:
    pts = m.points()
    if axiom in ("A5", "A6", "A7", "A10"):
        return list(pts)
    if axiom in ("A8", "A9"):
        return [p for p in pts if not p.is_origin()]
    raise IncompatibleModel(f"{axiom} has no exhaustive mode")


def _exhaustive_block(axiom: str, m: MetricModel, outer: Point) -> Iterable[dict]:
    pts = m.points()
    O = m.point(0, 0)
    if axiom == "A5":
        for v, w in product(pts, repeat=2):
            yield {"a": O, "b": outer, "p": O, "q": v, "r": O, "s": w}
    elif axiom == "A6":
        for b, c in product(pts, repeat=2):
            yield {"a": outer, "b": b, "c": c}
    elif axiom == "A7":
        for b in pts:
            yield {"a": outer, "b": b}
    elif axiom == "A10":
        for x in pts:
            yield {"a": O, "b": outer, "x": x}
    elif axiom == "A8":
        for c in pts:
            if not collinear(O, outer, c):
                continue
            for b2 in pts:
                yield {"a": O, "b": outer, "c": c, "a'": O, "b'": b2}
    elif axiom == "A9":
        # only hypothesis-satisfying assignments are generated; the rest fail a congruence conjunct
        images = [b2 for b2 in pts if congruent(m, O, outer, O, b2)]
        on_ab = [p for p in pts if collinear(O, outer, p)]
        apexes = [x for x in pts if not collinear(O, outer, x)]
        for b2 in images:
            by_norms: dict = {}
            for x2 in pts:
                by_norms.setdefault((m.form(x2), m.form(x2 - b2)), []).append(x2)
            on_a2b2 = [p for p in pts if collinear(O, b2, p)]
            for c in on_ab:
                for c2 in on_a2b2:
                    if not (congruent(m, outer, c, b2, c2) and congruent(m, O, c, O, c2)):
                        continue
                    for x in apexes:
                        for x2 in by_norms.get((m.form(x), m.form(x - outer)), ()):
                            yield {"a": O, "b": outer, "c": c, "x": x, "a'": O, "b'": b2, "c'": c2, "x'": x2}


def _brute_unique(axiom: str, m: MetricModel, s: dict) -> tuple[str, Optional[str]]:
    """∃=1 axioms over a finite field: count witnesses over every point."""
    if axiom == "A8":
        a, b, c, a2, b2 = s["a"], s["b"], s["c"], s["a'"], s["b'"]
        if not (strictly_collinear(a, b, c) and congruent(m, a, b, a2, b2)):
            return GATED, "λ(abc)∧ab≡a'b'"
        n = sum(
            1 for p in m.points()
            if strictly_collinear(a2, b2, p) and congruent(m, a, c, a2, p) and congruent(m, b, c, b2, p)
        )
    else:
        a, b, x = s["a"], s["b"], s["x"]
        if collinear(a, b, x):
            return GATED, "¬L(abx)"
        n = sum(1 for p in m.points() if p != x and congruent(m, a, x, a, p) and congruent(m, b, x, b, p))
    return (HOLDS, None) if n == 1 else (VIOLATION, f"{n} witnesses")


# ---------------------------------------------------------------------------
# drivers


class Tally:
    def __init__(self):
        self.checked = 0
        self.gated = 0
        self.violations: list[tuple[dict, Optional[str]]] = []
        self.total_violations = 0

    def add(self, outcome, assignment, note):
        self.checked += 1
        if outcome == GATED:
            self.gated += 1
        elif outcome == VIOLATION:
            self.total_violations += 1
            if len(self.violations) < MAX_RECORDED:
                self.violations.append((assignment, note))

    def merge(self, other: "Tally"):
        self.checked += other.checked
        self.gated += other.gated
        self.total_violations += other.total_violations
        room = MAX_RECORDED - len(self.violations)
        self.violations += other.violations[:max(room, 0)]


def _run_sample(axiom: str, descriptor: str, seed: int, index: int) -> Tally:
    m = MetricModel.parse(descriptor)
    tally = Tally()
    for s in SAMPLERS[axiom](m, rng_for(seed, index)):
        outcome, note = evaluate(axiom, m, s)
        tally.add(outcome, s, note)
    return tally


def _run_block(axiom: str, descriptor: str, outer: Point) -> Tally:
    m = MetricModel.parse(descriptor)
    tally = Tally()
    for s in _exhaustive_block(axiom, m, outer):
        if axiom in ("A8", "A10"):
            outcome, note = _brute_unique(axiom, m, s)
        else:
            outcome, note = evaluate(axiom, m, s)
        tally.add(outcome, s, note)
    return tally


def _lowdim(m: MetricModel) -> Report:
    rep = Report("axioms", m.descriptor, "constructed")
    a, b, c = m.point(0, 0), m.point(1, 0), m.point(0, 1)
    rep.checked_count = 1
    if collinear(a, b, c):
        rep.violations.append(entry("LOWDIM", "violation", {"a": a, "b": b, "c": c}))
    else:
        rep.witnesses.append(entry("LOWDIM", "witness", {"a": a, "b": b, "c": c}, note="¬L(abc)"))
    return rep


def check_axiom(
    axiom: str,
    m: MetricModel,
    samples: Optional[int] = None,
    seed: int = 0,
    exhaustive: bool = False,
    workers: Optional[int] = None,
) -> Report:
    """Check one axiom, by exhaustive enumeration or by ``samples`` constructed instances."""
    start = Report("axioms", m.descriptor, "constructed")
    with timed(start):
        rep = _check_axiom(axiom, m, samples, seed, exhaustive, workers)
    rep.elapsed_ms = start.elapsed_ms
    return rep


def _check_axiom(axiom, m, samples, seed, exhaustive, workers) -> Report:
    if axiom not in AXIOMS:
        raise ValueError(f"unknown axiom {axiom!r}")
    if axiom == "LOWDIM":
        return _lowdim(m)
    if axiom in ORDERED and not m.ordered:
        raise IncompatibleModel(f"{axiom} needs an ordered model, got {m.descriptor}")
    if exhaustive:
        if not m.finite:
            raise IncompatibleModel("exhaustive checks need a finite model")
        mode, seed_out = "exhaustive", None
        outer = _exhaustive_outer(axiom, m)
        tallies = parallel_map(partial(_run_block, axiom, m.descriptor), outer, workers)
    else:
        if not samples or samples <= 0:
            raise ValueError("sample budget must be positive")
        mode, seed_out = sampled_mode(samples, seed), seed
        tallies = [Tally()]
        for s in anchors(axiom, m):
            outcome, note = evaluate(axiom, m, s)
            tallies[0].add(outcome, s, note)
        tallies += parallel_map(partial(_run_sample, axiom, m.descriptor, seed), range(samples), workers)
    total = Tally()
    for t in tallies:
        total.merge(t)
    rep = Report("axioms", m.descriptor, mode, seed_out, total.checked, total.gated)
    rep.violations = [entry(axiom, "violation", s, note=note) for s, note in total.violations]
    if total.total_violations > len(total.violations):
        rep.witnesses.append(entry(
            axiom, "summary",
            counts={"violations": total.total_violations, "recorded": len(total.violations)},
        ))
    return rep


def check_axioms(
    ids: list[str],
    m: MetricModel,
    samples: Optional[int] = None,
    seed: int = 0,
    exhaustive: bool = False,
    workers: Optional[int] = None,
) -> Report:
    """Several axioms in one report; counts and witness lists are concatenated in the given order."""
    with timed(Report("axioms", m.descriptor, "constructed")) as rep:
        parts = [check_axiom(a, m, samples, seed, exhaustive, workers) for a in ids]
        modes = {p.mode for p in parts if p.mode != "constructed"}
        rep.mode = modes.pop() if len(modes) == 1 else parts[0].mode
        rep.seed = None if exhaustive else seed
        for p in parts:
            rep.checked_count += p.checked_count
            rep.gated_count += p.gated_count
            rep.violations += p.violations
            rep.witnesses += p.witnesses
    return rep


def default_axioms(m: MetricModel) -> list[str]:
    return list(AXIOMS if m.ordered else METRIC + ("LOWDIM",))


# ---------------------------------------------------------------------------
# the non-standard plane over Q with c = -2


def repro_a12(c=-2) -> Report:
    """Rebuild the right triangle o=(0,1), a=(1,0), b=(2,0) and check A12 on it exactly."""
    m = MetricModel.parse(f"q:c={c}")
    with timed(Report("repro a12", m.descriptor, "constructed")) as rep:
        o, a, b = m.point(0, 1), m.point(1, 0), m.point(2, 0)
        oa, ob = line_through(o, a), line_through(o, b)
        rep.checked_count = 1
        right = perpendicular(m, oa, ob)
        rep.witnesses.append(entry(
            "right-angle", "holds" if right else "fails",
            {"<o,a>": oa, "<o,b>": ob}, note=f"c*u*u'+v*v' = {m.c * oa.u * ob.u + oa.v * ob.v}",
        ))
        s = a12_configuration(m, o, a, b)
        failed = [name for name, ok in a12_hypotheses(m, s) if not ok]
        if failed:
            rep.gated_count = 1
            rep.witnesses.append(entry("A12", "hypothesis-mismatch", s, note=", ".join(failed)))
        elif between(s["a"], s["c"], s["b"]):
            rep.witnesses.append(entry("A12", "holds", s))
        else:
            rep.violations.append(entry("A12", "violation", s, note="Z(acb) fails"))
    return rep


# ---------------------------------------------------------------------------
# Hjelmslev axioms in the group of motions of a finite model


class _Incidence:
    """Stroke tables between point and line reflections of a finite model."""

    def __init__(self, m: MetricModel):
        self.m = m
        self.P = reflections_P(m)
        self.S = reflections_S(m)
        self.lines = list(self.S)
        self.points = list(self.P)
        # A | c  <=>  A, c and Ac are involutions (A, c already are)
        self.on = {l: {A for A in self.points if is_involution(compose(self.P[A], self.S[l]))} for l in self.lines}
        self.perp = {l: [g for g in self.lines if is_involution(compose(self.S[l], self.S[g]))] for l in self.lines}


def _h_report(m: MetricModel) -> Report:
    return Report("hjelmslev", m.descriptor, "exhaustive")


def check_hjelmslev(m: MetricModel, which: Optional[list[str]] = None) -> Report:
    if not m.finite:
        raise IncompatibleModel("Hjelmslev axioms are checked exhaustively and need a finite model")
    which = list(which or HJELMSLEV)
    for h in which:
        if h not in HJELMSLEV:
            raise ValueError(f"unknown Hjelmslev axiom {h!r}")
    with timed(_h_report(m)) as rep:
        inc = _Incidence(m)
        for h in which:
            _HCHECKS[h](inc, rep)
    return rep


def _h1(inc: _Incidence, rep: Report):
    for A, b in product(inc.points, inc.lines):
        rep.checked_count += 1
        if not any(A in inc.on[c] for c in inc.perp[b]):
            rep.violations.append(entry("H1", "violation", {"A": A, "b": b}, note="no c with A, b | c"))


def _h2(inc: _Incidence, rep: Report):
    for c, d in product(inc.lines, repeat=2):
        common = inc.on[c] & inc.on[d]
        rep.checked_count += 1
        if c != d and len(common) > 1:
            A, B = sorted(common, key=repr)[:2]
            rep.violations.append(entry("H2", "violation", {"A": A, "B": B, "c": c, "d": d}))


def _three(inc: _Incidence, rep: Report, check: str, lines: list[Line], anchor: dict):
    for a, b, c in product(lines, repeat=3):
        rep.checked_count += 1
        prod = product_of(inc.S[a], inc.S[b], inc.S[c])
        if in_S(prod) is None:
            rep.violations.append(entry(check, "violation", dict(anchor, a=a, b=b, c=c), note="abc ∉ S"))


def _h3(inc: _Incidence, rep: Report):
    for e in inc.lines:
        _three(inc, rep, "H3", inc.perp[e], {"e": e})


def _h4(inc: _Incidence, rep: Report):
    # common-perpendicular reading: a, b, c ⊥ e (the same test as H3)
    for e in inc.lines:
        _three(inc, rep, "H4", inc.perp[e], {"e": e})
    # literal reading: a, b, c | E for a point reflection E
    for E in inc.points:
        through = [l for l in inc.lines if E in inc.on[l]]
        _three(inc, rep, "H4-point", through, {"E": E})


def _h5(inc: _Incidence, rep: Report):
    rep.checked_count += 1
    for a in inc.lines:
        if inc.perp[a]:
            rep.witnesses.append(entry("H5", "witness", {"a": a, "b": inc.perp[a][0]}, note="a | b"))
            return
    rep.violations.append(entry("H5", "violation", note="no pair a | b"))


_HCHECKS = {"H1": _h1, "H2": _h2, "H3": _h3, "H4": _h4, "H5": _h5}
