"""Sampled checks of the auxiliary facts F1-F13 and lemmas L1-L4 over an ordered model.

Each id has a constructive sampler and an evaluator.  The sampler forces the
expensive hypotheses by construction (reflections, motion images, points on
segments); the evaluator re-tests every hypothesis from the assignment alone
and gates the instance when one fails, so a sampler can never manufacture a
violation.  Ids F2, F3 and F9 are not part of the registry.
"""

from __future__ import annotations

import random
from functools import partial
from typing import Callable, Optional

from ..axioms import GATED, HOLDS, MAX_RECORDED, VIOLATION, IncompatibleModel, Tally
from ..motion import apply, three_reflections
from ..plane import (
    MetricModel,
    Point,
    angle_interior,
    between,
    bisectors,
    circle_circle,
    collinear,
    congruent,
    foot,
    intersect,
    is_acute,
    line_through,
    midpoint,
    norm,
    normal,
    perpendicular,
    ray_between,
    reflect_in_line,
    same_side,
    seg_less,
    transport,
)
from ..report import Report, entry, sampled_mode, timed
from ..sampling import (
    parallel_map,
    random_motion,
    random_point,
    random_positive,
    random_scalar,
    random_unit,
    rng_for,
)

Outcome = tuple[str, Optional[str]]


class UnknownFact(ValueError):
    pass


def _triangle(m, rng):
    while True:
        a, b, c = (random_point(m, rng) for _ in range(3))
        if not collinear(a, b, c):
            return a, b, c


def _pair(m, rng):
    while True:
        a, b = random_point(m, rng), random_point(m, rng)
        if a != b:
            return a, b


def _line_through(m, rng, p):
    q = random_point(m, rng)
    while q == p:
        q = random_point(m, rng)
    return line_through(p, q)


def _sign(rng) -> int:
    return 1 if rng.random() < 0.5 else -1


def _distinct(*pts) -> bool:
    return len(set(pts)) == len(pts)


# F1: points on the bisector of an angle are equidistant from its legs

def _sample_f1(m, rng):
    a, b = _pair(m, rng)
    g = _line_through(m, rng, b)
    u = reflect_in_line(m, a, g)
    d = g.direction
    mm = b + d.scale(random_positive(rng) * _sign(rng))
    p = b + (mm - b).scale(random_scalar(m, rng))
    return {"a": a, "b": b, "u": u, "m": mm, "p": p}


def _eval_f1(m, s) -> Outcome:
    a, b, u, mm, p = s["a"], s["b"], s["u"], s["m"], s["p"]
    if collinear(a, b, u) or not congruent(m, b, a, b, u) or mm == b or not congruent(m, mm, a, mm, u):
        return GATED, None
    if not collinear(b, mm, p):
        return GATED, None
    x, y = foot(m, p, line_through(b, a)), foot(m, p, line_through(b, u))
    if not congruent(m, p, x, p, y):
        return VIOLATION, "px≢py"
    if not congruent(m, b, x, b, y):
        return VIOLATION, "bx≢by"
    return HOLDS, None


# F4: acute angles, their sub-angles and congruent copies

def _sample_f4(m, rng):
    a, b = _pair(m, rng)
    e1 = b - a
    e2 = Point(-m.c * e1.y, e1.x)
    c = a + e1.scale(random_positive(rng)) + e2.scale(random_scalar(m, rng))
    inner = [a + (b - a).scale(random_positive(rng)) + (c - a).scale(random_positive(rng)) for _ in range(2)]
    alpha = random_motion(m, rng)
    return {"a": a, "b": b, "c": c, "d": inner[0], "e": inner[1],
            "a'": apply(alpha, a), "b'": apply(alpha, b), "c'": apply(alpha, c)}


def _eval_f4(m, s) -> Outcome:
    a, b, c, d, e = s["a"], s["b"], s["c"], s["d"], s["e"]
    if collinear(b, a, c) or not is_acute(m, b, a, c):
        return GATED, None
    if not is_acute(m, c, a, b):
        return VIOLATION, "∠cab not acute"
    if angle_interior(a, b, c, d) and angle_interior(a, b, c, e) and not collinear(d, a, e):
        if not is_acute(m, d, a, e):
            return VIOLATION, "∠dae inside ∠bac not acute"
    a2, b2, c2 = s["a'"], s["b'"], s["c'"]
    if congruent(m, a, b, a2, b2) and congruent(m, b, c, b2, c2) and congruent(m, c, a, c2, a2):
        if not is_acute(m, b2, a2, c2):
            return VIOLATION, "∠b'a'c' not acute"
    return HOLDS, None


# F5: equals subtracted from equals

def _sample_f5(m, rng):
    a, c = _pair(m, rng)
    b = a + (c - a).scale(random_unit(rng))
    alpha = random_motion(m, rng)
    a2, c2 = apply(alpha, a), apply(alpha, c)
    b2 = transport(m, a2, c2, norm(m, a, b))
    return {"a": a, "b": b, "c": c, "a'": a2, "b'": b2, "c'": c2}


F5_ANCHOR = {
    "a": Point(0, 0), "b": Point(1, 0), "c": Point(3, 0),
    "a'": Point(5, 0), "b'": Point(6, 0), "c'": Point(8, 0),
}


def _eval_f5(m, s) -> Outcome:
    a, b, c, a2, b2, c2 = s["a"], s["b"], s["c"], s["a'"], s["b'"], s["c'"]
    if b2 is None:
        return GATED, "b' not rational"
    if not (between(a, b, c) and between(a2, b2, c2)):
        return GATED, None
    if not (congruent(m, a, c, a2, c2) and congruent(m, a, b, a2, b2)):
        return GATED, None
    if not congruent(m, b, c, b2, c2):
        return VIOLATION, "bc≢b'c'"
    return HOLDS, None


# F6: orthogonal projection keeps betweenness

def _sample_f6(m, rng):
    o, a2 = _pair(m, rng)
    b2 = o + (a2 - o).scale(1 + random_positive(rng))
    l = _line_through(m, rng, o)
    return {"o": o, "a'": a2, "b'": b2, "a": foot(m, a2, l), "b": foot(m, b2, l)}


def _eval_f6(m, s) -> Outcome:
    o, a, b, a2, b2 = s["o"], s["a"], s["b"], s["a'"], s["b'"]
    if not _distinct(a, b) or a == a2 or b == b2:
        return GATED, None
    ab = line_through(a, b)
    if not (between(o, a2, b2) and collinear(o, a, b)):
        return GATED, None
    if not (perpendicular(m, line_through(a, a2), ab) and perpendicular(m, line_through(b, b2), ab)):
        return GATED, None
    if not between(o, a, b):
        return VIOLATION, "¬Z(oab)"
    return HOLDS, None


# F7: base angles of an isosceles triangle are acute

def _sample_f7(m, rng):
    a, b = _pair(m, rng)
    g = _line_through(m, rng, a)
    c = reflect_in_line(m, b, g)
    n = normal(m, line_through(b, c)) if b != c else Point(1, 0)
    if b != c and not same_side(line_through(b, c), a, b + n):
        n = n.scale(-1)
    return {"a": a, "b": b, "c": c, "b'": b + n.scale(random_positive(rng)), "c'": c + n.scale(random_positive(rng))}


def _eval_f7(m, s) -> Outcome:
    a, b, c, b2, c2 = s["a"], s["b"], s["c"], s["b'"], s["c'"]
    if collinear(a, b, c) or not congruent(m, a, b, a, c) or b2 == b or c2 == c:
        return GATED, None
    bc = line_through(b, c)
    if not (perpendicular(m, line_through(b, b2), bc) and perpendicular(m, line_through(c, c2), bc)):
        return GATED, None
    if not (same_side(bc, a, b2) and same_side(bc, a, c2)):
        return GATED, None
    if not ray_between(b, c, b2, a):
        return VIOLATION, "ba not between bc and bb'"
    if not ray_between(c, b, c2, a):
        return VIOLATION, "ca not between cb and cc'"
    return HOLDS, None


# F8: a transported segment stays on the near side

def _sample_f8(m, rng):
    a, c = _pair(m, rng)
    t = random_unit(rng)
    b = a + (c - a).scale(t)
    alpha = random_motion(m, rng)
    a2, c2 = apply(alpha, a), apply(alpha, c)
    r = rng.random()
    tau = t if r < 0.6 else (-t if r < 0.8 else 1 + random_positive(rng))
    return {"a": a, "b": b, "c": c, "a'": a2, "b'": a2 + (c2 - a2).scale(tau), "c'": c2}


def _eval_f8(m, s) -> Outcome:
    a, b, c, a2, b2, c2 = s["a"], s["b"], s["c"], s["a'"], s["b'"], s["c'"]
    if not (congruent(m, a, b, a2, b2) and congruent(m, a, c, a2, c2) and between(a, b, c)):
        return GATED, None
    if not (between(a2, b2, c2) or between(a2, c2, b2)):
        return GATED, None
    if not between(a2, b2, c2):
        return VIOLATION, "¬Z(a'b'c')"
    return HOLDS, None


# F10: transport along a bisectable angle's legs

def _sample_f10(m, rng):
    a, b = _pair(m, rng)
    g = _line_through(m, rng, a)
    c = a + (reflect_in_line(m, b, g) - a).scale(random_positive(rng))
    pts = [a + (b - a).scale(random_scalar(m, rng)) for _ in range(2)]
    pts += [a + (c - a).scale(random_scalar(m, rng)) for _ in range(2)]
    return dict(zip(("a", "b", "c", "x", "y", "u", "v"), (a, b, c, *pts)))


def _eval_f10(m, s) -> Outcome:
    a, b, c, x, y, u, v = (s[k] for k in ("a", "b", "c", "x", "y", "u", "v"))
    if collinear(b, a, c) or x == y or u == v:
        return GATED, None
    if not (collinear(a, b, x) and collinear(a, b, y) and collinear(a, c, u) and collinear(a, c, v)):
        return GATED, None
    bis = bisectors(m, a, b, c)
    if bis is None:
        return GATED, None
    z = transport(m, u, u + (u - v), norm(m, x, y))
    if z is None:
        return VIOLATION, "no z on the ray away from v"
    if not (congruent(m, u, z, x, y) and between(v, u, z)):
        return VIOLATION, "transported point misplaced"
    return HOLDS, None


# F11: intersecting lines carrying congruent segments have a bisector

def _sample_f11(m, rng):
    a, b = _pair(m, rng)
    alpha = random_motion(m, rng)
    return {"a": a, "b": b, "a'": apply(alpha, a), "b'": apply(alpha, b)}


def _eval_f11(m, s) -> Outcome:
    a, b, a2, b2 = s["a"], s["b"], s["a'"], s["b'"]
    if a == b or not congruent(m, a, b, a2, b2):
        return GATED, None
    l1, l2 = line_through(a, b), line_through(a2, b2)
    x = intersect(l1, l2)
    if x is None:
        return GATED, None
    p = a if a != x else b
    q = a2 if a2 != x else b2
    bis = bisectors(m, x, p, q)
    if bis is None:
        return VIOLATION, "no bisector at the intersection"
    if line_through(x, reflect_in_line(m, p, bis[0])) != l2:
        return VIOLATION, "bisector does not swap the lines"
    return HOLDS, None


# F12: congruent triangles have congruent corresponding altitudes from a side point

def _sample_f12(m, rng):
    a, b, c = _triangle(m, rng)
    alpha = random_motion(m, rng)
    a2, b2 = apply(alpha, a), apply(alpha, b)
    cs = circle_circle(m, a2, norm(m, a, c), b2, norm(m, b, c))
    c2 = rng.choice(cs) if cs else apply(alpha, c)
    d = a + (c - a).scale(random_scalar(m, rng))
    ds = circle_circle(m, a2, norm(m, a, d), c2, norm(m, d, c)) if d not in (a, c) else []
    d2 = rng.choice(ds) if ds else apply(alpha, d)
    return {"a": a, "b": b, "c": c, "d": d, "a'": a2, "b'": b2, "c'": c2, "d'": d2}


def _eval_f12(m, s) -> Outcome:
    a, b, c, d, a2, b2, c2, d2 = (s[k] for k in ("a", "b", "c", "d", "a'", "b'", "c'", "d'"))
    if collinear(a, b, c) or not collinear(a, d, c) or a2 == b2:
        return GATED, None
    pairs = ((a, b, a2, b2), (a, c, a2, c2), (c, b, c2, b2), (a, d, a2, d2), (d, c, d2, c2))
    if not all(congruent(m, *q) for q in pairs):
        return GATED, None
    f, f2 = foot(m, d, line_through(a, b)), foot(m, d2, line_through(a2, b2))
    if not congruent(m, d, f, d2, f2):
        return VIOLATION, "dF(abd)≢d'F(a'b'd')"
    return HOLDS, None


# F13: equal distances from a line on one side give a parallel

def _sample_f13(m, rng):
    a, b = _pair(m, rng)
    l = line_through(a, b)
    p1 = random_point(m, rng)
    q2 = a + (b - a).scale(random_scalar(m, rng))
    offset = p1 - foot(m, p1, l)
    k = 1 if rng.random() < 0.8 else -1
    return {"a": a, "b": b, "p1": p1, "p2": q2 + offset.scale(k)}


def _eval_f13(m, s) -> Outcome:
    a, b, p1, p2 = s["a"], s["b"], s["p1"], s["p2"]
    if a == b or p1 == p2:
        return GATED, None
    l = line_through(a, b)
    if l.contains(p1) or l.contains(p2) or not same_side(l, p1, p2):
        return GATED, None
    if not congruent(m, p1, foot(m, p1, l), p2, foot(m, p2, l)):
        return GATED, None
    if intersect(line_through(p1, p2), l) is not None:
        return VIOLATION, "⟨p1,p2⟩ meets ⟨a,b⟩"
    return HOLDS, None


# L1: bm' < bn

def _sample_l1(m, rng):
    c, n = _pair(m, rng)
    s = c + (n - c).scale(random_unit(rng))
    m2 = reflect_in_line(m, n, _line_through(m, rng, c))
    x = c + (m2 - c).scale(random_unit(rng))
    b = x + (x - s).scale(random_positive(rng))
    return {"b": b, "s": s, "c": c, "x": x, "m'": m2, "n": n}


def _eval_l1(m, s) -> Outcome:
    b, sp, c, x, m2, n = (s[k] for k in ("b", "s", "c", "x", "m'", "n"))
    if collinear(b, sp, c) or m2 == n or b in (m2, n):
        return GATED, None
    if not (between(b, x, sp) and between(c, x, m2) and between(c, sp, n) and congruent(m, c, n, c, m2)):
        return GATED, None
    if not seg_less(m, b, m2, n):
        return VIOLATION, "¬(bm'<bn)"
    return HOLDS, None


# L2: ab ≡ ab' with Z(ab'c) gives ab < ac

def _sample_l2(m, rng):
    a, b = _pair(m, rng)
    b2 = reflect_in_line(m, b, _line_through(m, rng, a))
    c = a + (b2 - a).scale(1 + random_positive(rng))
    return {"a": a, "b": b, "b'": b2, "c": c, "o": midpoint(b, c)}


def _eval_l2(m, s) -> Outcome:
    a, b, b2, c, o = s["a"], s["b"], s["b'"], s["c"], s["o"]
    if not (between(b, o, c) and congruent(m, o, b, o, c)):
        return GATED, None
    if collinear(a, b, c) or not between(a, b2, c) or not congruent(m, a, b, a, b2):
        return GATED, None
    if not seg_less(m, a, b, c):
        return VIOLATION, "¬(ab<ac)"
    return HOLDS, None


# L3: the disjunction Z(odc) ∨ Z(ocd) always resolves to Z(odc)

def _sample_l3(m, rng):
    a, b = _pair(m, rng)
    b2 = a + (a - b)
    e = b - a
    o = a + Point(-m.c * e.y, e.x).scale(random_scalar(m, rng))
    d = reflect_in_line(m, b, _line_through(m, rng, o))
    c = intersect(line_through(a, b), line_through(o, d)) if o != d else None
    if c is None:
        c = a + e.scale(1 + random_positive(rng))
    return {"a": a, "b": b, "b'": b2, "o": o, "c": c, "d": d}


def _eval_l3(m, s) -> Outcome:
    a, b, b2, o, c, d = (s[k] for k in ("a", "b", "b'", "o", "c", "d"))
    if not (between(b, a, b2) and congruent(m, a, b, a, b2)) or o == a:
        return GATED, None
    if not between(a, b, c) or not congruent(m, o, b, o, b2) or not congruent(m, o, d, o, b):
        return GATED, None
    if not (between(o, d, c) or between(o, c, d)):
        return GATED, "disjunction false"
    if not between(o, d, c):
        return VIOLATION, "Z(ocd) without Z(odc)"
    return HOLDS, None


# L4: three reflections in concurrent lines

def _sample_l4(m, rng):
    o, a, c = _triangle(m, rng)
    b = o + (a - o).scale(random_positive(rng)) + (c - o).scale(random_positive(rng))
    return {"o": o, "a": a, "b": b, "c": c}


def _eval_l4(m, s) -> Outcome:
    o, a, b, c = s["o"], s["a"], s["b"], s["c"]
    if collinear(o, a, c) or not ray_between(o, a, c, b):
        return GATED, None
    d_line = three_reflections(m, line_through(o, c), line_through(o, b), line_through(o, a))
    if d_line is None or not d_line.contains(o):
        return VIOLATION, "σ_oc σ_ob σ_oa is not a reflection in a line through o"
    p = o + d_line.direction
    if not (ray_between(o, a, c, p) or ray_between(o, a, c, o - d_line.direction)):
        return VIOLATION, "neither half of ⟨o,d⟩ lies between oa and oc"
    return HOLDS, None


FACTS: dict[str, tuple[Callable, Callable]] = {
    "F1": (_sample_f1, _eval_f1),
    "F4": (_sample_f4, _eval_f4),
    "F5": (_sample_f5, _eval_f5),
    "F6": (_sample_f6, _eval_f6),
    "F7": (_sample_f7, _eval_f7),
    "F8": (_sample_f8, _eval_f8),
    "F10": (_sample_f10, _eval_f10),
    "F11": (_sample_f11, _eval_f11),
    "F12": (_sample_f12, _eval_f12),
    "F13": (_sample_f13, _eval_f13),
    "L1": (_sample_l1, _eval_l1),
    "L2": (_sample_l2, _eval_l2),
    "L3": (_sample_l3, _eval_l3),
    "L4": (_sample_l4, _eval_l4),
}

ANCHORS = {"F5": [F5_ANCHOR]}


def evaluate_fact(fact: str, m: MetricModel, assignment: dict) -> Outcome:
    if fact not in FACTS:
        raise UnknownFact(f"unknown fact {fact!r}; known: {', '.join(FACTS)}")
    return FACTS[fact][1](m, assignment)


def _run_fact(fact: str, descriptor: str, seed: int, index: int) -> Tally:
    m = MetricModel.parse(descriptor)
    sample, evaluate = FACTS[fact]
    s = sample(m, rng_for(seed, index))
    tally = Tally()
    outcome, note = evaluate(m, s)
    tally.add(outcome, s, note)
    return tally


def check_fact(fact: str, m: MetricModel, n_samples: int, seed: int = 0, workers: Optional[int] = None) -> Report:
    if fact not in FACTS:
        raise UnknownFact(f"unknown fact {fact!r}; known: {', '.join(FACTS)}")
    if not m.ordered:
        raise IncompatibleModel(f"{fact} needs an ordered model, got {m.descriptor}")
    if n_samples <= 0:
        raise ValueError("sample budget must be positive")
    rep = Report(f"facts {fact}", m.descriptor, sampled_mode(n_samples, seed), seed)
    with timed(rep):
        total = Tally()
        for s in ANCHORS.get(fact, []):
            outcome, note = evaluate_fact(fact, m, s)
            total.add(outcome, s, note)
            if outcome == HOLDS:
                rep.witnesses.append(entry(fact, HOLDS, s, note="anchor configuration"))
        for t in parallel_map(partial(_run_fact, fact, m.descriptor, seed), range(n_samples), workers):
            total.merge(t)
        rep.checked_count, rep.gated_count = total.checked, total.gated
        rep.violations = [entry(fact, VIOLATION, s, note=note) for s, note in total.violations]
        if total.total_violations > MAX_RECORDED:
            rep.witnesses.append(entry(
                fact, "summary", counts={"violations": total.total_violations, "recorded": len(total.violations)},
            ))
    return rep


def sample_fact(fact: str, m: MetricModel, rng: random.Random) -> dict:
    return FACTS[fact][0](m, rng)
