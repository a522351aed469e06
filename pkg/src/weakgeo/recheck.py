"""Re-derive the verdict of every recorded violation or witness from its assignment.

The handlers here recompute each verdict with the plane predicates only; they
do not reuse the enumeration that produced the entry.  The one exception is
a Steiner-Lehmus counterexample at an irrational root, which has no rational
assignment and is re-decided from its family and isolating interval.
Summary entries carry counts, not assignments, and are skipped.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .axioms import EVALUATORS, GATED, HOLDS, VIOLATION
from .motion import three_reflections
from .plane import (
    MetricModel,
    Point,
    between,
    bisectors,
    collinear,
    congruent,
    intersect,
    line_through,
    midpoint,
    perpendicular,
    perpendicular_bisector,
    perpendicular_through,
    reflect_in_line,
    reflect_in_point,
    strictly_collinear,
)
from .poly import Interval
from .report import Report, decode_assignment
from .theorems.facts import FACTS, evaluate_fact
from .theorems.sl import build_sl_family, classify_root


class UnknownCheck(ValueError):
    pass


Handler = Callable[[MetricModel, dict, dict], str]


def _a12(m, s, e):
    o, a, b, c, a2, b2 = (s[k] for k in ("o", "a", "b", "c", "a'", "b'"))
    hyps = (
        between(a, o, a2), congruent(m, o, a, o, a2), congruent(m, b, a, b, a2), o != b,
        strictly_collinear(a, b, c), between(b, c, b2), congruent(m, c, b, c, b2), congruent(m, o, b, o, b2),
    )
    if not all(hyps):
        return "hypothesis-mismatch" if e["verdict"] == "hypothesis-mismatch" else GATED
    return HOLDS if between(a, c, b) else VIOLATION


def _axiom(name):
    def run(m, s, e):
        return EVALUATORS[name](m, s)[0]
    return run


def _right_angle(m, s, e):
    l1, l2 = s["<o,a>"], s["<o,b>"]
    return "holds" if m.c * l1.u * l2.u + l1.v * l2.v == 0 else "fails"


def _lowdim(m, s, e):
    return "witness" if not collinear(s["a"], s["b"], s["c"]) else VIOLATION


def _h5(m, s, e):
    return "witness" if perpendicular(m, s["a"], s["b"]) else VIOLATION


def _h1(m, s, e):
    # a perpendicular from A to b always exists in a coordinate plane
    g = perpendicular_through(m, s["A"], s["b"])
    return HOLDS if g.contains(s["A"]) and perpendicular(m, g, s["b"]) else VIOLATION


def _h2(m, s, e):
    A, B, c, d = s["A"], s["B"], s["c"], s["d"]
    two = A != B and c != d and all(l.contains(P) for l in (c, d) for P in (A, B))
    return VIOLATION if two else HOLDS


def _h_three(m, s, e):
    return HOLDS if three_reflections(m, s["a"], s["b"], s["c"]) is not None else VIOLATION


def _cube_of_point_reflections(m, s, e):
    A, B = s["A"], s["B"]
    for X in (Point(m.scalar(0), m.scalar(0)), Point(m.scalar(1), m.scalar(2))):
        Y = X
        for _ in range(3):
            Y = reflect_in_point(reflect_in_point(Y, A), B)
        if Y != X:
            return "fails"
    return "witness" if A != B else "fails"


def _medians(m, s, e):
    A, B, C = s["A"], s["B"], s["C"]
    if collinear(A, B, C):
        return GATED
    U, W = midpoint(B, C), midpoint(A, B)
    if (U, W) != (s["U"], s["W"]) or not congruent(m, A, U, C, W):
        return GATED
    isosceles = congruent(m, B, A, B, C)
    v = perpendicular_bisector(m, A, C)
    exhibited = v.contains(B) and reflect_in_line(m, A, v) == C
    if isosceles != exhibited:
        return "inconsistent"
    if not isosceles:
        return VIOLATION
    return "pivot" if reflect_in_line(m, U, v) != W else HOLDS


def _median_uniqueness(m, s, e):
    C, W, line_s = s["C"], s["W"], s["s"]
    if line_s.contains(C) or not line_s.contains(W):
        return GATED
    on_s = [V for V in m.points() if line_s.contains(V) and congruent(m, C, W, C, V)]
    expected = {W, reflect_in_line(m, W, perpendicular_through(m, C, line_s))}
    return HOLDS if len(on_s) <= 2 and set(on_s) == expected else VIOLATION


def _bisector_table(m, A, B, C):
    return {A: bisectors(m, A, B, C), B: bisectors(m, B, C, A), C: bisectors(m, C, A, B)}


def _concurrent(f, g, h):
    M = intersect(f, g)
    return M is not None and h.contains(M)


def _bisector_fact(part):
    def run(m, s, e):
        A, B, C, X = s["A"], s["B"], s["C"], s["X"]
        tri = (A, B, C)
        bis = _bisector_table(m, A, B, C)
        if part == "(a)":
            Y, Z = (P for P in tri if P != X)
            through = [g for g in m.lines() if g.contains(X)
                       and line_through(X, reflect_in_line(m, Y, g)) == line_through(X, Z)]
            if bis[X] is None:
                return VIOLATION if through else HOLDS
            ok = len(through) == 2 and set(through) == set(bis[X]) and perpendicular(m, *through)
            return HOLDS if ok else VIOLATION
        if part == "(b)":
            if not all(bis.values()):
                return GATED
            return HOLDS if len({g for P in tri for g in bis[P]}) == 6 else VIOLATION
        if part == "(c)":
            Z = X
            P, Q = (V for V in tri if V != Z)
            for f in bis[P] or ():
                for g in bis[Q] or ():
                    M = intersect(f, g)
                    if M is not None and M != Z and (not bis[Z] or line_through(M, Z) not in bis[Z]):
                        return VIOLATION
            return HOLDS
        if part == "(d)":
            if not all(bis.values()):
                return GATED
            for i in range(2):
                for j in range(2):
                    for k in range(2):
                        chosen = (bis[A][i], bis[B][j], bis[C][k])
                        rest = (bis[A][1 - i], bis[B][1 - j], bis[C][1 - k])
                        if not (_concurrent(*chosen) or _concurrent(*rest)):
                            return VIOLATION
            return HOLDS
        raise UnknownCheck(part)
    return run


def _orderfree(part):
    def run(m, s, e):
        A, B, C = s["A"], s["B"], s["C"]
        if part == "(a)":
            if not congruent(m, A, s["M"], B, s["M"]):
                return GATED
        else:
            U, V, W = s["U"], s["V"], s["W"]
            if collinear(U, V, W) or not congruent(m, U, W, V, W):
                return GATED
        return HOLDS if congruent(m, C, A, C, B) else VIOLATION
    return run


def _sl(m, s, e):
    if "t" in s and isinstance(s.get("c"), Point):
        return _sl_points(m, s)
    # a counterexample entry carries the family seed; rebuild it at the recorded root
    fam = build_sl_family(m, s["a"], s["b"], s["bisector"], s["s_param"])
    note = e.get("note", "")
    if "t=" in note:
        t = Fraction(note.split("t=")[1])
        return _sl_points(m, dict(fam.at(t).assignment()))
    lo, hi = note.split("t in (")[1].rstrip(")").split(", ")
    return classify_root(fam, Interval(Fraction(lo), Fraction(hi))).kind


def _sl_points(m, s):
    a, b, c, d, mm, n, sp, p, o = (s[k] for k in "abcdmnspo")
    hyps = (
        not collinear(a, b, c),
        between(a, mm, c),
        between(a, n, b),
        congruent(m, a, d, a, b) and (between(a, d, c) or between(a, c, d) or d == c),
        congruent(m, sp, b, sp, d),
        between(b, sp, mm),
        between(c, sp, n),
        congruent(m, b, mm, c, n),
        between(mm, p, n) and congruent(m, p, mm, p, n),
        between(b, o, c) and congruent(m, o, b, o, c),
    )
    if not all(hyps):
        return "HypothesisFailed"
    return "ConclusionHolds" if congruent(m, a, b, a, c) else "Counterexample"


def _fact(name):
    def run(m, s, e):
        return evaluate_fact(name, m, s)[0]
    return run


HANDLERS: dict[str, Handler] = {
    **{a: _axiom(a) for a in EVALUATORS if a != "A12"},
    "A12": _a12,
    "right-angle": _right_angle,
    "LOWDIM": _lowdim,
    "H1": _h1,
    "H2": _h2,
    "H3": _h_three,
    "H4": _h_three,
    "H4-point": _h_three,
    "H5": _h5,
    "(AB)^3=1": _cube_of_point_reflections,
    "medians": _medians,
    "median-uniqueness": _median_uniqueness,
    **{f"bisector-fact {p}": _bisector_fact(p) for p in ("(a)", "(b)", "(c)", "(d)")},
    **{f"sl-orderfree {p}": _orderfree(p) for p in ("(a)", "(b)")},
    "sl": _sl,
    **{f: _fact(f) for f in FACTS},
}


def recheck_entry(m: MetricModel, e: dict) -> str:
    """The verdict recomputed from the entry's assignment."""
    handler = HANDLERS.get(e["check"])
    if handler is None:
        raise UnknownCheck(f"no recheck for {e['check']!r}")
    return handler(m, decode_assignment(m, e), e)


def recheck_report(rep: Report) -> list[tuple[dict, str]]:
    """Entries whose recomputed verdict differs from the recorded one, with the recomputed verdict."""
    m = MetricModel.parse(rep.model)
    bad = []
    for e in rep.violations + rep.witnesses:
        if e["verdict"] == "summary":
            continue
        got = recheck_entry(m, e)
        if got != e["verdict"]:
            bad.append((e, got))
    return bad


def rechecked_count(rep: Report) -> int:
    return sum(1 for e in rep.violations + rep.witnesses if e["verdict"] != "summary")

