"""Angle bisectors of triangles in finite planes and the order-free Steiner-Lehmus variant.

A bisector at vertex A of triangle ABC is a line g through A whose reflection
swaps the side lines ⟨A,B⟩ and ⟨A,C⟩.  Over a finite field some vertices
have none, so the checks run on the triangles where bisectors exist and
report the rest as counts.
"""

from __future__ import annotations

from collections import Counter
from functools import partial
from itertools import combinations, product
from typing import Optional

from ..plane import (
    Line,
    MetricModel,
    Point,
    bisectors,
    collinear,
    congruent,
    intersect,
    line_through,
    perpendicular,
    reflect_in_line,
)
from ..report import Report, entry, timed
from ..sampling import parallel_map
from .medians import ModelRefused


def bisector_lines_brute(m: MetricModel, A: Point, B: Point, C: Point) -> list[Line]:
    """Every line through A that reflects ⟨A,B⟩ onto ⟨A,C⟩, found by trying all lines."""
    target = line_through(A, C)
    return [g for g in m.lines() if g.contains(A) and line_through(A, reflect_in_line(m, B, g)) == target]


def concurrent(f: Line, g: Line, h: Line) -> Optional[Point]:
    M = intersect(f, g)
    if M is not None and h.contains(M):
        return M
    return None


def _vertex_bisectors(m: MetricModel, tri: tuple) -> dict:
    A, B, C = tri
    return {A: bisectors(m, A, B, C), B: bisectors(m, B, C, A), C: bisectors(m, C, A, B)}


def triangles(m: MetricModel, first: Point):
    """Unordered non-collinear triangles whose smallest point (in enumeration order) is ``first``."""
    pts = m.points()
    i = pts.index(first)
    for B, C in combinations(pts[i + 1:], 2):
        if not collinear(first, B, C):
            yield (first, B, C)


def _facts_block(descriptor: str, first: Point) -> tuple[Counter, list]:
    m = MetricModel.parse(descriptor)
    counts: Counter = Counter()
    bad = []
    for tri in triangles(m, first):
        counts["triangles"] += 1
        bis = _vertex_bisectors(m, tri)
        # (a) two bisectors per bisectable vertex, perpendicular to each other
        for X in tri:
            Y, Z = (P for P in tri if P != X)
            brute = bisector_lines_brute(m, X, Y, Z)
            counts["(a) vertices"] += 1
            if bis[X] is None:
                if brute:
                    bad.append(("(a)", tri, X, "bisector test missed a line"))
                continue
            if len(brute) != 2 or set(brute) != set(bis[X]) or not perpendicular(m, *brute):
                bad.append(("(a)", tri, X, f"{len(brute)} bisectors"))
        # (b) total count of bisectors
        lines = {g for X in tri if bis[X] for g in bis[X]}
        counts[f"(b) total={len(lines)}"] += 1
        full = all(bis[X] for X in tri)
        if full:
            counts["bisectable"] += 1
            if len(lines) != 6:
                bad.append(("(b)", tri, tri[0], f"{len(lines)} bisectors on a bisectable triangle"))
        # (c) two bisectors meet at M; then ⟨M,C⟩ is a bisector at C
        for X, Y in combinations(tri, 2):
            Z = next(P for P in tri if P not in (X, Y))
            if not (bis[X] and bis[Y]):
                continue
            for f, g in product(bis[X], bis[Y]):
                M = intersect(f, g)
                if M is None:
                    counts["(c) parallel"] += 1
                    continue
                if M == Z:
                    counts["(c) M=C"] += 1
                    continue
                counts["(c) checked"] += 1
                if not bis[Z] or line_through(M, Z) not in bis[Z]:
                    bad.append(("(c)", tri, Z, f"⟨M,C⟩ is not a bisector, M={M}"))
        # (d) a choice of bisectors or its complement is concurrent
        if full:
            A, B, C = tri
            for i, j, k in product(range(2), repeat=3):
                f, g, h = bis[A][i], bis[B][j], bis[C][k]
                u, v, w = bis[A][1 - i], bis[B][1 - j], bis[C][1 - k]
                counts["(d) checked"] += 1
                if concurrent(f, g, h) is None and concurrent(u, v, w) is None:
                    bad.append(("(d)", tri, A, f"neither {f},{g},{h} nor the complement meet"))
    return counts, bad


def check_bisector_facts(m: MetricModel, workers: Optional[int] = None) -> Report:
    if not m.finite:
        raise ModelRefused("bisector facts are checked exhaustively and need a finite model")
    rep = Report("theorem bisector-facts", m.descriptor, "exhaustive")
    with timed(rep):
        parts = parallel_map(partial(_facts_block, m.descriptor), list(m.points()), workers)
        counts: Counter = Counter()
        for c, bad in parts:
            counts.update(c)
            for fact, (A, B, C), X, note in bad:
                rep.violations.append(entry(
                    f"bisector-fact {fact}", "violation", {"A": A, "B": B, "C": C, "X": X}, note=note,
                ))
        rep.checked_count = counts["triangles"]
        rep.gated_count = counts["triangles"] - counts["bisectable"]
        rep.witnesses.append(entry("bisector-facts-summary", "summary", counts=dict(sorted(counts.items()))))
    return rep


def _sl_block(descriptor: str, first: Point) -> tuple[Counter, list]:
    m = MetricModel.parse(descriptor)
    counts: Counter = Counter()
    bad = []
    for tri in triangles(m, first):
        bis = _vertex_bisectors(m, tri)
        if not all(bis.values()):
            counts["skipped: vertex without bisector"] += 1
            continue
        counts["bisectable"] += 1
        # the apex C is the vertex whose sides must come out congruent
        for C in tri:
            A, B = (P for P in tri if P != C)
            for u, v, w in product(bis[A], bis[B], bis[C]):
                counts["configurations"] += 1
                M = concurrent(u, v, w)
                if M is not None:
                    if not congruent(m, A, M, B, M):
                        counts["(a) gated"] += 1
                        continue
                    counts["(a) checked"] += 1
                    if not congruent(m, C, A, C, B):
                        bad.append(("(a)", A, B, C, {"M": M}))
                    continue
                W, V, U = intersect(u, v), intersect(u, w), intersect(v, w)
                if None in (U, V, W) or collinear(U, V, W):
                    counts["(b) skipped: parallel or degenerate"] += 1
                    continue
                if not congruent(m, U, W, V, W):
                    counts["(b) gated"] += 1
                    continue
                counts["(b) checked"] += 1
                if not congruent(m, C, A, C, B):
                    bad.append(("(b)", A, B, C, {"U": U, "V": V, "W": W}))
    return counts, bad


def check_orderfree_sl(m: MetricModel, workers: Optional[int] = None) -> Report:
    """Concurrent bisectors with AM ≡ BM, or a bisector triangle with UW ≡ VW, force CA ≡ CB."""
    if not m.finite:
        raise ModelRefused("the order-free Steiner-Lehmus check is exhaustive and needs a finite model")
    rep = Report("theorem sl-orderfree", m.descriptor, "exhaustive")
    with timed(rep):
        parts = parallel_map(partial(_sl_block, m.descriptor), list(m.points()), workers)
        counts: Counter = Counter()
        for c, bad in parts:
            counts.update(c)
            for part, A, B, C, extra in bad:
                rep.violations.append(entry(
                    f"sl-orderfree {part}", "violation", dict({"A": A, "B": B, "C": C}, **extra), note="CA≢CB",
                ))
        rep.checked_count = counts["(a) checked"] + counts["(b) checked"]
        rep.gated_count = counts["configurations"] - rep.checked_count
        rep.witnesses.append(entry("sl-orderfree-summary", "summary", counts=dict(sorted(counts.items()))))
    return rep
