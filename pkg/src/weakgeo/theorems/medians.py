"""Triangles with two congruent medians, checked over finite planes.

For every ordered non-collinear triple (A, B, C), U is the midpoint of BC
and W the midpoint of AB.  If AU ≡ CW the triangle must be isosceles with
apex B, witnessed by the perpendicular bisector v of AC passing through B.
Over GF(3) the statement fails, in line with (AB)³ = 1 there.
"""

from __future__ import annotations

from collections import Counter
from functools import partial
from itertools import permutations
from typing import Optional

from ..motion import model_characteristic_ne3
from ..plane import (
    MetricModel,
    Point,
    collinear,
    congruent,
    line_through,
    midpoint,
    perpendicular_bisector,
    perpendicular_through,
    reflect_in_line,
    reflect_in_point,
)
from ..report import Report, entry, timed
from ..sampling import parallel_map


class ModelRefused(ValueError):
    pass


def median_feet(A: Point, B: Point, C: Point) -> tuple[Point, Point]:
    """U and W with C^U = B and B^W = A."""
    U, W = midpoint(B, C), midpoint(A, B)
    if reflect_in_point(C, U) != B or reflect_in_point(B, W) != A:
        raise AssertionError("midpoint disagrees with the point-reflection reading")
    return U, W


def _medians_block(descriptor: str, A: Point) -> tuple[Counter, list]:
    m = MetricModel.parse(descriptor)
    counts: Counter = Counter()
    bad = []
    for B, C in permutations(m.points(), 2):
        if A in (B, C) or collinear(A, B, C):
            continue
        counts["triangles"] += 1
        U, W = median_feet(A, B, C)
        if not congruent(m, A, U, C, W):
            continue
        counts["hits"] += 1
        isosceles = congruent(m, B, A, B, C)
        v = perpendicular_bisector(m, A, C)
        exhibited = v.contains(B) and reflect_in_line(m, A, v) == C
        if isosceles != exhibited:
            bad.append(("inconsistent", A, B, C, U, W))
            continue
        if not isosceles:
            bad.append(("violation", A, B, C, U, W))
            continue
        # U^v lands on W; the second candidate W^h (h ⊥ UW through C) is recorded separately
        Uv = reflect_in_line(m, U, v)
        h = perpendicular_through(m, C, line_through(U, W))
        Wh = reflect_in_line(m, W, h)
        if Uv == W:
            counts["pivot U^v=W"] += 1
        else:
            bad.append(("pivot", A, B, C, U, W))
        if Uv == Wh and Wh != W:
            counts["pivot U^v=W^h"] += 1
    return counts, bad


def check_medians(m: MetricModel, exclude_char3_guard: bool = False, workers: Optional[int] = None) -> Report:
    """Exhaustive check; with the guard on, models of characteristic 3 are refused."""
    if not m.finite:
        raise ModelRefused("the medians check is exhaustive and needs a finite model")
    if exclude_char3_guard and m.field.characteristic == 3:
        raise ModelRefused("the medians theorem assumes characteristic ≠ 3")
    rep = Report("theorem medians", m.descriptor, "exhaustive")
    with timed(rep):
        parts = parallel_map(partial(_medians_block, m.descriptor), list(m.points()), workers)
        counts: Counter = Counter()
        for c, bad in parts:
            counts.update(c)
            for kind, A, B, C, U, W in bad:
                note = {
                    "violation": "AU≡CW but BA≢BC",
                    "inconsistent": "BA≡BC and the exhibited line v disagree",
                    "pivot": "U^v ≠ W on an isosceles hit",
                }[kind]
                rep.violations.append(entry("medians", kind, {"A": A, "B": B, "C": C, "U": U, "W": W}, note=note))
        rep.checked_count = counts["triangles"]
        rep.gated_count = counts["triangles"] - counts["hits"]
        ne3, pair = model_characteristic_ne3(m)
        counts["characteristic≠3"] = int(ne3)
        rep.witnesses.append(entry("medians-summary", "summary", counts=dict(counts)))
        if pair is not None:
            rep.witnesses.append(entry("(AB)^3=1", "witness", {"A": pair[0], "B": pair[1]}))
    return rep


def _uniqueness_block(descriptor: str, C: Point) -> tuple[Counter, list]:
    m = MetricModel.parse(descriptor)
    pts = m.points()
    counts: Counter = Counter()
    bad = []
    for W in pts:
        if W == C:
            continue
        n = line_through(C, W)
        for s in m.lines():
            if not s.contains(W):
                continue
            if s.contains(C):
                counts["skipped C|s"] += 1
                continue
            counts["configurations"] += 1
            on_s = [V for V in pts if s.contains(V) and congruent(m, C, W, C, V)]
            counts[f"count={len(on_s)}"] += 1
            g = perpendicular_through(m, C, s)
            expected = {W, reflect_in_line(m, W, g)}
            if len(on_s) > 2 or set(on_s) != expected:
                bad.append((C, W, n, s, len(on_s)))
    return counts, bad


def check_median_uniqueness_lemma(m: MetricModel, workers: Optional[int] = None) -> Report:
    """Points V on s with CW ≡ CV number at most two (W and its mirror in the perpendicular from C)."""
    if not m.finite:
        raise ModelRefused("the uniqueness lemma is checked exhaustively and needs a finite model")
    rep = Report("theorem median-uniqueness", m.descriptor, "exhaustive")
    with timed(rep):
        parts = parallel_map(partial(_uniqueness_block, m.descriptor), list(m.points()), workers)
        counts: Counter = Counter()
        for c, bad in parts:
            counts.update(c)
            for C, W, n, s, k in bad:
                rep.violations.append(entry(
                    "median-uniqueness", "violation", {"C": C, "W": W, "n": n, "s": s}, note=f"{k} points V",
                ))
        rep.checked_count = counts["configurations"]
        rep.gated_count = counts["skipped C|s"]
        rep.witnesses.append(entry("median-uniqueness-summary", "summary", counts=dict(counts)))
    return rep
