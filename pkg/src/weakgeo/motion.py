"""Motions of a coordinate metric plane and the group calculus built on them.

A :class:`Motion` is an affine map ``x -> L x + t`` whose linear part
preserves the model's form.  Products follow the right-action convention of
the group calculus: ``compose(alpha, beta)`` is "first alpha, then beta", so
``x^(alpha beta) = (x^alpha)^beta``.  Line reflections make up the set S,
point reflections the set P, and ``stroke(alpha, beta)`` holds when alpha,
beta and their product are all involutions.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional

from .arith import Scalar
from .plane import (
    Line,
    MetricModel,
    Point,
    congruent,
    line_with_direction,
    normal,
    perpendicular_bisector,
    perpendicular_through,
)


@dataclass(frozen=True)
class Motion:
    """x -> L x + t with ``linear = (l00, l01, l10, l11)`` (row major)."""

    linear: tuple
    translation: tuple

    def __call__(self, p: Point) -> Point:
        return apply(self, p)

    @property
    def det(self) -> Scalar:
        a, b, c, d = self.linear
        return a * d - b * c


def identity(m: MetricModel) -> Motion:
    z, o = m.field.zero, m.field.one
    return Motion((o, z, z, o), (z, z))


def translation(m: MetricModel, v: Point) -> Motion:
    z, o = m.field.zero, m.field.one
    return Motion((o, z, z, o), (v.x, v.y))


def line_reflection(m: MetricModel, l: Line) -> Motion:
    n = normal(m, l)
    k = 2 / (m.c * l.u * l.u + l.v * l.v)
    # x - k * l(x) * n
    return Motion(
        (1 - k * n.x * l.u, -k * n.x * l.v, -k * n.y * l.u, 1 - k * n.y * l.v),
        (-k * n.x * l.w, -k * n.y * l.w),
    )


def point_reflection(m: MetricModel, center: Point) -> Motion:
    z = m.field.zero
    return Motion((z - 1, z, z, z - 1), (2 * center.x, 2 * center.y))


def apply(alpha: Motion, p: Point) -> Point:
    a, b, c, d = alpha.linear
    e, f = alpha.translation
    return Point(a * p.x + b * p.y + e, c * p.x + d * p.y + f)


def compose(alpha: Motion, beta: Motion) -> Motion:
    """The product alpha·beta: apply alpha first, then beta."""
    a1, b1, c1, d1 = alpha.linear
    e1, f1 = alpha.translation
    a2, b2, c2, d2 = beta.linear
    e2, f2 = beta.translation
    return Motion(
        (a2 * a1 + b2 * c1, a2 * b1 + b2 * d1, c2 * a1 + d2 * c1, c2 * b1 + d2 * d1),
        (a2 * e1 + b2 * f1 + e2, c2 * e1 + d2 * f1 + f2),
    )


def product_of(*motions: Motion) -> Motion:
    out = motions[0]
    for mo in motions[1:]:
        out = compose(out, mo)
    return out


def invert(alpha: Motion) -> Motion:
    a, b, c, d = alpha.linear
    e, f = alpha.translation
    k = alpha.det
    ia, ib, ic, id_ = d / k, -b / k, -c / k, a / k
    return Motion((ia, ib, ic, id_), (-(ia * e + ib * f), -(ic * e + id_ * f)))


def conjugate(sigma: Motion, alpha: Motion) -> Motion:
    """sigma^alpha = alpha⁻¹ sigma alpha."""
    return product_of(invert(alpha), sigma, alpha)


def is_identity(alpha: Motion) -> bool:
    a, b, c, d = alpha.linear
    e, f = alpha.translation
    return a == 1 and d == 1 and b == 0 and c == 0 and e == 0 and f == 0


def is_involution(alpha: Motion) -> bool:
    return not is_identity(alpha) and is_identity(compose(alpha, alpha))


def preserves_form(m: MetricModel, alpha: Motion) -> bool:
    """Lᵀ G L == G for G = diag(1, c)."""
    a, b, c, d = alpha.linear
    k = m.c
    return a * a + k * c * c == 1 and b * b + k * d * d == k and a * b + k * c * d == 0


def in_S(alpha: Motion) -> Optional[Line]:
    """The fixed line of alpha if it is a line reflection."""
    if alpha.det != -1 or not is_involution(alpha):
        return None
    a, b, c, d = alpha.linear
    e, f = alpha.translation
    # fixed points: (L - I) x + t = 0, a rank-one system
    if a - 1 != 0 or b != 0:
        return Line(a - 1, b, e)
    return Line(c, d - 1, f)


def in_P(alpha: Motion) -> Optional[Point]:
    """The center of alpha if it is a point reflection."""
    a, b, c, d = alpha.linear
    if a == -1 and d == -1 and b == 0 and c == 0:
        e, f = alpha.translation
        return Point(e / 2, f / 2)
    return None


def stroke(alpha: Motion, beta: Motion) -> bool:
    """alpha | beta: alpha, beta and alpha·beta are involutory."""
    return is_involution(alpha) and is_involution(beta) and is_involution(compose(alpha, beta))


def three_reflections(m: MetricModel, a: Line, b: Line, c: Line) -> Optional[Line]:
    """The line d with σ_a σ_b σ_c = σ_d, if the product is a line reflection."""
    return in_S(product_of(line_reflection(m, a), line_reflection(m, b), line_reflection(m, c)))


@dataclass(frozen=True)
class GlideDecomposition:
    """alpha = σ_b·ϱ_N = ϱ_M·σ_d with b, d ⊥ axis and M, N on the axis."""

    axis: Line
    b: Line
    N: Point
    M: Point
    d: Line


def glide_decompose(m: MetricModel, alpha: Motion) -> Optional[GlideDecomposition]:
    if alpha.det != -1 or is_involution(alpha):
        return None
    a, b, c, d = alpha.linear
    e, f = alpha.translation
    # split t into the +1 and -1 eigenspaces of L (L is an involution)
    par = Point(((1 + a) * e + b * f) / 2, (c * e + (1 + d) * f) / 2)
    perp = Point(e, f) - par
    if par.is_origin():
        return None
    base = perp.scale(m.field.one / 2)
    axis = line_with_direction(base, par)
    far = base + par.scale(m.field.one / 2)
    M, N = base, far
    b_line = perpendicular_through(m, M, axis)
    d_line = perpendicular_through(m, N, axis)
    out = GlideDecomposition(axis, b_line, N, M, d_line)
    if compose(line_reflection(m, b_line), point_reflection(m, N)) != alpha:
        raise AssertionError("glide decomposition failed to recompose")
    if compose(point_reflection(m, M), line_reflection(m, d_line)) != alpha:
        raise AssertionError("glide decomposition failed to recompose")
    return out


def reflections_S(m: MetricModel) -> dict[Line, Motion]:
    return {l: line_reflection(m, l) for l in m.lines()}


def reflections_P(m: MetricModel) -> dict[Point, Motion]:
    return {p: point_reflection(m, p) for p in m.points()}


def model_is_nonelliptic(m: MetricModel) -> tuple[bool, Optional[tuple[Line, Point]]]:
    """S ∩ P = ∅, evaluated over every element; returns a witness pair if it fails."""
    by_motion = {mo: p for p, mo in reflections_P(m).items()}
    for l, mo in reflections_S(m).items():
        if mo in by_motion:
            return False, (l, by_motion[mo])
    return True, None


def model_characteristic_ne3(m: MetricModel) -> tuple[bool, Optional[tuple[Point, Point]]]:
    """(AB)^3 != 1 for all points A != B; returns the first failing pair."""
    P = reflections_P(m)
    for A, B in product(m.points(), repeat=2):
        if A == B:
            continue
        ab = compose(P[A], P[B])
        if is_identity(product_of(ab, ab, ab)):
            return False, (A, B)
    return True, None


def find_swapping_motion(m: MetricModel, A: Point, B: Point, M: Point) -> Optional[Motion]:
    """A motion swapping A and B while fixing M, when AM ≡ BM."""
    if A == B:
        return identity(m)
    if not congruent(m, A, M, B, M):
        return None
    return line_reflection(m, perpendicular_bisector(m, A, B))


def segment_congruent_group(m: MetricModel, A: Point, B: Point, C: Point, D: Point) -> bool:
    """AB ≡ CD in the sense of motions; decided by norm equality."""
    return congruent(m, A, B, C, D)


def enumerate_motions(m: MetricModel) -> list[Motion]:
    """Every form-preserving affine map of a finite model (brute force over 2x2 matrices)."""
    els = list(m.field.elements())
    linear = []
    for a, b, c, d in product(els, repeat=4):
        mo = Motion((a, b, c, d), (m.field.zero, m.field.zero))
        if mo.det != 0 and preserves_form(m, mo):
            linear.append(mo.linear)
    return [Motion(L, (e, f)) for L in linear for e, f in product(els, repeat=2)]


def motion_congruent(motions: list[Motion], A: Point, B: Point, C: Point, D: Point) -> bool:
    """Definition by motions: some alpha sends {A, B} onto {C, D}."""
    for mo in motions:
        a, b = apply(mo, A), apply(mo, B)
        if (a == C and b == D) or (a == D and b == C):
            return True
    return False

