"""Coordinate models of metric planes over Q and GF(p).

A model is fixed by a field and an orthogonality constant ``c``: segment
lengths are compared through the norm ``N(x) = x1**2 + c*x2**2`` and lines
``u x + v y + w = 0`` and ``u' x + v' y + w' = 0`` are perpendicular iff
``c*u*u' + v*v' == 0``.  The form must be anisotropic (``-c`` is not a
square), so every line carries a reflection.

All predicates are exact sign conditions on polynomials in the coordinates.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Optional

from .arith import QQ, Field, Mod, OrderUndefined, PrimeField, Scalar, is_square


class ModelError(ValueError):
    """Invalid model descriptor or isotropic orthogonality constant."""


class DegenerateError(ValueError):
    """A construction was asked for on degenerate input (equal or collinear points)."""


def _exact(x):
    return Fraction(x) if type(x) is int else x


@dataclass(frozen=True)
class Point:
    x: Scalar
    y: Scalar

    def __post_init__(self):
        if type(self.x) is int or type(self.y) is int:
            object.__setattr__(self, "x", _exact(self.x))
            object.__setattr__(self, "y", _exact(self.y))

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def scale(self, k) -> "Point":
        return Point(k * self.x, k * self.y)

    def is_origin(self) -> bool:
        return self.x == 0 and self.y == 0

    def __repr__(self):
        return f"({self.x}, {self.y})"


@dataclass(frozen=True, init=False)
class Line:
    """The line ``u x + v y + w = 0``, normalized so the first nonzero of (u, v) is 1."""

    u: Scalar
    v: Scalar
    w: Scalar

    def __init__(self, u, v, w):
        u, v, w = _exact(u), _exact(v), _exact(w)
        if u == 0 and v == 0:
            raise DegenerateError("line needs (u, v) != (0, 0)")
        k = u if u != 0 else v
        object.__setattr__(self, "u", u / k)
        object.__setattr__(self, "v", v / k)
        object.__setattr__(self, "w", w / k)

    def value(self, p: Point) -> Scalar:
        return self.u * p.x + self.v * p.y + self.w

    def contains(self, p: Point) -> bool:
        return self.value(p) == 0

    @property
    def direction(self) -> Point:
        return Point(-self.v, self.u)

    def __repr__(self):
        return f"Line({self.u}, {self.v}, {self.w})"


_Q_DESC = re.compile(r"q:c=(-?\d+)(?:/(\d+))?")
_GF_DESC = re.compile(r"gf:(\d+):c=(-?\d+)")


@dataclass(frozen=True)
class MetricModel:
    field: Field
    c: Scalar

    def __post_init__(self):
        c = self.field(self.c)
        object.__setattr__(self, "c", c)
        if c == 0:
            raise ModelError("orthogonality constant must be nonzero")
        r = is_square(-c)
        if r is not None:
            null = Point(r, self.field.one)
            raise ModelError(
                f"form x^2 + ({c})y^2 is isotropic over {self.field}: N{null} = 0"
            )

    @classmethod
    def parse(cls, descriptor: str) -> "MetricModel":
        """Build a model from ``q:c=<int or ratio>`` or ``gf:<p>:c=<int>``."""
        m = _Q_DESC.fullmatch(descriptor.strip())
        if m:
            den = int(m.group(2)) if m.group(2) else 1
            if den == 0:
                raise ModelError(f"zero denominator in {descriptor!r}")
            return cls(QQ, Fraction(int(m.group(1)), den))
        m = _GF_DESC.fullmatch(descriptor.strip())
        if m:
            try:
                field = PrimeField(int(m.group(1)))
            except ValueError as exc:
                raise ModelError(str(exc)) from None
            return cls(field, int(m.group(2)))
        raise ModelError(f"unrecognized model descriptor {descriptor!r}")

    @property
    def descriptor(self) -> str:
        if isinstance(self.field, PrimeField):
            return f"gf:{self.field.p}:c={self.c.value}"
        c = self.c
        return f"q:c={c.numerator}" + (f"/{c.denominator}" if c.denominator != 1 else "")

    @property
    def ordered(self) -> bool:
        return self.field.ordered

    @property
    def finite(self) -> bool:
        return self.field.finite

    def scalar(self, x) -> Scalar:
        return self.field(x)

    def point(self, x, y) -> Point:
        return Point(self.field(x), self.field(y))

    def line(self, u, v, w) -> Line:
        return Line(self.field(u), self.field(v), self.field(w))

    def form(self, d: Point) -> Scalar:
        """N(d) = d1^2 + c d2^2."""
        return d.x * d.x + self.c * d.y * d.y

    def bilinear(self, d: Point, e: Point) -> Scalar:
        return d.x * e.x + self.c * d.y * e.y

    @cached_property
    def _points(self) -> tuple:
        if not self.finite:
            raise ModelError("only finite models can be enumerated")
        els = list(self.field.elements())
        return tuple(Point(x, y) for x, y in product(els, els))

    def points(self) -> tuple:
        return self._points

    @cached_property
    def _lines(self) -> tuple:
        if not self.finite:
            raise ModelError("only finite models can be enumerated")
        F = self.field
        out = [Line(F.zero, F.one, w) for w in F.elements()]
        out += [Line(F.one, v, w) for v in F.elements() for w in F.elements()]
        return tuple(out)

    def lines(self) -> tuple:
        return self._lines

    def __str__(self):
        return self.descriptor


def _require_order(*pts: Point) -> None:
    for p in pts:
        if isinstance(p.x, Mod):
            raise OrderUndefined(f"order undefined in GF({p.x.p})")


def norm(m: MetricModel, a: Point, b: Point) -> Scalar:
    return m.form(a - b)


def congruent(m: MetricModel, a: Point, b: Point, p: Point, q: Point) -> bool:
    """ab ≡ pq."""
    return m.form(a - b) == m.form(p - q)


def det(d: Point, e: Point) -> Scalar:
    return d.x * e.y - d.y * e.x


def collinear(a: Point, b: Point, c: Point) -> bool:
    """L(abc): collinear, not necessarily distinct."""
    return det(b - a, c - a) == 0


def strictly_collinear(a: Point, b: Point, c: Point) -> bool:
    """λ(abc): three distinct collinear points."""
    return a != b and b != c and c != a and collinear(a, b, c)


def between(a: Point, b: Point, c: Point) -> bool:
    """Z(abc): b = t a + (1 - t) c for some 0 < t < 1."""
    _require_order(a, b, c)
    d, e = a - c, b - c
    if d.is_origin() or det(d, e) != 0:
        return False
    t = e.x / d.x if d.x != 0 else e.y / d.y
    return 0 < t < 1


def line_through(a: Point, b: Point) -> Line:
    if a == b:
        raise DegenerateError(f"no unique line through {a} twice")
    return Line(a.y - b.y, b.x - a.x, a.x * b.y - a.y * b.x)


def line_with_direction(p: Point, d: Point) -> Line:
    if d.is_origin():
        raise DegenerateError("zero direction")
    return Line(d.y, -d.x, d.x * p.y - d.y * p.x)


def perpendicular(m: MetricModel, l1: Line, l2: Line) -> bool:
    return m.c * l1.u * l2.u + l1.v * l2.v == 0


def normal(m: MetricModel, l: Line) -> Point:
    """Direction perpendicular to ``l`` in the model's metric."""
    return Point(m.c * l.u, l.v)


def perpendicular_through(m: MetricModel, p: Point, l: Line) -> Line:
    return line_with_direction(p, normal(m, l))


def foot(m: MetricModel, p: Point, l: Line) -> Point:
    """Foot of the perpendicular from ``p`` to ``l``."""
    n = normal(m, l)
    k = l.value(p) / (m.c * l.u * l.u + l.v * l.v)
    return p - n.scale(k)


def reflect_in_line(m: MetricModel, p: Point, l: Line) -> Point:
    n = normal(m, l)
    k = l.value(p) / (m.c * l.u * l.u + l.v * l.v)
    return p - n.scale(2 * k)


def reflect_in_point(p: Point, center: Point) -> Point:
    return center.scale(2) - p


def midpoint(a: Point, b: Point) -> Point:
    if a == b:
        raise DegenerateError("degenerate segment")
    return Point((a.x + b.x) / 2, (a.y + b.y) / 2)


def perpendicular_bisector(m: MetricModel, a: Point, b: Point) -> Line:
    """The line {x : N(x - a) = N(x - b)}."""
    if a == b:
        raise DegenerateError("degenerate segment")
    d = b - a
    # 2 B(x, d) + N(a) - N(b) = 0
    return Line(2 * d.x, 2 * m.c * d.y, m.form(a) - m.form(b))


def intersect(l1: Line, l2: Line) -> Optional[Point]:
    """Common point of two lines, or None when they are parallel or equal."""
    d = l1.u * l2.v - l1.v * l2.u
    if d == 0:
        return None
    return Point((l1.v * l2.w - l1.w * l2.v) / d, (l1.w * l2.u - l1.u * l2.w) / d)


def same_side(l: Line, p: Point, q: Point) -> bool:
    """Strictly on the same side of ``l`` (ordered models)."""
    _require_order(p, q)
    return l.value(p) * l.value(q) > 0


def on_ray(o: Point, d: Point, x: Point) -> bool:
    """x lies on the closed ray from o through d."""
    _require_order(o, d, x)
    v, e = d - o, x - o
    if det(v, e) != 0:
        return False
    return v.x * e.x + v.y * e.y >= 0


def _cone_coords(o: Point, a: Point, b: Point, d: Point):
    da, db, dd = a - o, b - o, d - o
    w = det(da, db)
    if w == 0:
        raise DegenerateError("collinear legs")
    return det(dd, db) / w, det(da, dd) / w


def angle_interior(o: Point, a: Point, b: Point, p: Point) -> bool:
    """p lies in the interior of ∠aob: the ray op meets the open segment ab."""
    _require_order(o, a, b, p)
    alpha, beta = _cone_coords(o, a, b, p)
    return alpha > 0 and beta > 0


def ray_between(o: Point, a: Point, b: Point, d: Point) -> bool:
    """The ray od lies between the rays oa and ob."""
    return angle_interior(o, a, b, d)


def seg_less(m: MetricModel, a: Point, b: Point, c: Point) -> bool:
    """ab < ac: the perpendicular bisector of bc meets the open segment ac."""
    _require_order(a, b, c)
    if a == b or b == c or a == c:
        raise DegenerateError("seg_less needs three distinct points")
    f_a = m.form(a - b) - m.form(a - c)
    f_c = m.form(c - b)
    return f_a * f_c < 0


def is_acute(m: MetricModel, a: Point, b: Point, c: Point) -> bool:
    """∠abc is acute: bc lies between ba and bb', with bb' ⊥ ba and b' on c's side of ⟨a,b⟩."""
    _require_order(a, b, c)
    if collinear(a, b, c):
        raise DegenerateError("∠abc is degenerate")
    d = a - b
    e = Point(-m.c * d.y, d.x)
    if det(d, e) * det(d, c - b) < 0:
        e = e.scale(-1)
    return ray_between(b, a, b + e, c)


def transport(m: MetricModel, frm: Point, toward: Point, length_norm: Scalar) -> Optional[Point]:
    """Point x on the closed ray from ``frm`` through ``toward`` with N(x - frm) = length_norm."""
    _require_order(frm, toward)
    if frm == toward:
        raise DegenerateError("transport needs a ray")
    d = toward - frm
    s = is_square(m.scalar(length_norm) / m.form(d))
    if s is None:
        return None
    return frm + d.scale(s)


def bisectors(m: MetricModel, a: Point, b: Point, c: Point) -> Optional[tuple[Line, Line]]:
    """The two lines g through a with σ_g(⟨a,b⟩) = ⟨a,c⟩, if they exist.

    In ordered models the first is the internal bisector.
    """
    if collinear(a, b, c):
        raise DegenerateError("bisectors of a degenerate angle")
    s = is_square(m.form(b - a) / m.form(c - a))
    if s is None:
        return None
    out = []
    for k in (s, -s):
        c_star = a + (c - a).scale(k)
        out.append(line_through(a, midpoint(b, c_star)))
    return out[0], out[1]


def line_circle(m: MetricModel, center: Point, norm_value: Scalar, l: Line) -> list[Point]:
    """All points x on ``l`` with N(x - center) = norm_value."""
    d = l.direction
    base = foot(m, center, l)
    # N(base + s d - center) = N(base - center) + s^2 N(d), the cross term vanishes
    rhs = (m.scalar(norm_value) - m.form(base - center)) / m.form(d)
    r = is_square(rhs)
    if r is None:
        return []
    if r == 0:
        return [base]
    return [base + d.scale(r), base - d.scale(r)]


def circle_circle(m: MetricModel, c1: Point, n1: Scalar, c2: Point, n2: Scalar) -> list[Point]:
    """All points x with N(x - c1) = n1 and N(x - c2) = n2 (distinct centers)."""
    if c1 == c2:
        raise DegenerateError("concentric circles")
    d = c2 - c1
    # N(x-c1) - N(x-c2) = 2B(x, d) + N(c1) - N(c2) = n1 - n2
    radical = Line(2 * d.x, 2 * m.c * d.y, m.form(c1) - m.form(c2) - m.scalar(n1) + m.scalar(n2))
    return line_circle(m, c1, n1, radical)
