"""Univariate polynomials over Q with exact real-root isolation.

Roots are isolated with Sturm chains and bisection; bisection points are the
simplest rationals in the middle third of the current interval, which keeps
endpoints small and lands exactly on small rational roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Optional, Sequence

from .arith import sign


class Polynomial:
    """Dense polynomial with Fraction coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        cs = [c if type(c) is Fraction else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def t(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> "Polynomial":
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        return Polynomial((other,))

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = Polynomial((1,))
        for _ in range(e):
            out = out * self
        return out

    def __divmod__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        if self.degree < dq:
            return Polynomial(), self
        quo = [Fraction(0)] * (self.degree - dq + 1)
        lead = other.lead
        for k in range(self.degree - dq, -1, -1):
            f = rem[k + dq] / lead
            quo[k] = f
            if f:
                for j, y in enumerate(other.coeffs):
                    rem[k + j] -= f * y
        return Polynomial(quo), Polynomial(rem[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "Polynomial":
        if not self.coeffs:
            return self
        lead = self.lead
        return Polynomial([c / lead for c in self.coeffs])

    def scaled_positive(self) -> "Polynomial":
        """Divide by |leading coefficient|: same signs everywhere, smaller numbers."""
        if not self.coeffs:
            return self
        lead = abs(self.lead)
        return Polynomial([c / lead for c in self.coeffs])

    def __repr__(self):
        if not self.coeffs:
            return "Polynomial(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" + ("" if i == 0 else "*t" if i == 1 else f"*t^{i}"))
        return "Polynomial(" + " + ".join(reversed(terms)) + ")"


def gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd; gcd(0, 0) is the zero polynomial."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def squarefree_part(p: Polynomial) -> Polynomial:
    if p.degree <= 0:
        return p
    g = gcd(p, p.derivative())
    return (p // g).monic() if g.degree > 0 else p.monic()


def sturm_sequence(p: Polynomial) -> list[Polynomial]:
    seq = [p.scaled_positive(), p.derivative().scaled_positive()]
    while not seq[-1].is_zero():
        seq.append((-(seq[-2] % seq[-1])).scaled_positive())
    return seq[:-1]


def sign_variations(seq: Sequence[Polynomial], x: Fraction) -> int:
    count, last = 0, 0
    for q in seq:
        s = sign(q(x))
        if s:
            if last and s != last:
                count += 1
            last = s
    return count


def count_roots(seq: Sequence[Polynomial], lo: Fraction, hi: Fraction) -> int:
    """Distinct roots in the open interval (lo, hi); neither endpoint may be a root."""
    return sign_variations(seq, lo) - sign_variations(seq, hi)


def root_bound(p: Polynomial) -> Fraction:
    """Every real root r has |r| <= B (the smaller of the Cauchy and Lagrange bounds)."""
    if p.degree <= 0:
        return Fraction(1)
    ratios = [abs(c) / abs(p.lead) for c in p.coeffs[:-1]]
    return min(1 + max(ratios), max(Fraction(1), sum(ratios)))


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """The rational with the smallest denominator in the closed interval [lo, hi]."""
    if lo > hi:
        lo, hi = hi, lo
    if lo <= 0 <= hi:
        return Fraction(0)
    if hi < 0:
        return -simplest_between(-hi, -lo)
    fl = floor(lo)
    if fl == lo:
        return Fraction(fl)
    if fl + 1 <= hi:
        return Fraction(fl + 1)
    # lo and hi share the integer part; recurse on reciprocals of the fractional parts
    return fl + 1 / simplest_between(1 / (hi - fl), 1 / (lo - fl))


def _split_point(lo: Fraction, hi: Fraction) -> Fraction:
    w = hi - lo
    return simplest_between(lo + w / 3, hi - w / 3)


@dataclass(frozen=True)
class Interval:
    """Isolating interval: the open interval (lo, hi), or the single point lo when lo == hi."""

    lo: Fraction
    hi: Fraction

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def __contains__(self, x) -> bool:
        if self.is_point:
            return x == self.lo
        return self.lo < x < self.hi


_T = Polynomial.t()


def sturm_isolate(p: Polynomial, interval: Optional[tuple] = None) -> list[Interval]:
    """Isolate every real root of ``p`` in the closed ``interval`` (default: all of R).

    Returns disjoint intervals sorted left to right, each holding exactly one
    root.  Rational roots met during bisection come back as point intervals.
    """
    if p.is_zero():
        raise ValueError("indeterminate root set")
    work = squarefree_part(p)
    if work.degree <= 0:
        return []
    b = root_bound(work)
    if interval is None:
        lo, hi = -b, b
    else:
        lo, hi = Fraction(interval[0]), Fraction(interval[1])
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        if hi < -b or lo > b:
            return []
        lo, hi = max(lo, -b), min(hi, b)

    points: list[Fraction] = []

    def deflate(r: Fraction) -> None:
        nonlocal work
        points.append(r)
        work = work // (_T - r)

    for end in {lo, hi}:
        if work(end) == 0:
            deflate(end)
    opens: list[Interval] = []
    stack = [(lo, hi)] if lo < hi else []
    seq = sturm_sequence(work) if work.degree > 0 else []
    while stack and work.degree > 0:
        a, b = stack.pop()
        n = count_roots(seq, a, b)
        if n == 0:
            continue
        if work.degree == 1:
            deflate(-work.coeffs[0] / work.coeffs[1])
            continue
        if n == 1:
            opens.append(Interval(a, b))
            continue
        mid = _split_point(a, b)
        if work(mid) == 0:
            deflate(mid)
            seq = sturm_sequence(work) if work.degree > 0 else []
        stack.append((mid, b))
        stack.append((a, mid))
    out = [Interval(r, r) for r in points if lo <= r <= hi]
    # rational roots deflated after an interval was recorded split it no further
    out += [iv for iv in opens if not any(iv.lo < r < iv.hi for r in points)]
    return sorted(out, key=lambda iv: iv.lo)


def refine_to_sign(p: Polynomial, q: Polynomial, iso: Interval) -> int:
    """Sign of ``q`` at the unique root of ``p`` isolated by ``iso``."""
    if iso.is_point:
        return sign(q(iso.lo))
    if q.is_zero():
        return 0
    p = squarefree_part(p)
    lo, hi = iso.lo, iso.hi
    while p(lo) == 0:
        p = p // (_T - lo)
    while p(hi) == 0:
        p = p // (_T - hi)
    g = gcd(p, q)
    if g.degree >= 1 and g(lo) != 0 and g(hi) != 0 and count_roots(sturm_sequence(g), lo, hi) > 0:
        return 0
    qs = squarefree_part(q)
    qseq = sturm_sequence(qs) if qs.degree > 0 else []
    s_lo = sign(p(lo))
    while True:
        if not qseq:
            return sign(q.lead)
        if qs(lo) != 0 and qs(hi) != 0 and count_roots(qseq, lo, hi) == 0:
            return sign(q(lo))
        mid = _split_point(lo, hi)
        s_mid = sign(p(mid))
        if s_mid == 0:
            return sign(q(mid))
        if s_mid == s_lo:
            lo = mid
        else:
            hi = mid


class RationalFunction:
    """Quotient num/den of polynomials, kept reduced with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = num if isinstance(num, Polynomial) else Polynomial((num,))
        den = Polynomial((1,)) if den is None else den if isinstance(den, Polynomial) else Polynomial((den,))
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = num, Polynomial((1,))
            return
        if den.degree > 0:
            g = gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
        lead = den.lead
        self.num = Polynomial([c / lead for c in num.coeffs]) if lead != 1 else num
        self.den = den.monic()

    @classmethod
    def t(cls) -> "RationalFunction":
        return cls(Polynomial.t())

    def _coerce(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        return RationalFunction(other)

    def __add__(self, other):
        o = self._coerce(other)
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __call__(self, x: Fraction) -> Fraction:
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at {x}")
        return self.num(x) / d

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __repr__(self):
        return f"RationalFunction({self.num!r} / {self.den!r})"
