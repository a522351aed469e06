"""Exact scalars: rationals and residues modulo an odd prime.

Rationals are plain :class:`fractions.Fraction` values (always reduced, with a
positive denominator).  Residues are :class:`Mod` values.  The two never mix:
arithmetic between residues of different moduli, or between a residue and a
fraction, raises.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Iterator, Optional, Union


class OrderUndefined(TypeError):
    """An order comparison was requested in a field that has none."""


class Mod:
    """Residue class ``value mod p`` for an odd prime ``p``."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _other(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise ValueError(f"cannot mix residues mod {self.p} and mod {other.p}")
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return other
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Mod(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Mod(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Mod(o - self.value, self.p)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Mod(self.value * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if o % self.p == 0:
            raise ZeroDivisionError(f"division by zero mod {self.p}")
        return Mod(self.value * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Mod(o, self.p) / self

    def __neg__(self):
        return Mod(-self.value, self.p)

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        if e < 0:
            return Mod(1, self.p) / Mod(pow(self.value, -e, self.p), self.p)
        return Mod(pow(self.value, e, self.p), self.p)

    def inverse(self) -> "Mod":
        return Mod(1, self.p) / self

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, Mod):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def _no_order(self, other):
        raise OrderUndefined(f"order undefined in GF({self.p})")

    __lt__ = __le__ = __gt__ = __ge__ = _no_order

    def __repr__(self):
        return f"Mod({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


Scalar = Union[Fraction, Mod]


@dataclass(frozen=True)
class Rationals:
    """The ordered field Q."""

    ordered = True
    finite = False
    characteristic = 0

    def __call__(self, x) -> Fraction:
        if isinstance(x, Mod):
            raise TypeError("cannot coerce a residue into Q")
        return Fraction(x)

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def __str__(self):
        return "Q"


@dataclass(frozen=True)
class PrimeField:
    """GF(p) for an odd prime p."""

    p: int
    ordered = False
    finite = True

    def __post_init__(self):
        if self.p < 3 or not _is_prime(self.p):
            raise ValueError(f"modulus must be an odd prime, got {self.p}")

    @property
    def characteristic(self) -> int:
        return self.p

    def __call__(self, x) -> Mod:
        if isinstance(x, Mod):
            if x.p != self.p:
                raise ValueError(f"residue mod {x.p} is not in GF({self.p})")
            return x
        if isinstance(x, Fraction):
            return Mod(x.numerator, self.p) / Mod(x.denominator, self.p)
        return Mod(int(x), self.p)

    @property
    def zero(self) -> Mod:
        return Mod(0, self.p)

    @property
    def one(self) -> Mod:
        return Mod(1, self.p)

    def elements(self) -> Iterator[Mod]:
        return (Mod(i, self.p) for i in range(self.p))

    def __str__(self):
        return f"GF({self.p})"


QQ = Rationals()
Field = Union[Rationals, PrimeField]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def field_of(x: Scalar) -> Field:
    if isinstance(x, Mod):
        return PrimeField(x.p)
    return QQ


def sign(x: Fraction) -> int:
    """Sign of a rational: -1, 0 or 1."""
    return (x > 0) - (x < 0)


@lru_cache(maxsize=None)
def _root_table(p: int) -> dict[int, int]:
    table: dict[int, int] = {}
    for r in range(p):
        table.setdefault(r * r % p, r)
    return table


def _tonelli_shanks(a: int, p: int) -> Optional[int]:
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c, t, r = i, b * b % p, t * b * b % p, r * b % p
    return r


def is_square(x: Scalar) -> Optional[Scalar]:
    """Return ``r`` with ``r*r == x`` if one exists in the field of ``x``, else None.

    For rationals the nonnegative root is returned.  Residues use an
    exhaustive table for p <= 97 and Tonelli-Shanks beyond.
    """
    if isinstance(x, Mod):
        if x.p <= 97:
            r = _root_table(x.p).get(x.value)
        else:
            r = _tonelli_shanks(x.value, x.p)
        return None if r is None else Mod(r, x.p)
    x = Fraction(x)
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None
