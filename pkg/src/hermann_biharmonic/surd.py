"""Exact quadratic surds ``(p + q*sqrt(d)) / r``.

Values of this shape are closed under the ring operations for a fixed radicand
and under division (via the conjugate), which is all the solver needs to carry
the roots of a rational quadratic without rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]


def squarefree_split(n: int) -> tuple[int, int]:
    """Return ``(k, d)`` with ``n == k*k*d`` and ``d`` squarefree."""
    if n < 0:
        raise ValueError(f"radicand must be nonnegative, got {n}")
    if n == 0:
        return 0, 0
    k, d, rest = 1, 1, n
    f = 2
    while f * f * f <= rest:
        e = 0
        while rest % f == 0:
            rest //= f
            e += 1
        k *= f ** (e // 2)
        d *= f ** (e % 2)
        f += 1
    # rest has no prime factor below its cube root: it is 1, p, p*q or p*p
    r = math.isqrt(rest)
    if r * r == rest:
        return k * r, d
    return k, d * rest


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class QuadraticSurd:
    """The number ``(p + q*sqrt(d)) / r`` in canonical form.

    Canonical form: ``r > 0``, ``d`` squarefree, ``gcd(p, q, r) == 1``, and a
    rational value is stored with ``q == d == 0``.  Two surds are equal iff
    their canonical tuples are equal.
    """

    p: int
    q: int = 0
    d: int = 0
    r: int = 1

    def __post_init__(self) -> None:
        p, q, d, r = (int(v) for v in (self.p, self.q, self.d, self.r))
        if r == 0:
            raise ZeroDivisionError("surd denominator is zero")
        k, d = squarefree_split(d)
        q *= k
        if d == 1:
            p, q, d = p + q, 0, 0
        if q == 0 or d == 0:
            q, d = 0, 0
        if r < 0:
            p, q, r = -p, -q, -r
        g = math.gcd(math.gcd(p, q), r)
        if g > 1:
            p, q, r = p // g, q // g, r // g
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "r", r)

    # construction -----------------------------------------------------------

    @classmethod
    def rational(cls, x: Rational) -> "QuadraticSurd":
        x = Fraction(x)
        return cls(x.numerator, 0, 0, x.denominator)

    @classmethod
    def coerce(cls, x: Union["QuadraticSurd", Rational]) -> "QuadraticSurd":
        if isinstance(x, QuadraticSurd):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.rational(x)
        raise TypeError(f"cannot convert {type(x).__name__} to QuadraticSurd")

    @classmethod
    def from_dict(cls, doc: dict) -> "QuadraticSurd":
        return cls(int(doc["p"]), int(doc["q"]), int(doc["d"]), int(doc["r"]))

    def to_dict(self) -> dict:
        return {"p": self.p, "q": self.q, "d": self.d, "r": self.r}

    # inspection -------------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return Fraction(self.p, self.r)

    def conjugate(self) -> "QuadraticSurd":
        return QuadraticSurd(self.p, -self.q, self.d, self.r)

    def sign(self) -> int:
        """Exact sign of ``p + q*sqrt(d)`` (the denominator is positive)."""
        sp, sq = _sign(self.p), _sign(self.q)
        if sq == 0:
            return sp
        if sp == 0 or sp == sq:
            return sq
        # opposite signs: compare p^2 with q^2 d
        diff = self.p * self.p - self.q * self.q * self.d
        return sp if diff > 0 else (sq if diff < 0 else 0)

    def __float__(self) -> float:
        if self.q == 0:
            return self.p / self.r
        s = self.q * math.sqrt(self.d)
        if _sign(self.p) * _sign(self.q) < 0:
            # p + s loses digits when the terms nearly cancel; use the conjugate
            denom = self.p - s
            if denom != 0:
                return (self.p * self.p - self.q * self.q * self.d) / (denom * self.r)
        return (self.p + s) / self.r

    def __bool__(self) -> bool:
        return self.p != 0 or self.q != 0

    def __repr__(self) -> str:
        return f"QuadraticSurd(p={self.p}, q={self.q}, d={self.d}, r={self.r})"

    def __str__(self) -> str:
        if self.q == 0:
            return str(Fraction(self.p, self.r))
        rad = f"sqrt({self.d})" if abs(self.q) == 1 else f"{abs(self.q)}*sqrt({self.d})"
        num = f"{self.p} {'+' if self.q > 0 else '-'} {rad}" if self.p else (
            rad if self.q > 0 else f"-{rad}")
        return num if self.r == 1 else f"({num})/{self.r}"

    # arithmetic -------------------------------------------------------------

    def _radicand_with(self, other: "QuadraticSurd") -> int:
        if self.d and other.d and self.d != other.d:
            raise ValueError(f"incompatible radicands sqrt({self.d}) and sqrt({other.d})")
        return self.d or other.d

    def __neg__(self) -> "QuadraticSurd":
        return QuadraticSurd(-self.p, -self.q, self.d, self.r)

    def __add__(self, other):
        try:
            other = QuadraticSurd.coerce(other)
        except TypeError:
            return NotImplemented
        d = self._radicand_with(other)
        return QuadraticSurd(
            self.p * other.r + other.p * self.r,
            self.q * other.r + other.q * self.r,
            d,
            self.r * other.r,
        )

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = QuadraticSurd.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = QuadraticSurd.coerce(other)
        except TypeError:
            return NotImplemented
        d = self._radicand_with(other)
        return QuadraticSurd(
            self.p * other.p + self.q * other.q * d,
            self.p * other.q + self.q * other.p,
            d,
            self.r * other.r,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadraticSurd":
        norm = self.p * self.p - self.q * self.q * self.d
        if norm == 0:
            raise ZeroDivisionError("inverse of zero surd")
        return QuadraticSurd(self.r * self.p, -self.r * self.q, self.d, norm)

    def __truediv__(self, other):
        try:
            other = QuadraticSurd.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return QuadraticSurd.coerce(other) * self.inverse()

    # ordering ---------------------------------------------------------------

    def _cmp(self, other) -> int:
        return (self - QuadraticSurd.coerce(other)).sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0


def quadratic_roots(a: Rational, b: Rational, c: Rational) -> list[QuadraticSurd]:
    """Distinct real roots of ``a*x^2 + b*x + c`` in increasing order.

    A double root is returned once; complex roots give an empty list.
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if a == 0:
        if b == 0:
            raise ValueError("degenerate polynomial")
        return [QuadraticSurd.rational(-c / b)]
    # clear denominators so the discriminant is an integer
    scale = math.lcm(a.denominator, b.denominator, c.denominator)
    A, B, C = int(a * scale), int(b * scale), int(c * scale)
    disc = B * B - 4 * A * C
    if disc < 0:
        return []
    if disc == 0:
        return [QuadraticSurd(-B, 0, 0, 2 * A)]
    roots = [QuadraticSurd(-B, -1, disc, 2 * A), QuadraticSurd(-B, 1, disc, 2 * A)]
    return sorted(roots)
