"""Rank-one symmetric triads and their regular-point structure.

A rank-one triad is fixed by which of ``alpha``, ``2*alpha`` are roots of
``Sigma`` and of ``W`` plus four multiplicities.  Angles are measured by the
canonical parameter ``s = <alpha, H>``; walls sit at integer multiples of the
fundamental cell width.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Optional

from .roots import (
    MultiplicityMap,
    RootSystem,
    RootVector,
    SymmetricTriadData,
    ValidationReport,
    validate_multiplicities,
    validate_root_system,
    validate_symmetric_triad,
)


class InvalidTriadError(ValueError):
    pass


class SingularPointError(ValueError):
    """Raised when an angle lies on a wall of the regular set."""

    def __init__(self, s: float, wall: str):
        super().__init__(f"s = {s!r} is singular: {wall}")
        self.s = s
        self.wall = wall


class Kind(str, enum.Enum):
    III_B1 = "III-B1"
    I_BC1 = "I-BC1"
    II_BC1 = "II-BC1"
    III_BC1 = "III-BC1"
    ISO_A1 = "ISO-A1"
    ISO_BC1 = "ISO-BC1"

    @property
    def sigma_multiples(self) -> tuple[int, ...]:
        return _PATTERNS[self][0]

    @property
    def w_multiples(self) -> tuple[int, ...]:
        return _PATTERNS[self][1]

    @property
    def is_isotropy(self) -> bool:
        return self in (Kind.ISO_A1, Kind.ISO_BC1)


# (multiples of alpha in Sigma^+, multiples in W^+)
_PATTERNS: dict[Kind, tuple[tuple[int, ...], tuple[int, ...]]] = {
    Kind.III_B1: ((1,), (1,)),
    Kind.I_BC1: ((1, 2), (1,)),
    Kind.II_BC1: ((1,), (1, 2)),
    Kind.III_BC1: ((1, 2), (1, 2)),
    Kind.ISO_A1: ((1,), ()),
    Kind.ISO_BC1: ((1, 2), ()),
}
_KIND_BY_PATTERN = {v: k for k, v in _PATTERNS.items()}


@dataclass(frozen=True)
class SymmetricTriad1D:
    kind: Kind
    m1: int = 0
    m2: int = 0
    n1: int = 0
    n2: int = 0

    def __post_init__(self) -> None:
        try:
            kind = Kind(self.kind)
        except ValueError:
            raise InvalidTriadError(f"unknown triad kind {self.kind!r}") from None
        object.__setattr__(self, "kind", kind)
        for name in ("m1", "m2", "n1", "n2"):
            v = getattr(self, name)
            if isinstance(v, bool) or int(v) != v:
                raise InvalidTriadError(f"{name} must be an integer, got {v!r}")
            if v < 0:
                raise InvalidTriadError(f"{name} must be nonnegative, got {v}")
            object.__setattr__(self, name, int(v))
        sig, w = kind.sigma_multiples, kind.w_multiples
        expected = {"m1": 1 in sig, "m2": 2 in sig, "n1": 1 in w, "n2": 2 in w}
        for name, present in expected.items():
            v = getattr(self, name)
            if present and v == 0:
                raise InvalidTriadError(f"{kind.value} requires {name} > 0")
            if not present and v != 0:
                raise InvalidTriadError(f"{kind.value} has no root for {name}; got {name}={v}")
        if 2 in w and self.m1 != self.n1:
            raise InvalidTriadError(
                f"{kind.value}: 2*alpha in W forces m(alpha) = n(alpha); got m1={self.m1}, n1={self.n1}")

    @classmethod
    def infer(cls, m1: int, m2: int = 0, n1: int = 0, n2: int = 0) -> "SymmetricTriad1D":
        """Build the triad whose root pattern is given by the positive multiplicities."""
        sig = tuple(k for k, v in ((1, m1), (2, m2)) if v > 0)
        w = tuple(k for k, v in ((1, n1), (2, n2)) if v > 0)
        kind = _KIND_BY_PATTERN.get((sig, w))
        if kind is None:
            raise InvalidTriadError(
                f"no rank-one triad has multiplicities (m1,m2,n1,n2)=({m1},{m2},{n1},{n2})")
        return cls(kind, m1, m2, n1, n2)

    @classmethod
    def create(cls, kind: str | Kind, m1: int = 0, m2: int = 0, n1: int = 0, n2: int = 0,
               reduce: bool = True) -> "SymmetricTriad1D":
        """Build a triad of ``kind``; zero multiplicities on its roots reduce the kind.

        A multiplicity on a root the kind does not have is always an error.
        """
        kind = Kind(kind)
        sig, w = kind.sigma_multiples, kind.w_multiples
        given = {"m1": (1 in sig, m1), "m2": (2 in sig, m2), "n1": (1 in w, n1), "n2": (2 in w, n2)}
        for name, (present, v) in given.items():
            if not present and v:
                raise InvalidTriadError(f"{kind.value} has no root for {name}; got {name}={v}")
        if reduce and any(present and v == 0 for present, v in given.values()):
            return cls.infer(m1, m2, n1, n2)
        return cls(kind, m1, m2, n1, n2)

    # root data -------------------------------------------------------------

    @property
    def mults(self) -> tuple[int, int, int, int]:
        return (self.m1, self.m2, self.n1, self.n2)

    @cached_property
    def sigma_pos(self) -> tuple[tuple[int, int], ...]:
        """``(k, m(k*alpha))`` for every ``k*alpha`` in ``Sigma^+``."""
        return tuple((k, (self.m1, self.m2)[k - 1]) for k in self.kind.sigma_multiples)

    @cached_property
    def w_pos(self) -> tuple[tuple[int, int], ...]:
        return tuple((k, (self.n1, self.n2)[k - 1]) for k in self.kind.w_multiples)

    @property
    def alpha_tilde(self) -> int:
        """Multiple of ``alpha`` that bounds the fundamental cell."""
        if self.kind.is_isotropy:
            return max(self.kind.sigma_multiples)
        return max(self.kind.w_multiples)

    @property
    def weight(self) -> int:
        """``m1 + 4 m2 + n1 + 4 n2``."""
        return self.m1 + 4 * self.m2 + self.n1 + 4 * self.n2

    def to_triad_data(self) -> tuple[SymmetricTriadData, MultiplicityMap]:
        """Rank-general view with ``<alpha,alpha> = 1/(2*weight)``."""
        return triad_data(self.kind, *self.mults)

    def validate(self) -> ValidationReport:
        return validate_kind(self.kind, *self.mults)

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "m1": self.m1, "m2": self.m2, "n1": self.n1, "n2": self.n2}


def triad_data(kind: str | Kind, m1: int = 0, m2: int = 0, n1: int = 0,
               n2: int = 0) -> tuple[SymmetricTriadData, MultiplicityMap]:
    """Root pattern of ``kind`` with the given multiplicities, unchecked.

    Multiplicities on roots outside the pattern are kept, so the axiom
    checks can report them.
    """
    kind = Kind(kind)
    weight = m1 + 4 * m2 + n1 + 4 * n2
    if weight <= 0:
        raise InvalidTriadError("all multiplicities are zero")
    a2 = Fraction(1, 2 * weight)
    line = {k: RootVector.line(k, a2) for k in (1, 2, -1, -2)}
    sigma = frozenset(line[e * k] for k in kind.sigma_multiples for e in (1, -1))
    w = frozenset(line[e * k] for k in kind.w_multiples for e in (1, -1))
    m = {line[e * k]: v for k, v in ((1, m1), (2, m2)) for e in (1, -1)}
    n = {line[e * k]: v for k, v in ((1, n1), (2, n2)) for e in (1, -1)}
    return SymmetricTriadData(RootSystem(1, sigma | w), sigma, w), MultiplicityMap(m, n)


def validate_kind(kind: str | Kind, m1: int = 0, m2: int = 0, n1: int = 0, n2: int = 0) -> ValidationReport:
    """Axiom check of a kind with raw multiplicities.

    Isotropy kinds have ``W`` empty, so they are checked as a root system
    with multiplicities rather than as a symmetric triad.
    """
    kind = Kind(kind)
    data, mm = triad_data(kind, m1, m2, n1, n2)
    if kind.is_isotropy:
        first = validate_root_system(data.sigma_tilde)
    else:
        first = validate_symmetric_triad(data)
    second = validate_multiplicities(data, mm)
    report = ValidationReport(f"{kind.value} {(m1, m2, n1, n2)}")
    report.checks = first.checks + second.checks
    return report


@dataclass(frozen=True)
class Cell:
    """Open interval ``(lo*pi, hi*pi)`` of the parameter ``s``."""

    lo: Fraction
    hi: Fraction

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def bounds(self) -> tuple[float, float]:
        return float(self.lo) * math.pi, float(self.hi) * math.pi

    def __contains__(self, s: float) -> bool:
        lo, hi = self.bounds
        return lo < s < hi


def fundamental_cell(t: SymmetricTriad1D) -> Cell:
    # without W the walls are the zeros of sin<alpha~,H> only
    if t.kind.is_isotropy:
        return Cell(Fraction(0), Fraction(1, t.alpha_tilde))
    return Cell(Fraction(0), Fraction(1, 2 * t.alpha_tilde))


def _walls_pi(t: SymmetricTriad1D, r: Fraction) -> Optional[str]:
    for k, _ in t.sigma_pos:
        if (k * r).denominator == 1:
            return f"<{k}alpha,H> in pi*Z ({k}alpha in Sigma+)"
    for k, _ in t.w_pos:
        if (k * r - Fraction(1, 2)).denominator == 1:
            return f"<{k}alpha,H> in pi/2 + pi*Z ({k}alpha in W+)"
    return None


def singular_wall(t: SymmetricTriad1D, s: float, tol: float = 1e-12) -> Optional[str]:
    """Description of the wall containing ``s`` (radians), or None when regular."""
    if isinstance(s, Fraction):
        return _walls_pi(t, s)
    x = s / math.pi
    for k, _ in t.sigma_pos:
        y = k * x
        if abs(y - round(y)) <= tol * max(1.0, abs(y)):
            return f"<{k}alpha,H> in pi*Z ({k}alpha in Sigma+)"
    for k, _ in t.w_pos:
        y = k * x - 0.5
        if abs(y - round(y)) <= tol * max(1.0, abs(y)):
            return f"<{k}alpha,H> in pi/2 + pi*Z ({k}alpha in W+)"
    return None


def is_regular_point(t: SymmetricTriad1D, s: float) -> bool:
    """Regularity of ``s = <alpha, H>``.

    ``s`` is in radians when a float; a ``Fraction`` is read as a multiple of
    pi and decided exactly.
    """
    return singular_wall(t, s) is None


def require_regular(t: SymmetricTriad1D, s: float) -> None:
    wall = singular_wall(t, s)
    if wall is not None:
        raise SingularPointError(s, wall)
