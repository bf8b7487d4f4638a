"""Rank-general root systems, symmetric triads and multiplicity maps.

Everything here is exact: coordinates and Gram matrices are ``Fraction``s, so
integrality and parity conditions are decided without tolerances.  Validators
never raise on a violated axiom; they return a :class:`ValidationReport` with
one entry per condition and the first violating witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence


def _frac_matrix(rows: Sequence[Sequence]) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def _rank(rows: list[list[Fraction]]) -> int:
    m = [list(r) for r in rows]
    rank, ncols = 0, len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col] / m[rank][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def _leading_minors_positive(gram) -> bool:
    n = len(gram)
    m = [list(r) for r in gram]
    for k in range(n):
        if m[k][k] <= 0:
            return False
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            m[i] = [a - f * b for a, b in zip(m[i], m[k])]
    return True


@dataclass(frozen=True)
class RootVector:
    """A vector of the ambient space with an attached exact Gram matrix."""

    coords: tuple[Fraction, ...]
    gram: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))
        object.__setattr__(self, "gram", _frac_matrix(self.gram))
        n = len(self.coords)
        if len(self.gram) != n or any(len(row) != n for row in self.gram):
            raise ValueError("Gram matrix shape does not match coordinates")

    @classmethod
    def line(cls, multiple: int | Fraction, norm_sq: Fraction = Fraction(1)) -> "RootVector":
        """``multiple * alpha`` in a one-dimensional space with ``<alpha,alpha> = norm_sq``."""
        return cls((Fraction(multiple),), ((Fraction(norm_sq),),))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def inner(self, other: "RootVector") -> Fraction:
        if other.gram != self.gram:
            raise ValueError("vectors live in different inner product spaces")
        g = self.gram
        return sum(
            (self.coords[i] * g[i][j] * other.coords[j]
             for i in range(self.dim) for j in range(self.dim)),
            Fraction(0),
        )

    def norm_sq(self) -> Fraction:
        return self.inner(self)

    def __add__(self, other: "RootVector") -> "RootVector":
        return RootVector(tuple(a + b for a, b in zip(self.coords, other.coords)), self.gram)

    def __sub__(self, other: "RootVector") -> "RootVector":
        return self + (-other)

    def __neg__(self) -> "RootVector":
        return RootVector(tuple(-a for a in self.coords), self.gram)

    def scale(self, k) -> "RootVector":
        k = Fraction(k)
        return RootVector(tuple(k * a for a in self.coords), self.gram)

    def __str__(self) -> str:
        if self.dim == 1:
            c = self.coords[0]
            return "alpha" if c == 1 else ("-alpha" if c == -1 else f"{c}*alpha")
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def cartan_integer(alpha: RootVector, beta: RootVector) -> Fraction:
    """``2<alpha, beta> / <alpha, alpha>``."""
    return 2 * alpha.inner(beta) / alpha.norm_sq()


def reflect(alpha: RootVector, h: RootVector) -> RootVector:
    """Reflection of ``h`` in the hyperplane orthogonal to ``alpha``."""
    if alpha.is_zero():
        raise ValueError("cannot reflect in a zero vector")
    return h - alpha.scale(cartan_integer(alpha, h))


@dataclass(frozen=True)
class RootSystem:
    dim: int
    roots: frozenset[RootVector]

    def __post_init__(self) -> None:
        object.__setattr__(self, "roots", frozenset(self.roots))
        for r in self.roots:
            if r.dim != self.dim:
                raise ValueError(f"root {r} has dimension {r.dim}, expected {self.dim}")
        if self.roots:
            grams = {r.gram for r in self.roots}
            if len(grams) != 1:
                raise ValueError("roots carry different Gram matrices")
            if not _leading_minors_positive(next(iter(grams))):
                raise ValueError("Gram matrix is not positive definite")

    def is_irreducible(self) -> bool:
        """No split into two nonempty mutually orthogonal subsets."""
        roots = list(self.roots)
        if not roots:
            return False
        seen = {roots[0]}
        stack = [roots[0]]
        while stack:
            a = stack.pop()
            for b in roots:
                if b not in seen and a.inner(b) != 0:
                    seen.add(b)
                    stack.append(b)
        return len(seen) == len(roots)


@dataclass
class Check:
    condition: str
    passed: bool
    witness: Optional[str] = None


@dataclass
class ValidationReport:
    subject: str
    checks: list[Check] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def first_failure(self) -> Optional[Check]:
        return next((c for c in self.checks if not c.passed), None)

    def failed_conditions(self) -> list[str]:
        return [c.condition for c in self.checks if not c.passed]

    def add(self, condition: str, witness: Optional[str]) -> None:
        self.checks.append(Check(condition, witness is None, witness))

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "passed": self.passed,
            "checks": [
                {"condition": c.condition, "passed": c.passed, "witness": c.witness}
                for c in self.checks
            ],
            **({"info": self.info} if self.info else {}),
        }


def _first(items: Iterable[str]) -> Optional[str]:
    return next(iter(items), None)


def validate_root_system(rs: RootSystem) -> ValidationReport:
    report = ValidationReport("root system")
    roots = sorted(rs.roots, key=lambda r: r.coords)
    report.add("nonempty", None if roots else "empty root set")
    report.add("nonzero", _first(f"{r} is zero" for r in roots if r.is_zero()))
    nonzero = [r for r in roots if not r.is_zero()]
    if not nonzero:
        report.add("span", "no nonzero roots")
        return report
    rank = _rank([list(r.coords) for r in nonzero])
    report.add("span", None if rank == rs.dim else f"roots span rank {rank} < {rs.dim}")
    report.add(
        "reflection closure",
        _first(
            f"s_{a}({b}) = {reflect(a, b)} missing"
            for a in nonzero for b in nonzero
            if reflect(a, b) not in rs.roots
        ),
    )
    report.add(
        "integrality",
        _first(
            f"2<{a},{b}>/<{a},{a}> = {cartan_integer(a, b)}"
            for a in nonzero for b in nonzero
            if cartan_integer(a, b).denominator != 1
        ),
    )
    report.info["irreducible"] = rs.is_irreducible()
    return report


@dataclass(frozen=True)
class SymmetricTriadData:
    sigma_tilde: RootSystem
    sigma: frozenset[RootVector]
    w: frozenset[RootVector]


def _is_odd(x: Fraction) -> bool:
    return x.denominator == 1 and x.numerator % 2 != 0


def validate_symmetric_triad(t: SymmetricTriadData) -> ValidationReport:
    report = ValidationReport("symmetric triad")
    st, sigma, w = t.sigma_tilde, frozenset(t.sigma), frozenset(t.w)
    dim = st.dim

    rs_report = validate_root_system(st)
    if not rs_report.passed:
        report.add("(1) irreducible root system", f"Sigma~ fails {rs_report.first_failure.condition}: "
                   f"{rs_report.first_failure.witness}")
    else:
        report.add("(1) irreducible root system",
                   None if st.is_irreducible() else "Sigma~ is reducible")

    sub = validate_root_system(RootSystem(dim, sigma))
    report.add("(2) Sigma root system", None if sub.passed else
               f"{sub.first_failure.condition}: {sub.first_failure.witness}")

    neg = _first(f"-({a}) not in W" for a in sorted(w, key=lambda r: r.coords) if -a not in w)
    union = None if (sigma | w) == st.roots else "Sigma u W != Sigma~"
    report.add("(3) -W = W, Sigma~ = Sigma u W", neg or union)

    inter = sigma & w
    if not inter:
        report.add("(4) Sigma n W nonempty short slice", "Sigma n W is empty")
    else:
        l2 = max(a.norm_sq() for a in inter)
        short = frozenset(a for a in st.roots if a.norm_sq() <= l2)
        report.add("(4) Sigma n W nonempty short slice",
                   None if short == inter else "Sigma n W is not the short-norm slice of Sigma~")

    def odd_iff(target: frozenset, lams: frozenset) -> Optional[str]:
        for a in sorted(w, key=lambda r: r.coords):
            for lam in sorted(lams, key=lambda r: r.coords):
                odd = _is_odd(cartan_integer(a, lam))
                lands = reflect(a, lam) in target
                if odd != lands:
                    return (f"alpha={a}, lambda={lam}: 2<a,l>/<a,a>={cartan_integer(a, lam)}, "
                            f"s_a(l)={reflect(a, lam)}")
        return None

    report.add("(5) parity on W x (Sigma \\ W)", odd_iff(w - sigma, sigma - w))
    report.add("(6) parity on W x (W \\ Sigma)", odd_iff(sigma - w, w - sigma))
    return report


@dataclass(frozen=True)
class MultiplicityMap:
    m: Mapping[RootVector, int]
    n: Mapping[RootVector, int]

    def mult_m(self, r: RootVector) -> int:
        return self.m.get(r, 0)

    def mult_n(self, r: RootVector) -> int:
        return self.n.get(r, 0)


def validate_multiplicities(t: SymmetricTriadData, mm: MultiplicityMap) -> ValidationReport:
    report = ValidationReport("multiplicities")
    st = sorted(t.sigma_tilde.roots, key=lambda r: r.coords)
    sigma, w = frozenset(t.sigma), frozenset(t.w)
    m, n = mm.mult_m, mm.mult_n

    report.add("(1-1) evenness", _first(
        f"m/n differ at {r} and {-r}" for r in st if m(r) != m(-r) or n(r) != n(-r)))
    report.add("(1-2) m > 0 exactly on Sigma", _first(
        f"m({r}) = {m(r)}" for r in st if (m(r) > 0) != (r in sigma) or m(r) < 0))
    report.add("(1-3) n > 0 exactly on W", _first(
        f"n({r}) = {n(r)}" for r in st if (n(r) > 0) != (r in w) or n(r) < 0))

    # invariance under a generating set implies invariance under the group
    sig_sorted = sorted(sigma, key=lambda r: r.coords)
    w_sorted = sorted(w, key=lambda r: r.coords)
    report.add("(2) W(Sigma)-invariance", _first(
        [f"m({lam}) != m(s_{mu}({lam}))" for mu in sig_sorted for lam in sig_sorted
         if m(lam) != m(reflect(mu, lam))]
        + [f"n({a}) != n(s_{mu}({a}))" for mu in sig_sorted for a in w_sorted
           if n(a) != n(reflect(mu, a))]))
    report.add("(3) W(Sigma~)-invariance of m+n", _first(
        f"m+n differs at {lam} and s_{mu}({lam})" for mu in st for lam in st
        if m(lam) + n(lam) != m(reflect(mu, lam)) + n(reflect(mu, lam))))

    bad = None
    for lam in sorted(sigma & w, key=lambda r: r.coords):
        for a in w_sorted:
            k = cartan_integer(a, lam)
            image = reflect(a, lam)
            if _is_odd(k):
                if m(lam) != n(image):
                    bad = f"odd pairing alpha={a}, lambda={lam}: m({lam})={m(lam)} != n({image})={n(image)}"
            elif m(lam) != m(image):
                bad = f"even pairing alpha={a}, lambda={lam}: m({lam})={m(lam)} != m({image})={m(image)}"
            if bad:
                break
        if bad:
            break
    report.add("(4) parity coupling", bad)
    return report
