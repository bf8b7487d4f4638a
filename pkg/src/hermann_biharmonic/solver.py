"""Second fundamental form, tension and the biharmonic criterion on rank one.

For a regular orbit through ``exp H`` with ``s = <alpha, H>``::

    |B|^2 = sum_{k alpha in Sigma+} m_k cot^2(k s) k^2 |alpha|^2
          + sum_{k alpha in W+}     n_k tan^2(k s) k^2 |alpha|^2
    tau   = (-sum m_k k cot(k s) + sum n_k k tan(k s)) * alpha

with ``|alpha|^2 = 1 / (2 (m1 + 4 m2 + n1 + 4 n2))`` under the negative
Killing metric.  A constant-mean-curvature hypersurface of an Einstein space
with constant ``c`` is biharmonic iff ``tau = 0`` or ``|B|^2 = c``; here
``c = 1/2``.

Solutions are exact surds in the variable of record: ``tan^2(theta)`` with
``theta = <alpha~, H>`` for genuine triads, ``cot^2(s)`` for isotropy kinds.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .surd import QuadraticSurd, quadratic_roots
from .triad import Kind, SymmetricTriad1D, fundamental_cell, require_regular

#: Einstein constant of a compact symmetric space under the -Killing metric.
EINSTEIN_CONSTANT = Fraction(1, 2)


class CaseLabel(str, enum.Enum):
    HARMONIC_ONLY = "harmonic-only"
    UNIQUE_PROPER = "unique-proper"
    TWO_PROPER = "two-proper"


#: Outcome expected for each of the three classification lists.
GROUP_LABELS = {1: CaseLabel.UNIQUE_PROPER, 2: CaseLabel.TWO_PROPER, 3: CaseLabel.HARMONIC_ONLY}


def norm_alpha_sq(t: SymmetricTriad1D) -> Fraction:
    if t.weight <= 0:
        raise ValueError("all multiplicities are zero")
    return Fraction(1, 2 * t.weight)


def b_norm_sq(t: SymmetricTriad1D, s: float) -> float:
    require_regular(t, s)
    a = 0.5 / t.weight
    total = 0.0
    for k, m in t.sigma_pos:
        total += m * (1.0 / math.tan(k * s)) ** 2 * k * k * a
    for k, n in t.w_pos:
        total += n * math.tan(k * s) ** 2 * k * k * a
    return total


def _tension_terms(t: SymmetricTriad1D, s: float) -> list[float]:
    terms = [-m * k / math.tan(k * s) for k, m in t.sigma_pos]
    terms += [n * k * math.tan(k * s) for k, n in t.w_pos]
    return terms


def tension_coeff(t: SymmetricTriad1D, s: float) -> float:
    """Coefficient ``k`` with ``dL_x^{-1} tau_H = k * alpha``."""
    require_regular(t, s)
    return math.fsum(_tension_terms(t, s))


def tension_scale(t: SymmetricTriad1D, s: float) -> float:
    """Sum of the magnitudes of the terms of :func:`tension_coeff`.

    Used to normalise tension deviations near the harmonic angle, where the
    coefficient itself passes through zero.
    """
    require_regular(t, s)
    return math.fsum(abs(x) for x in _tension_terms(t, s))


# -- variable of record ----------------------------------------------------

def variable_name(t: SymmetricTriad1D) -> str:
    return "cot2_s" if t.kind.is_isotropy else "tan2_theta"


def record_value(t: SymmetricTriad1D, s: float) -> float:
    """``tan^2(<alpha~,H>)`` or, for isotropy kinds, ``cot^2(s)``."""
    if t.kind.is_isotropy:
        return 1.0 / math.tan(s) ** 2
    return math.tan(t.alpha_tilde * s) ** 2


def angles_for(t: SymmetricTriad1D, value: QuadraticSurd) -> list[float]:
    """All ``s`` in the fundamental cell with ``record_value(t, s) == value``."""
    x = float(value)
    if x < 0:
        return []
    if t.kind.is_isotropy:
        s = math.atan2(1.0, math.sqrt(x))
        out = [s]
        hi = fundamental_cell(t).bounds[1]
        # cot^2 is symmetric about pi/2; pick up the mirror image when the cell reaches it
        if hi > math.pi / 2 and not math.isclose(s, math.pi / 2):
            out.append(math.pi - s)
        return sorted(a for a in out if 0 < a < hi)
    if x == 0:
        return []
    return [math.atan(math.sqrt(x)) / t.alpha_tilde]


# -- exact solutions -------------------------------------------------------

def solve_harmonic(t: SymmetricTriad1D) -> QuadraticSurd:
    """The unique harmonic regular orbit, in the variable of record.

    For ``ISO-A1`` the harmonic angle is ``s = pi/2``; ``tan^2`` has a pole
    there, so the value is reported as ``cot^2(s) = 0``.
    """
    m1, m2, n1, n2 = t.mults
    kind = t.kind
    if kind is Kind.III_B1:
        v = Fraction(m1, n1)
    elif kind is Kind.I_BC1:
        v = Fraction(m1 + m2, n1 + m2)
    elif kind is Kind.II_BC1:
        v = Fraction(m1, n2)
    elif kind is Kind.III_BC1:
        v = Fraction(m1 + m2, n2)
    elif kind is Kind.ISO_A1:
        v = Fraction(0)
    else:
        # m1 cot s + 2 m2 cot 2s = 0 with cot 2s = (cot^2 s - 1)/(2 cot s)
        v = Fraction(m2, m1 + m2)
    return QuadraticSurd.rational(v)


def biharmonic_polynomial(t: SymmetricTriad1D) -> tuple[int, int, int]:
    """Coefficients ``(a, b, c)`` with ``|B|^2 = 1/2  <=>  a x^2 + b x + c = 0``.

    ``x`` is the variable of record; ``a == 0`` only for ``ISO-A1``.
    """
    m1, m2, n1, n2 = t.mults
    kind = t.kind
    if kind is Kind.III_B1:
        return n1, -(m1 + n1), m1
    if kind is Kind.I_BC1:
        return n1 + m2, -(m1 + n1 + 6 * m2), m1 + m2
    if kind is Kind.II_BC1:
        return n2, -n2, m1
    if kind is Kind.III_BC1:
        return n2, -(m2 + n2), m1 + m2
    if kind is Kind.ISO_A1:
        return 0, 1, -1
    return m1 + m2, -(m1 + 6 * m2), m2


def solve_biharmonic(t: SymmetricTriad1D) -> list[QuadraticSurd]:
    """Distinct positive solutions of ``|B|^2 = 1/2`` (ascending)."""
    a, b, c = biharmonic_polynomial(t)
    return [r for r in quadratic_roots(a, b, c) if r.sign() > 0]


@dataclass
class ClassificationResult:
    triad: SymmetricTriad1D
    harmonic_t: QuadraticSurd
    biharmonic_t: list[QuadraticSurd]
    proper_biharmonic_t: list[QuadraticSurd]
    case_label: CaseLabel
    angles_radians: list[float] = field(default_factory=list)
    harmonic_angles: list[float] = field(default_factory=list)

    @property
    def variable(self) -> str:
        return variable_name(self.triad)

    def to_dict(self) -> dict:
        return {
            "triad": self.triad.to_dict(),
            "variable": self.variable,
            "harmonic": self.harmonic_t.to_dict(),
            "biharmonic": [x.to_dict() for x in self.biharmonic_t],
            "proper": [x.to_dict() for x in self.proper_biharmonic_t],
            "case": self.case_label.value,
            "angles_rad": self.angles_radians,
            "harmonic_angles_rad": self.harmonic_angles,
        }


def classify(t: SymmetricTriad1D) -> ClassificationResult:
    harmonic = solve_harmonic(t)
    bih = solve_biharmonic(t)
    proper = [x for x in bih if x != harmonic]
    angles = [s for x in proper for s in angles_for(t, x)]
    label = {0: CaseLabel.HARMONIC_ONLY, 1: CaseLabel.UNIQUE_PROPER}.get(len(angles), CaseLabel.TWO_PROPER)
    return ClassificationResult(t, harmonic, bih, proper, label, angles, angles_for(t, harmonic))


# -- catalog sweep ---------------------------------------------------------

@dataclass
class CatalogRow:
    row: dict
    result: ClassificationResult
    expected: CaseLabel

    @property
    def matches(self) -> bool:
        return self.result.case_label is self.expected


@dataclass
class CatalogReport:
    max_param: int
    rows: list[CatalogRow]

    @property
    def mismatches(self) -> list[CatalogRow]:
        return [r for r in self.rows if not r.matches]

    def groups(self) -> dict[int, list[str]]:
        """Distinct case labels per classification list, as observed."""
        out: dict[int, list[str]] = {1: [], 2: [], 3: []}
        for r in self.rows:
            case = r.row["theorem_case"]
            g = int(case.split("-")[0])
            if case not in out[g]:
                out[g].append(case)
        return {g: sorted(v, key=lambda c: int(c.split("-")[1])) for g, v in out.items()}

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        groups = self.groups()
        return {
            "max_param": self.max_param,
            "instances": len(self.rows),
            "families": sum(len(v) for v in groups.values()),
            "groups": {str(g): v for g, v in groups.items()},
            "group_sizes": [len(groups[g]) for g in (1, 2, 3)],
            "mismatches": [
                {**r.row, "expected": r.expected.value, "got": r.result.case_label.value}
                for r in self.mismatches
            ],
            "pass": self.passed,
            "rows": [
                {**r.row, "case": r.result.case_label.value,
                 "proper": [x.to_dict() for x in r.result.proper_biharmonic_t]}
                for r in self.rows
            ],
        }


def classify_catalog(max_param: int = 12) -> CatalogReport:
    """Classify every catalog instance with parameters up to ``max_param``."""
    from .catalog import catalog

    if max_param < 2:
        raise ValueError("max_param must be at least 2 (smallest admissible c and q)")
    rows = []
    for entry in catalog():
        for params in entry.instances(max_param):
            result = classify(entry.triad(params))
            rows.append(CatalogRow(entry.row(params), result, GROUP_LABELS[entry.theorem_group]))
    return CatalogReport(max_param, rows)
