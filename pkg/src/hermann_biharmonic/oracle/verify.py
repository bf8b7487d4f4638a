"""Matrix-level builds of the SO and SU examples and closed-form cross-checks.

``so(1+b+c)`` and ``su(1+b+c)`` carry the involutions ``theta1 = I'_{1+b}``
and ``theta2 = I'_1`` (conjugation by ``diag(-I_l, I_{n-l})``); the section
is spanned by ``A_{1,n}``.  Everything downstream (roots, multiplicities,
second fundamental form) is recomputed from the bracket table.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from ..catalog import catalog_multiplicities
from ..solver import b_norm_sq, tension_coeff, tension_scale
from ..triad import SymmetricTriad1D, fundamental_cell, is_regular_point, require_regular
from .algebra import (InvolutionSpec, MatrixLieAlgebra, ResourceError, StructuralError,
                      check_antisymmetry, check_jacobi, so_algebra, su_algebra)
from .decomposition import DecompositionData, decompose, restricted_roots
from .geometry import bracket_rule_form, orbit_geometry

DEFAULT_SIZE_CAP = 10
ONB_TOL = 1e-10
VANISH_TOL = 1e-10


@dataclass
class TriadBuild:
    case: str                    # "so" or "su"
    b: int
    c: int
    alg: MatrixLieAlgebra
    theta1: InvolutionSpec
    theta2: InvolutionSpec
    data: DecompositionData
    triad: SymmetricTriad1D      # from the recovered multiplicities

    @property
    def n(self) -> int:
        return 1 + self.b + self.c

    def swapped(self) -> "TriadBuild":
        """Build of the dual action (roles of the involutions exchanged)."""
        d = self.data.swapped()
        return TriadBuild(self.case, self.b, self.c, self.alg, self.theta2, self.theta1, d,
                          restricted_roots(d).triad)


def _check_size(n: int, size_cap: int) -> None:
    if n > size_cap:
        raise ResourceError(f"matrix size {n} exceeds the size cap {size_cap}")


def build_from_algebra(case: str, b: int, c: int, alg: MatrixLieAlgebra,
                       seed: int = 0) -> TriadBuild:
    """Run the structural checks and the decomposition on a prepared algebra."""
    n = 1 + b + c
    theta1 = InvolutionSpec.i_prime(1 + b, n)
    theta2 = InvolutionSpec.i_prime(1, n)
    check_antisymmetry(alg)
    check_jacobi(alg, samples=200, seed=seed)
    theta1.check(alg, theta2)
    theta2.check(alg, theta1)
    k = alg.killing()
    if not np.array_equal(k, k.T):
        raise StructuralError("Killing form is not symmetric")
    for th in (theta1, theta2):
        act = th.action(alg)
        if not np.array_equal(act.T @ k @ act, k):
            raise StructuralError(f"Killing form is not {th.name}-invariant")
    h = np.zeros(alg.dim)
    h[alg.index(f"A1,{n}")] = 1.0
    data = decompose(alg, theta1, theta2, h)
    check_onb(data)
    return TriadBuild(case, b, c, alg, theta1, theta2, data, restricted_roots(data).triad)


def build_so_triad(b: int, c: int, size_cap: int = DEFAULT_SIZE_CAP, seed: int = 0) -> TriadBuild:
    if b < 1 or c < 2:
        raise ValueError("so triads need b >= 1 and c >= 2")
    _check_size(1 + b + c, size_cap)
    return build_from_algebra("so", b, c, so_algebra(1 + b + c), seed)


def build_su_triad(b: int, c: int, size_cap: int = DEFAULT_SIZE_CAP, seed: int = 0) -> TriadBuild:
    if b < 0 or c < 2:
        raise ValueError("su triads need b >= 0 and c >= 2")
    _check_size(1 + b + c, size_cap)
    return build_from_algebra("su", b, c, su_algebra(1 + b + c), seed)


def build_triad(case: str, b: int, c: int, size_cap: int = DEFAULT_SIZE_CAP, seed: int = 0) -> TriadBuild:
    if case == "so":
        return build_so_triad(b, c, size_cap, seed)
    if case == "su":
        return build_su_triad(b, c, size_cap, seed)
    raise ValueError(f"unknown matrix family {case!r}")


# -- adapted-basis relations -------------------------------------------------

def onb_defects(data: DecompositionData, s: float = 0.7) -> dict[str, float]:
    """Largest violation of each adapted-basis relation.

    ``s`` is the test value of ``<alpha, H>`` for the ``Ad(exp H)`` rotation.
    """
    alg, gram, hu, a = data.alg, data.gram, data.h_unit, data.alpha_norm
    ad = alg.ad(hu)
    rot = scipy.linalg.expm(alg.ad(data.h(s)))
    out = {"ad": 0.0, "pair": 0.0, "rotation": 0.0, "orthonormal": 0.0, "perp": 0.0}
    pairs = [(data.S, data.T)] + [(data.X, data.Y)]
    for first, second in pairs:
        for k, u in first.items():
            v = second[k]
            lam = k * a
            out["ad"] = max(out["ad"], np.max(np.abs(ad @ u - lam * v)), np.max(np.abs(ad @ v + lam * u)))
            for basis in (u, v):
                out["orthonormal"] = max(out["orthonormal"],
                                         np.max(np.abs(basis.T @ gram @ basis - np.eye(basis.shape[1]))))
            for i in range(u.shape[1]):
                out["pair"] = max(out["pair"], np.max(np.abs(alg.bracket(u[:, i], v[:, i]) - lam * hu)))
            c, sn = math.cos(k * s), math.sin(k * s)
            out["rotation"] = max(out["rotation"],
                                  np.max(np.abs(rot @ u - (c * u + sn * v))),
                                  np.max(np.abs(rot @ v - (-sn * u + c * v))))
    # [T_{lambda,i}, S_{mu,j}] projected on a is -delta delta mu
    for kl, t in data.T.items():
        for km, sm in data.S.items():
            for i in range(t.shape[1]):
                for j in range(sm.shape[1]):
                    got = hu @ gram @ alg.bracket(t[:, i], sm[:, j])
                    want = -km * a if (kl == km and i == j) else 0.0
                    out["perp"] = max(out["perp"], abs(got - want))
    return {k: float(v) for k, v in out.items()}


def check_onb(data: DecompositionData, tol: float = ONB_TOL) -> None:
    for name, dev in onb_defects(data).items():
        if dev > tol:
            raise StructuralError(f"adapted-basis relation '{name}' off by {dev:.3g}")
    m1, m2, n1, n2 = data.multiplicities()
    total = (data.k0.shape[1] + 2 * (m1 + m2) + data.v_k1m2.shape[1] + data.v_m1k2.shape[1]
             + 2 * (n1 + n2) + 1)
    if total != data.dim:
        raise StructuralError(f"decomposition dimensions sum to {total}, not {data.dim}")


# -- second fundamental form ------------------------------------------------

@dataclass
class SampleGeometry:
    s: float
    b_norm_sq: float             # first-principles route
    tension: np.ndarray
    rule_b_norm_sq: float
    rule_tension: np.ndarray
    vanishing: float             # largest |B| on V(m1 n k2) x tangent


def second_fundamental_form_numeric(build: TriadBuild, s: float) -> SampleGeometry:
    """``|B_H|^2`` and ``tau_H`` at ``<alpha, H> = s`` by both numeric routes."""
    require_regular(build.triad, s)
    data = build.data
    geo = orbit_geometry(build.alg, build.theta1, build.theta2, data.h(s), data.gram)
    if geo.normal.shape[1] != 1:
        raise StructuralError(f"normal space has dimension {geo.normal.shape[1]} at a regular point")
    rules = bracket_rule_form(data, s)

    tangent = [data.T[k] for k in sorted(data.T)] + [data.Y[k] for k in sorted(data.Y)] + [data.v_m1k2]
    tangent = np.concatenate(tangent, axis=1)
    vanish = 0.0
    for i in range(data.v_m1k2.shape[1]):
        v = data.v_m1k2[:, i]
        for j in range(tangent.shape[1]):
            vanish = max(vanish, float(np.max(np.abs(geo.second_fundamental_form(v, tangent[:, j])))),
                         float(np.max(np.abs(geo.second_fundamental_form(tangent[:, j], v)))))
    return SampleGeometry(s, geo.norm_sq(), geo.tension(), rules.norm_sq, rules.tension, vanish)


def tension_along_alpha(data: DecompositionData, tension: np.ndarray) -> float:
    """Coefficient ``k`` with ``tension = k * alpha``."""
    return float(data.h_unit @ data.gram @ tension) / data.alpha_norm


@dataclass
class OracleReport:
    case: str
    b: int
    c: int
    recovered_mults: tuple[int, int, int, int] | None
    catalog_mults: tuple[int, int, int, int]
    max_rel_dev: float
    samples: int
    tolerance: float
    alpha_sq: float | None = None
    formula_alpha_sq: float | None = None
    max_vanishing: float = 0.0
    error: str | None = None
    deviations: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (self.error is None
                and self.recovered_mults == self.catalog_mults
                and self.max_rel_dev <= self.tolerance
                and self.max_vanishing <= VANISH_TOL)

    def to_dict(self) -> dict:
        return {
            "case": self.case,
            "b": self.b,
            "c": self.c,
            "recovered_mults": list(self.recovered_mults) if self.recovered_mults else None,
            "catalog_mults": list(self.catalog_mults),
            "alpha_sq": self.alpha_sq,
            "formula_alpha_sq": self.formula_alpha_sq,
            "max_rel_dev": self.max_rel_dev,
            "max_vanishing": self.max_vanishing,
            "samples": self.samples,
            "tolerance": self.tolerance,
            "error": self.error,
            "pass": self.passed,
        }


def sample_angles(triad: SymmetricTriad1D, samples: int, seed: int = 0) -> list[float]:
    """Uniform regular angles in the open fundamental cell."""
    lo, hi = fundamental_cell(triad).bounds
    rng = np.random.default_rng(seed)
    out: list[float] = []
    while len(out) < samples:
        s = float(rng.uniform(lo, hi))
        if lo < s < hi and is_regular_point(triad, s):
            out.append(s)
    return out


def verify_closed_forms(build: TriadBuild, samples: int = 20, seed: int = 0,
                        tol: float = 1e-9) -> OracleReport:
    """Compare both numeric routes with the closed forms at random regular angles."""
    if samples < 1:
        raise ValueError("samples must be at least 1")
    roots = restricted_roots(build.data)
    t = roots.triad
    report = OracleReport(build.case, build.b, build.c, roots.multiplicities,
                          catalog_multiplicities(build.case, build.b, build.c), 0.0, samples, tol,
                          roots.alpha_sq, roots.formula_alpha_sq)
    worst = roots.alpha_sq_rel_dev
    for s in sample_angles(t, samples, seed):
        g = second_fundamental_form_numeric(build, s)
        bn, k, scale = b_norm_sq(t, s), tension_coeff(t, s), tension_scale(t, s)
        dev = {
            "s": s,
            "b_geometric": abs(g.b_norm_sq - bn) / bn,
            "b_rules": abs(g.rule_b_norm_sq - bn) / bn,
            "tau_geometric": abs(tension_along_alpha(build.data, g.tension) - k) / scale,
            "tau_rules": abs(tension_along_alpha(build.data, g.rule_tension) - k) / scale,
        }
        report.deviations.append(dev)
        worst = max(worst, *(v for key, v in dev.items() if key != "s"))
        report.max_vanishing = max(report.max_vanishing, g.vanishing)
    report.max_rel_dev = float(worst)
    return report


def run_oracle(case: str, b: int, c: int, samples: int = 20, seed: int = 0, tol: float = 1e-9,
               size_cap: int = DEFAULT_SIZE_CAP, algebra: MatrixLieAlgebra | None = None) -> OracleReport:
    """Build and verify; structural failures come back as a failed report.

    ``algebra`` replaces the standard matrix algebra (used for negative controls).
    """
    expected = catalog_multiplicities(case, b, c)
    try:
        if algebra is None:
            build = build_triad(case, b, c, size_cap, seed)
        else:
            _check_size(1 + b + c, size_cap)
            build = build_from_algebra(case, b, c, algebra, seed)
        return verify_closed_forms(build, samples, seed, tol)
    except StructuralError as exc:
        return OracleReport(case, b, c, None, expected, math.inf, samples, tol, error=str(exc))


# -- duality ----------------------------------------------------------------

@dataclass
class DualityReport:
    s: float
    b_norm_sq: float
    dual_b_norm_sq: float
    tension_dev: float

    @property
    def deviation(self) -> float:
        return abs(self.dual_b_norm_sq - self.b_norm_sq)


def verify_duality(build: TriadBuild, s: float) -> DualityReport:
    """Compare the ``K2``-orbit in ``G/K1`` with the ``K1``-orbit in ``G/K2`` through ``exp H``."""
    require_regular(build.triad, s)
    data = build.data
    h = data.h(s)
    orbit = orbit_geometry(build.alg, build.theta1, build.theta2, h, data.gram)
    dual = orbit_geometry(build.alg, build.theta2, build.theta1, h, data.gram)
    tdev = float(np.max(np.abs(orbit.tension() - dual.tension())))
    return DualityReport(s, orbit.norm_sq(), dual.norm_sq(), tdev)
