"""Second fundamental forms of Hermann-action orbits, computed two ways.

``orbit_geometry`` works from first principles.  Translating the orbit
``K2 . pi1(exp H)`` back to the origin gives the orbit of
``K' = exp(-H) K2 exp(H)`` through ``o``.  For ``Z`` in ``Lie(K')`` the Killing
field ``Z*`` has ``Z*(o) = Z_m`` and, on a symmetric space,
``(nabla_v Z*)(o) = [Z_k, v]``.  Hence ``B(v, Z_m) = [Z_k, v]^perp``.  No root
data enters this route.

``bracket_rule_form`` assembles ``B`` on the adapted bases
``T``, ``Y`` and ``V(m1 n k2)`` from the bracket rules ``cot<mu,H>[T,S]^perp``,
``-tan<beta,H>[Y,X]^perp``, ``-tan<beta,H>[T,X]^perp``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .algebra import InvolutionSpec, MatrixLieAlgebra
from .decomposition import DecompositionData


def _orthonormal_range(vectors: np.ndarray, gram: np.ndarray, rel_tol: float = 1e-10):
    """Orthonormal basis of the column span and the coefficients producing it."""
    g = vectors.T @ gram @ vectors
    w, u = np.linalg.eigh(g)
    keep = w > rel_tol * max(w.max(initial=0.0), 1.0)
    coeff = u[:, keep] / np.sqrt(w[keep])
    return vectors @ coeff, coeff


@dataclass
class OrbitGeometry:
    alg: MatrixLieAlgebra
    gram: np.ndarray
    tangent: np.ndarray          # (dim, p) orthonormal
    generators: np.ndarray       # (dim, p) elements of Ad(x^-1) k2 with m-part = tangent
    normal: np.ndarray           # (dim, q) orthonormal
    k_mask: np.ndarray
    m_mask: np.ndarray
    _lift: np.ndarray            # full generating set of Ad(x^-1) k2
    _b: np.ndarray | None = None

    def _perp(self, v: np.ndarray) -> np.ndarray:
        return self.normal.T @ self.gram @ v

    def lift(self, w: np.ndarray) -> np.ndarray:
        """An element ``Z`` of ``Ad(x^-1) k2`` with ``Z_m = w`` (``w`` tangent)."""
        pm = self._lift * self.m_mask[:, None]
        x, *_ = np.linalg.lstsq(pm, w, rcond=None)
        z = self._lift @ x
        if np.max(np.abs(pm @ x - w), initial=0.0) > 1e-9 * max(1.0, np.max(np.abs(w))):
            raise ValueError("vector is not tangent to the orbit")
        return z

    def second_fundamental_form(self, v: np.ndarray, w: np.ndarray) -> np.ndarray:
        """``B(v, w)`` in normal coordinates."""
        z = self.lift(w) * self.k_mask
        return self._perp(self.alg.bracket(z, v))

    def table(self) -> np.ndarray:
        """``B(e_a, e_b)`` on the orthonormal tangent basis, shape (p, p, q)."""
        if self._b is None:
            zk = self.generators * self.k_mask[:, None]
            s = self.alg.structure.astype(float)
            # [Z_b, e_a] for every pair
            t1 = np.einsum("ja,ijc->aic", self.tangent, s)
            br = np.einsum("ib,aic->abc", zk, t1)
            self._b = br @ (self.gram @ self.normal)
        return self._b

    def norm_sq(self) -> float:
        return float(np.sum(self.table() ** 2))

    def tension(self) -> np.ndarray:
        """Trace of ``B`` as a vector of the algebra."""
        b = self.table()
        return self.normal @ np.einsum("aac->c", b)

    def symmetry_defect(self) -> float:
        b = self.table()
        return float(np.max(np.abs(b - b.transpose(1, 0, 2)), initial=0.0))


def orbit_geometry(alg: MatrixLieAlgebra, theta_space: InvolutionSpec, theta_group: InvolutionSpec,
                   h: np.ndarray, gram: np.ndarray | None = None) -> OrbitGeometry:
    """Orbit of ``K_group`` through ``exp(h)`` in ``G / K_space``."""
    gram = alg.inner() if gram is None else gram
    e_sp = theta_space.eigen_signs(alg)
    e_gr = theta_group.eigen_signs(alg)
    k_mask = (e_sp == 1).astype(float)
    m_mask = (e_sp == -1).astype(float)
    ad_inv = scipy.linalg.expm(-alg.ad(h))
    lift = ad_inv[:, e_gr == 1]
    tangent, coeff = _orthonormal_range(lift * m_mask[:, None], gram)
    generators = lift @ coeff
    # normal space: complement of the tangent space inside m
    m_basis = np.eye(alg.dim)[:, e_sp == -1]
    resid = m_basis - tangent @ (tangent.T @ gram @ m_basis)
    normal, _ = _orthonormal_range(resid, gram, rel_tol=1e-8)
    return OrbitGeometry(alg, gram, tangent, generators, normal, k_mask, m_mask, lift)


@dataclass
class BracketRuleForm:
    norm_sq: float
    tension: np.ndarray          # vector of the algebra, lies in a
    entries: dict[str, float]    # largest |B| per block, for inspection


def bracket_rule_form(data: DecompositionData, s: float) -> BracketRuleForm:
    """``|B_H|^2`` and ``tau_H`` from the adapted-basis bracket rules at ``<alpha,H> = s``."""
    alg, gram, hu = data.alg, data.gram, data.h_unit

    def perp(x: np.ndarray) -> float:
        return float(hu @ gram @ x)

    tangent: list[tuple[str, int, int, np.ndarray]] = []
    for k, t in sorted(data.T.items()):
        for i in range(t.shape[1]):
            tangent.append(("T", k, i, t[:, i]))
    for k, y in sorted(data.Y.items()):
        for i in range(y.shape[1]):
            tangent.append(("Y", k, i, y[:, i]))
    for i in range(data.v_m1k2.shape[1]):
        tangent.append(("V", 0, i, data.v_m1k2[:, i]))

    p = len(tangent)
    b = np.zeros((p, p))
    for a, first in enumerate(tangent):
        for c, second in enumerate(tangent):
            if first[0] == "V" or second[0] == "V":
                continue
            u, w = first, second
            if u[0] == "Y" and w[0] == "T":
                # mixed pairs use the rule with T in the first slot; B is symmetric
                u, w = w, u
            va = u[3]
            kc, lc, ic, _ = w
            if kc == "T":
                # cot<mu,H> [T_{lambda,i}, S_{mu,j}]^perp
                partner = data.S[lc][:, ic]
                factor = 1.0 / math.tan(lc * s)
            else:
                # -tan<beta,H> [T or Y, X_{beta,j}]^perp
                partner = data.X[lc][:, ic]
                factor = -math.tan(lc * s)
            b[a, c] = factor * perp(alg.bracket(va, partner))
    # normal space is a = R H^, so B is scalar along H^
    return BracketRuleForm(
        norm_sq=float(np.sum(b ** 2)),
        tension=float(np.trace(b)) * hu,
        entries={"max_abs": float(np.max(np.abs(b), initial=0.0))},
    )
