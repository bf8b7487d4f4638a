"""Joint eigenspace decomposition of a commutative pair of involutions.

With ``H^`` a unit generator of the section (``-Killing`` metric), ``(ad H^)^2``
preserves each of the four joint eigenspaces of ``theta1``, ``theta2`` and has
eigenvalues ``-<lambda, H^>^2``.  Grouping them recovers the restricted roots
and both families of multiplicities.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from ..triad import SymmetricTriad1D
from .algebra import InvolutionSpec, MatrixLieAlgebra, StructuralError

#: Absolute clustering tolerance on (ad H^)^2 eigenvalues with |H^| = 1.
CLUSTER_TOL = 1e-8

BLOCKS = ("k1k2", "m1m2", "k1m2", "m1k2")


@dataclass
class Cluster:
    eigenvalue: float
    vectors: np.ndarray          # (dim, mult), orthonormal for -Killing

    @property
    def mult(self) -> int:
        return self.vectors.shape[1]


@dataclass
class DecompositionData:
    alg: MatrixLieAlgebra
    theta1: InvolutionSpec
    theta2: InvolutionSpec
    gram: np.ndarray                         # -Killing, float
    blocks: dict[str, np.ndarray]            # basis indices per joint eigenspace
    h_unit: np.ndarray                       # unit generator of a
    clusters: dict[str, list[Cluster]]
    alpha_norm: float = 0.0                  # <alpha, H^> = |alpha|
    S: dict[int, np.ndarray] = field(default_factory=dict)
    T: dict[int, np.ndarray] = field(default_factory=dict)
    X: dict[int, np.ndarray] = field(default_factory=dict)
    Y: dict[int, np.ndarray] = field(default_factory=dict)
    k0: np.ndarray | None = None
    v_k1m2: np.ndarray | None = None
    v_m1k2: np.ndarray | None = None

    @property
    def dim(self) -> int:
        return self.alg.dim

    def block_dims(self) -> dict[str, int]:
        return {k: len(v) for k, v in self.blocks.items()}

    def root_multiple(self, eigenvalue: float) -> int:
        """1 for ``alpha``, 2 for ``2 alpha``; 0 for the null eigenvalue."""
        if abs(eigenvalue) <= CLUSTER_TOL:
            return 0
        ratio = -eigenvalue / self.alpha_norm ** 2
        for k in (1, 2):
            if abs(ratio - k * k) <= CLUSTER_TOL / self.alpha_norm ** 2:
                return k
        raise StructuralError(f"eigenvalue {eigenvalue} is not -k^2 |alpha|^2 for k in (1, 2)")

    def multiplicities(self) -> tuple[int, int, int, int]:
        m = {1: 0, 2: 0}
        n = {1: 0, 2: 0}
        for c in self.clusters["k1k2"]:
            k = self.root_multiple(c.eigenvalue)
            if k:
                m[k] += c.mult
        for c in self.clusters["k1m2"]:
            k = self.root_multiple(c.eigenvalue)
            if k:
                n[k] += c.mult
        return m[1], m[2], n[1], n[2]

    def swapped(self) -> "DecompositionData":
        """Decomposition for the dual action: the two involutions exchanged."""
        return decompose(self.alg, self.theta2, self.theta1, self.h_unit)

    def h(self, s: float) -> np.ndarray:
        """Coordinates of the H in the section with ``<alpha, H> = s``."""
        return (s / self.alpha_norm) * self.h_unit


def _cluster(values: np.ndarray, vectors: np.ndarray) -> list[Cluster]:
    order = np.argsort(values)
    values, vectors = values[order], vectors[:, order]
    out: list[Cluster] = []
    start = 0
    for i in range(1, len(values) + 1):
        if i == len(values) or values[i] - values[i - 1] > CLUSTER_TOL:
            out.append(Cluster(float(np.mean(values[start:i])), vectors[:, start:i]))
            start = i
    return out


def decompose(alg: MatrixLieAlgebra, theta1: InvolutionSpec, theta2: InvolutionSpec,
              h: np.ndarray) -> DecompositionData:
    """Decompose ``alg`` along ``theta1``, ``theta2`` and ``ad h``.

    ``h`` must lie in ``m1 n m2``; it is rescaled to unit length.
    """
    e1, e2 = theta1.eigen_signs(alg), theta2.eigen_signs(alg)
    blocks = {
        "k1k2": np.flatnonzero((e1 == 1) & (e2 == 1)),
        "m1m2": np.flatnonzero((e1 == -1) & (e2 == -1)),
        "k1m2": np.flatnonzero((e1 == 1) & (e2 == -1)),
        "m1k2": np.flatnonzero((e1 == -1) & (e2 == 1)),
    }
    h = np.asarray(h, dtype=float)
    if np.any(h[np.setdiff1d(np.arange(alg.dim), blocks["m1m2"])] != 0):
        raise StructuralError("section generator is not in m1 n m2")
    gram = alg.inner()
    if np.min(np.linalg.eigvalsh(gram)) <= 0:
        raise StructuralError("-Killing is not positive definite")
    h_unit = h / np.sqrt(h @ gram @ h)

    ad = alg.ad(h_unit)
    ad2 = ad @ ad
    clusters: dict[str, list[Cluster]] = {}
    for name, idx in blocks.items():
        if len(idx) == 0:
            clusters[name] = []
            continue
        others = np.setdiff1d(np.arange(alg.dim), idx)
        if np.max(np.abs(ad2[np.ix_(others, idx)]), initial=0.0) > 1e-10:
            raise StructuralError(f"(ad H)^2 does not preserve {name}")
        g = gram[np.ix_(idx, idx)]
        op = ad2[np.ix_(idx, idx)]
        vals, vecs = scipy.linalg.eigh(g @ op, g)
        full = np.zeros((alg.dim, len(idx)))
        full[idx] = vecs
        clusters[name] = _cluster(vals, full)

    data = DecompositionData(alg, theta1, theta2, gram, blocks, h_unit, clusters)

    nonzero = [-c.eigenvalue for cs in clusters.values() for c in cs if abs(c.eigenvalue) > CLUSTER_TOL]
    if any(v < 0 for v in nonzero):
        raise StructuralError("(ad H)^2 has a positive eigenvalue")
    if not nonzero:
        raise StructuralError("section generator is central")
    data.alpha_norm = float(np.sqrt(min(nonzero)))
    for v in nonzero:
        data.root_multiple(-v)

    null = {name: next((c for c in cs if abs(c.eigenvalue) <= CLUSTER_TOL), None)
            for name, cs in clusters.items()}
    a_space = null["m1m2"]
    if a_space is None or a_space.mult != 1:
        got = 0 if a_space is None else a_space.mult
        raise StructuralError(f"a is not maximal abelian in m1 n m2: centralizer has dim {got}")

    def empty():
        return np.zeros((alg.dim, 0))

    data.k0 = null["k1k2"].vectors if null["k1k2"] else empty()
    data.v_k1m2 = null["k1m2"].vectors if null["k1m2"] else empty()
    data.v_m1k2 = null["m1k2"].vectors if null["m1k2"] else empty()

    def partner(vectors: np.ndarray, k: int) -> np.ndarray:
        p = ad @ vectors / (k * data.alpha_norm)
        # symmetric re-orthonormalisation keeps the pairing with the source basis
        g = p.T @ gram @ p
        w, u = np.linalg.eigh(g)
        return p @ (u @ np.diag(w ** -0.5) @ u.T)

    for c in clusters["k1k2"]:
        k = data.root_multiple(c.eigenvalue)
        if k:
            data.S[k] = c.vectors
            data.T[k] = partner(c.vectors, k)
    for c in clusters["k1m2"]:
        k = data.root_multiple(c.eigenvalue)
        if k:
            data.X[k] = c.vectors
            data.Y[k] = partner(c.vectors, k)

    for k, s in data.S.items():
        mm = sum(c.mult for c in clusters["m1m2"] if data.root_multiple(c.eigenvalue) == k)
        if mm != s.shape[1]:
            raise StructuralError(f"dim k_{k}alpha = {s.shape[1]} but dim m_{k}alpha = {mm}")
    for k, x in data.X.items():
        nm = sum(c.mult for c in clusters["m1k2"] if data.root_multiple(c.eigenvalue) == k)
        if nm != x.shape[1]:
            raise StructuralError(f"V-perp dims differ for {k}alpha: {x.shape[1]} vs {nm}")
    return data


@dataclass
class RestrictedRoots:
    multiplicities: tuple[int, int, int, int]
    triad: SymmetricTriad1D
    alpha_sq: float
    formula_alpha_sq: float
    eigenvalues: dict[str, list[tuple[float, int]]]

    @property
    def alpha_sq_rel_dev(self) -> float:
        return abs(self.alpha_sq - self.formula_alpha_sq) / self.formula_alpha_sq


def restricted_roots(data: DecompositionData) -> RestrictedRoots:
    """Root pattern, multiplicities and ``<alpha, alpha>`` from the eigen-decomposition."""
    from ..solver import norm_alpha_sq

    mults = data.multiplicities()
    try:
        triad = SymmetricTriad1D.infer(*mults)
    except ValueError as exc:
        raise StructuralError(f"eigenvalue pattern does not match a rank-one type: {exc}") from None
    eig = {name: [(c.eigenvalue, c.mult) for c in cs] for name, cs in data.clusters.items()}
    return RestrictedRoots(mults, triad, data.alpha_norm ** 2, float(norm_alpha_sq(triad)), eig)
