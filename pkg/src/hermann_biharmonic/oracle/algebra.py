"""Matrix Lie algebras with exact integer structure constants.

``structure[a, b, c]`` is the coefficient of basis element ``c`` in
``[e_a, e_b]``.  The Killing form is the trace of ``ad e_a . ad e_b`` taken
from the structure constants alone.  ``su(n)`` is realified: its basis is
``E_ij - E_ji``, ``i(E_ij + E_ji)`` for ``i < j`` and ``i(E_kk - E_{k+1,k+1})``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np


class StructuralError(RuntimeError):
    """An algebraic identity that must hold exactly does not."""


class ResourceError(RuntimeError):
    pass


def _to_int(x: np.ndarray, what: str) -> np.ndarray:
    r = np.rint(x)
    if np.max(np.abs(x - r), initial=0.0) > 1e-9:
        raise StructuralError(f"{what} is not integral")
    return r.astype(np.int64)


@dataclass(frozen=True)
class MatrixLieAlgebra:
    name: str
    size: int
    basis: np.ndarray                       # (dim, size, size), real or complex
    labels: tuple[str, ...]
    structure: np.ndarray                   # (dim, dim, dim) int64
    coords: Callable[[np.ndarray], np.ndarray] = field(repr=False)
    _killing: np.ndarray | None = field(default=None, repr=False, compare=False)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def ad(self, x: np.ndarray) -> np.ndarray:
        """Matrix of ``ad x`` acting on coordinate columns."""
        # (ad x)[c, b] = sum_a x_a structure[a, b, c]
        return np.einsum("a,abc->cb", x, self.structure)

    def bracket(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return np.einsum("a,b,abc->c", x, y, self.structure)

    def matrix(self, x: np.ndarray) -> np.ndarray:
        return np.tensordot(x, self.basis, axes=1)

    def killing(self) -> np.ndarray:
        if self._killing is None:
            object.__setattr__(self, "_killing", killing_form(self))
        return self._killing

    def inner(self) -> np.ndarray:
        """Gram matrix of ``-Killing`` as floats."""
        return -self.killing().astype(float)

    def with_structure(self, structure: np.ndarray, name: str | None = None) -> "MatrixLieAlgebra":
        return MatrixLieAlgebra(name or self.name, self.size, self.basis, self.labels,
                                np.asarray(structure, dtype=np.int64), self.coords)


def killing_form(alg: MatrixLieAlgebra) -> np.ndarray:
    """``K[a, b] = tr(ad e_a ad e_b)`` as an exact integer matrix."""
    s = alg.structure
    d = alg.dim
    # K_ab = sum_{c,d} s[a,d,c] s[b,c,d]
    return s.reshape(d, d * d) @ s.transpose(0, 2, 1).reshape(d, d * d).T


def _structure_from_basis(basis: np.ndarray, coords) -> np.ndarray:
    prod = np.einsum("aij,bjk->abik", basis, basis)
    comm = prod - prod.transpose(1, 0, 2, 3)
    d = basis.shape[0]
    flat = coords(comm.reshape(d * d, *basis.shape[1:]))
    return _to_int(flat.reshape(d, d, d), "structure constant")


def so_algebra(n: int) -> MatrixLieAlgebra:
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    basis = np.zeros((len(pairs), n, n))
    for k, (i, j) in enumerate(pairs):
        basis[k, i, j], basis[k, j, i] = 1.0, -1.0
    iu = np.array([p[0] for p in pairs]), np.array([p[1] for p in pairs])

    def coords(m: np.ndarray) -> np.ndarray:
        m = np.real(m)
        return m[..., iu[0], iu[1]]

    labels = tuple(f"A{i + 1},{j + 1}" for i, j in pairs)
    return MatrixLieAlgebra(f"so({n})", n, basis, labels, _structure_from_basis(basis, coords), coords)


def su_algebra(n: int) -> MatrixLieAlgebra:
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mats, labels = [], []
    for i, j in pairs:
        a = np.zeros((n, n), complex)
        a[i, j], a[j, i] = 1, -1
        mats.append(a)
        labels.append(f"A{i + 1},{j + 1}")
    for i, j in pairs:
        b = np.zeros((n, n), complex)
        b[i, j] = b[j, i] = 1j
        mats.append(b)
        labels.append(f"iS{i + 1},{j + 1}")
    for k in range(n - 1):
        h = np.zeros((n, n), complex)
        h[k, k], h[k + 1, k + 1] = 1j, -1j
        mats.append(h)
        labels.append(f"iH{k + 1}")
    basis = np.array(mats)
    iu = np.array([p[0] for p in pairs], dtype=int), np.array([p[1] for p in pairs], dtype=int)

    def coords(m: np.ndarray) -> np.ndarray:
        upper = m[..., iu[0], iu[1]]
        diag = np.imag(np.diagonal(m, axis1=-2, axis2=-1))
        # diag(i x_1, ..., i x_n) = sum_k (x_1 + ... + x_k) iH_k
        return np.concatenate([np.real(upper), np.imag(upper), np.cumsum(diag, axis=-1)[..., :-1]], axis=-1)

    return MatrixLieAlgebra(f"su({n})", n, basis, tuple(labels), _structure_from_basis(basis, coords), coords)


def check_antisymmetry(alg: MatrixLieAlgebra) -> None:
    s = alg.structure
    if not np.array_equal(s, -s.transpose(1, 0, 2)):
        a, b, _ = np.argwhere(s != -s.transpose(1, 0, 2))[0]
        raise StructuralError(f"[{alg.labels[a]}, {alg.labels[b]}] is not antisymmetric")


def check_jacobi(alg: MatrixLieAlgebra, samples: int = 200, seed: int = 0) -> None:
    """Exact Jacobi identity on random basis triples."""
    rng = np.random.default_rng(seed)
    s = alg.structure
    for a, b, c in rng.integers(0, alg.dim, size=(samples, 3)):
        # [[a,b],c] + [[b,c],a] + [[c,a],b]
        total = s[a, b] @ s[:, c] + s[b, c] @ s[:, a] + s[c, a] @ s[:, b]
        if np.any(total != 0):
            raise StructuralError(
                f"Jacobi fails on ({alg.labels[a]}, {alg.labels[b]}, {alg.labels[c]})")


@dataclass(frozen=True)
class InvolutionSpec:
    """Conjugation ``X -> D X D`` by a diagonal sign matrix ``D``."""

    signs: tuple[int, ...]
    name: str = ""

    @classmethod
    def i_prime(cls, l: int, n: int) -> "InvolutionSpec":
        """Conjugation by ``diag(-I_l, I_{n-l})``."""
        return cls(tuple([-1] * l + [1] * (n - l)), f"I'_{l}")

    def action(self, alg: MatrixLieAlgebra) -> np.ndarray:
        """Exact integer matrix of the involution on coordinates."""
        d = np.diag(np.array(self.signs, dtype=float))
        images = np.einsum("ij,ajk,kl->ail", d, alg.basis, d)
        return _to_int(alg.coords(images).T, "involution action")

    def eigen_signs(self, alg: MatrixLieAlgebra) -> np.ndarray:
        """Per-basis-element eigenvalue; the basis must diagonalise the involution."""
        act = self.action(alg)
        if np.any(act != np.diag(np.diag(act))):
            raise StructuralError(f"{self.name} is not diagonal on the basis of {alg.name}")
        diag = np.diag(act)
        if not np.all(np.abs(diag) == 1):
            raise StructuralError(f"{self.name} does not square to the identity")
        return diag

    def check(self, alg: MatrixLieAlgebra, other: "InvolutionSpec | None" = None) -> None:
        act = self.action(alg)
        if not np.array_equal(act @ act, np.eye(alg.dim, dtype=np.int64)):
            raise StructuralError(f"{self.name} does not square to the identity")
        # automorphism: theta[e_a, e_b] = [theta e_a, theta e_b]
        lhs = np.einsum("abc,dc->abd", alg.structure, act)
        rhs = np.einsum("ia,jb,ijd->abd", act, act, alg.structure)
        if not np.array_equal(lhs, rhs):
            raise StructuralError(f"{self.name} is not a bracket automorphism")
        if other is not None:
            o = other.action(alg)
            if not np.array_equal(act @ o, o @ act):
                raise StructuralError(f"{self.name} and {other.name} do not commute")
