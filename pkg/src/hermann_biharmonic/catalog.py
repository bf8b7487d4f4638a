"""Commutative compact symmetric triads with one-dimensional sections.

Each entry is a family ``(G, K1, K2)`` with its rank-one triad type and
multiplicities as functions of the integer parameters ``b``, ``c``, ``q``,
tagged with the classification list it belongs to.  The four
isotropy actions of rank-one symmetric spaces are included as kinds with
empty ``W``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator

from .triad import Kind, SymmetricTriad1D

Params = dict[str, int]

#: Smallest admissible value of each parameter.
PARAM_MIN = {"b": 1, "c": 2, "q": 2}


@dataclass(frozen=True)
class CatalogEntry:
    group_g: str
    group_k1: str
    group_k2: str
    kind: Kind
    params: tuple[str, ...]
    param_ranges: str
    theorem_case: str
    mults: Callable[[Params], tuple[int, int, int, int]]
    names: Callable[[Params], tuple[str, str, str]]
    admissible: Callable[[Params], bool] = lambda p: True
    param_min: tuple[tuple[str, int], ...] = ()

    @property
    def theorem_group(self) -> int:
        return int(self.theorem_case.split("-")[0])

    def minimum(self, name: str) -> int:
        return dict(self.param_min).get(name, PARAM_MIN[name])

    def triad(self, params: Params | None = None) -> SymmetricTriad1D:
        return SymmetricTriad1D.create(self.kind, *self.mults(params or {}))

    def instances(self, max_param: int) -> Iterator[Params]:
        ranges = [range(self.minimum(n), max_param + 1) for n in self.params]
        for values in itertools.product(*ranges):
            p = dict(zip(self.params, values))
            if self.admissible(p):
                yield p

    def row(self, params: Params | None = None) -> dict:
        """JSON row for one instantiation."""
        params = params or {}
        t = self.triad(params)
        g, k1, k2 = self.names(params)
        return {
            "group_g": g,
            "group_k1": k1,
            "group_k2": k2,
            "kind": t.kind.value,
            "m1": t.m1,
            "m2": t.m2,
            "n1": t.n1,
            "n2": t.n2,
            "params": dict(params),
            "theorem_case": self.theorem_case,
        }

    def family_row(self) -> dict:
        return {
            "group_g": self.group_g,
            "group_k1": self.group_k1,
            "group_k2": self.group_k2,
            "kind": self.kind.value,
            "params": {"names": list(self.params), "ranges": self.param_ranges},
            "theorem_case": self.theorem_case,
        }


def _fixed(names: tuple[str, str, str]):
    return lambda p: names


_ENTRIES: tuple[CatalogEntry, ...] = (
    # --- III-B1 -----------------------------------------------------------
    CatalogEntry(
        "SO(1+b+c)", "SO(1+b)xSO(c)", "SO(b+c)", Kind.III_B1, ("b", "c"),
        "b>0, c>1, c-1!=b", "1-1",
        mults=lambda p: (p["c"] - 1, 0, p["b"], 0),
        names=lambda p: (f"SO({1 + p['b'] + p['c']})", f"SO({1 + p['b']})xSO({p['c']})",
                         f"SO({p['b'] + p['c']})"),
        admissible=lambda p: p["c"] - 1 != p["b"],
    ),
    CatalogEntry(
        "SO(2c)", "SO(c)xSO(c)", "SO(2c-1)", Kind.III_B1, ("c",), "c>1", "3-1",
        mults=lambda p: (p["c"] - 1, 0, p["c"] - 1, 0),
        names=lambda p: (f"SO({2 * p['c']})", f"SO({p['c']})xSO({p['c']})", f"SO({2 * p['c'] - 1})"),
    ),
    CatalogEntry("SU(4)", "Sp(2)", "SO(4)", Kind.III_B1, (), "", "3-2",
                 mults=lambda p: (2, 0, 2, 0), names=_fixed(("SU(4)", "Sp(2)", "SO(4)"))),
    CatalogEntry("SU(4)", "S(U(2)xU(2))", "Sp(2)", Kind.III_B1, (), "", "1-2",
                 mults=lambda p: (3, 0, 1, 0), names=_fixed(("SU(4)", "S(U(2)xU(2))", "Sp(2)"))),
    CatalogEntry("Sp(2)", "U(2)", "Sp(1)xSp(1)", Kind.III_B1, (), "", "1-3",
                 mults=lambda p: (1, 0, 2, 0), names=_fixed(("Sp(2)", "U(2)", "Sp(1)xSp(1)"))),
    # --- I-BC1 ------------------------------------------------------------
    CatalogEntry(
        "SO(2+2q)", "SO(2)xSO(2q)", "U(1+q)", Kind.I_BC1, ("q",), "q>1", "2-1",
        mults=lambda p: (2 * (p["q"] - 1), 1, 2 * (p["q"] - 1), 0),
        names=lambda p: (f"SO({2 + 2 * p['q']})", f"SO(2)xSO({2 * p['q']})", f"U({1 + p['q']})"),
    ),
    CatalogEntry(
        "SU(1+b+c)", "S(U(1+b)xU(c))", "S(U(1)xU(b+c))", Kind.I_BC1, ("b", "c"),
        "b>=0, c>1", "2-2",
        mults=lambda p: (2 * (p["c"] - 1), 1, 2 * p["b"], 0),
        names=lambda p: (f"SU({1 + p['b'] + p['c']})", f"S(U({1 + p['b']})xU({p['c']}))",
                         f"S(U(1)xU({p['b'] + p['c']}))"),
        param_min=(("b", 0),),
    ),
    CatalogEntry(
        "Sp(1+b+c)", "Sp(1+b)xSp(c)", "Sp(1)xSp(b+c)", Kind.I_BC1, ("b", "c"),
        "b>=0, c>1", "2-3",
        mults=lambda p: (4 * (p["c"] - 1), 3, 4 * p["b"], 0),
        names=lambda p: (f"Sp({1 + p['b'] + p['c']})", f"Sp({1 + p['b']})xSp({p['c']})",
                         f"Sp(1)xSp({p['b'] + p['c']})"),
        param_min=(("b", 0),),
    ),
    CatalogEntry("SO(8)", "U(4)", "U(4)'", Kind.I_BC1, (), "", "2-4",
                 mults=lambda p: (4, 1, 1, 0), names=_fixed(("SO(8)", "U(4)", "U(4)'"))),
    # --- II-BC1 -----------------------------------------------------------
    CatalogEntry("SO(6)", "U(3)", "SO(3)xSO(3)", Kind.II_BC1, (), "", "3-3",
                 mults=lambda p: (2, 0, 2, 1), names=_fixed(("SO(6)", "U(3)", "SO(3)xSO(3)"))),
    CatalogEntry(
        "SU(1+q)", "SO(1+q)", "S(U(1)xU(q))", Kind.II_BC1, ("q",), "q>1", "3-4",
        mults=lambda p: (p["q"] - 1, 0, p["q"] - 1, 1),
        names=lambda p: (f"SU({1 + p['q']})", f"SO({1 + p['q']})", f"S(U(1)xU({p['q']}))"),
    ),
    # --- III-BC1 ----------------------------------------------------------
    CatalogEntry(
        "SU(2+2q)", "S(U(2)xU(2q))", "Sp(1+q)", Kind.III_BC1, ("q",), "q>1", "3-5",
        mults=lambda p: (4 * (p["q"] - 1), 3, 4 * (p["q"] - 1), 1),
        names=lambda p: (f"SU({2 + 2 * p['q']})", f"S(U(2)xU({2 * p['q']}))", f"Sp({1 + p['q']})"),
    ),
    CatalogEntry(
        "Sp(1+q)", "U(1+q)", "Sp(1)xSp(q)", Kind.III_BC1, ("q",), "q>1", "3-6",
        mults=lambda p: (2 * (p["q"] - 1), 1, 2 * (p["q"] - 1), 2),
        names=lambda p: (f"Sp({1 + p['q']})", f"U({1 + p['q']})", f"Sp(1)xSp({p['q']})"),
    ),
    CatalogEntry("E6", "SU(6).SU(2)", "F4", Kind.III_BC1, (), "", "3-7",
                 mults=lambda p: (8, 3, 8, 5), names=_fixed(("E6", "SU(6).SU(2)", "F4"))),
    CatalogEntry("E6", "SO(10).U(1)", "F4", Kind.III_BC1, (), "", "2-5",
                 mults=lambda p: (8, 7, 8, 1), names=_fixed(("E6", "SO(10).U(1)", "F4"))),
    CatalogEntry("F4", "Sp(3).Sp(1)", "Spin(9)", Kind.III_BC1, (), "", "3-8",
                 mults=lambda p: (4, 3, 4, 4), names=_fixed(("F4", "Sp(3).Sp(1)", "Spin(9)"))),
    # --- isotropy actions of rank-one spaces (theta1 = theta2) ------------
    CatalogEntry(
        "SO(1+q)", "SO(q)", "SO(q)", Kind.ISO_A1, ("q",), "q>=2 (sphere S^q)", "2-6",
        mults=lambda p: (p["q"] - 1, 0, 0, 0),
        names=lambda p: (f"SO({1 + p['q']})", f"SO({p['q']})", f"SO({p['q']})"),
    ),
    CatalogEntry(
        "SU(1+q)", "S(U(1)xU(q))", "S(U(1)xU(q))", Kind.ISO_BC1, ("q",), "q>=2 (CP^q)", "2-2",
        mults=lambda p: (2 * (p["q"] - 1), 1, 0, 0),
        names=lambda p: (f"SU({1 + p['q']})", f"S(U(1)xU({p['q']}))", f"S(U(1)xU({p['q']}))"),
    ),
    CatalogEntry(
        "Sp(1+q)", "Sp(1)xSp(q)", "Sp(1)xSp(q)", Kind.ISO_BC1, ("q",), "q>=2 (HP^q)", "2-3",
        mults=lambda p: (4 * (p["q"] - 1), 3, 0, 0),
        names=lambda p: (f"Sp({1 + p['q']})", f"Sp(1)xSp({p['q']})", f"Sp(1)xSp({p['q']})"),
    ),
    CatalogEntry("F4", "Spin(9)", "Spin(9)", Kind.ISO_BC1, (), "OP^2", "2-7",
                 mults=lambda p: (8, 7, 0, 0), names=_fixed(("F4", "Spin(9)", "Spin(9)"))),
)


def catalog() -> list[CatalogEntry]:
    return list(_ENTRIES)


def theorem_cases() -> dict[int, list[str]]:
    """Distinct case labels per classification list."""
    groups: dict[int, list[str]] = {1: [], 2: [], 3: []}
    for e in _ENTRIES:
        if e.theorem_case not in groups[e.theorem_group]:
            groups[e.theorem_group].append(e.theorem_case)
    return {g: sorted(v, key=lambda s: int(s.split("-")[1])) for g, v in groups.items()}


def find(theorem_case: str) -> list[CatalogEntry]:
    return [e for e in _ENTRIES if e.theorem_case == theorem_case]


def catalog_multiplicities(case: str, b: int, c: int) -> tuple[int, int, int, int]:
    """Table multiplicities of the matrix families ``so(1+b+c)`` and ``su(1+b+c)``."""
    if case == "so":
        entry = find("1-1")[0] if c - 1 != b else find("3-1")[0]
        params = {"b": b, "c": c} if c - 1 != b else {"c": c}
    elif case == "su":
        entry, params = find("2-2")[0], {"b": b, "c": c}
    else:
        raise ValueError(f"unknown matrix family {case!r}")
    return entry.triad(params).mults
