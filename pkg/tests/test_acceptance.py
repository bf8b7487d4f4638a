"""The nine acceptance criteria, each at its stated tolerance and time bound."""

import json
import math
import time
import timeit
from fractions import Fraction

import numpy as np
import pytest
from scipy.optimize import bisect

from hermann_biharmonic.catalog import catalog, catalog_multiplicities
from hermann_biharmonic.cli import main
from hermann_biharmonic.oracle import build_triad, run_oracle, verify_duality
from hermann_biharmonic.oracle.verify import sample_angles
from hermann_biharmonic.roots import (RootSystem, RootVector, SymmetricTriadData, validate_root_system,
                                      validate_symmetric_triad)
from hermann_biharmonic.solver import (GROUP_LABELS, CaseLabel, angles_for, b_norm_sq, biharmonic_polynomial,
                                       classify, solve_biharmonic, solve_harmonic)
from hermann_biharmonic.surd import QuadraticSurd as S
from hermann_biharmonic.triad import Kind, SymmetricTriad1D, validate_kind

ORACLE_CASES = [("so", 1, 2), ("so", 2, 2), ("so", 1, 3), ("so", 2, 3), ("so", 3, 3),
                ("su", 0, 2), ("su", 1, 2), ("su", 2, 2), ("su", 1, 3)]


def best_time(fn, number=200):
    """Fastest single call over a few batches, in seconds."""
    return min(timeit.repeat(fn, number=number, repeat=5)) / number


@pytest.mark.acceptance("AC1 catalog classification reproduces the three lists, zero mismatches, < 5 s")
def test_ac1_catalog(capsys):
    t0 = time.perf_counter()
    code = main(["catalog", "--max-param", "12", "--json"])
    elapsed = time.perf_counter() - t0
    doc = json.loads(capsys.readouterr().out)
    assert code == 0
    assert doc["mismatches"] == [] and doc["pass"]
    assert doc["groups"] == {"1": ["1-1", "1-2", "1-3"],
                             "2": [f"2-{i}" for i in range(1, 8)],
                             "3": [f"3-{i}" for i in range(1, 9)]}
    expected = {"1": "unique-proper", "2": "two-proper", "3": "harmonic-only"}
    assert all(r["case"] == expected[r["theorem_case"][0]] for r in doc["rows"])
    # every admissible instance within the bound is present
    assert len(doc["rows"]) == sum(len(list(e.instances(12))) for e in catalog())
    assert elapsed < 5.0


@pytest.mark.acceptance("AC2 F4/Spin(9): cot^2 in {(25 +- 2 sqrt130)/15}, harmonic 7/15, exact, < 1 ms")
def test_ac2_octonionic_plane():
    t = SymmetricTriad1D(Kind.ISO_BC1, 8, 7, 0, 0)
    r = classify(t)
    assert r.harmonic_t == S(7, 0, 0, 15)
    assert r.biharmonic_t == [S(25, -2, 130, 15), S(25, 2, 130, 15)]
    assert r.proper_biharmonic_t == r.biharmonic_t
    assert [str(x) for x in r.biharmonic_t] == ["(25 - 2*sqrt(130))/15", "(25 + 2*sqrt(130))/15"]
    assert r.case_label is CaseLabel.TWO_PROPER
    assert best_time(lambda: classify(t)) < 1e-3


@pytest.mark.acceptance("AC3 SO family: III-B1 root t=1, proper iff c-1 != b, b+c <= 12, exact, < 1 s")
def test_ac3_so_example():
    t0 = time.perf_counter()
    checked = 0
    for b in range(1, 12):
        for c in range(2, 13 - b):
            t = SymmetricTriad1D(Kind.III_B1, c - 1, 0, b, 0)
            r = classify(t)
            assert S(1) in r.biharmonic_t
            assert (S(1) in r.proper_biharmonic_t) == (c - 1 != b)
            assert (r.harmonic_t == S(1)) == (c - 1 == b)
            (s,) = angles_for(t, S(1))
            assert s == pytest.approx(math.pi / 4, abs=1e-15)
            checked += 1
    assert checked == sum(1 for b in range(1, 12) for c in range(2, 13 - b))
    assert time.perf_counter() - t0 < 1.0


def _bisect_roots(t, brackets):
    return [bisect(lambda s: b_norm_sq(t, s) - 0.5, lo, hi, xtol=1e-13) for lo, hi in brackets]


@pytest.mark.acceptance("AC4 (SO(8),U(4),U(4)'): {5, 1/2}, harmonic 5/2 between, bisection 1e-10, < 1 ms")
def test_ac4_so8():
    t = SymmetricTriad1D(Kind.I_BC1, 4, 1, 1, 0)

    def run():
        bih, h = solve_biharmonic(t), solve_harmonic(t)
        return bih, h, _bisect_roots(t, [(1e-3, math.pi / 4), (math.pi / 4, math.pi / 2 - 1e-3)])

    bih, h, numeric = run()
    assert bih == [S(1, 0, 0, 2), S(5)] and h == S(5, 0, 0, 2)
    assert bih[0] < h < bih[1]
    exact_angles = [a for x in bih for a in angles_for(t, x)]
    assert np.max(np.abs(np.array(numeric) - exact_angles)) <= 1e-10
    assert [math.tan(s) ** 2 for s in numeric] == pytest.approx([0.5, 5.0], abs=1e-10)
    assert best_time(run, number=50) < 1e-3


@pytest.mark.acceptance("AC5 E6: (8,7,8,1) proper {3,5} (bisection); (8,3,8,5) empty, disc -156, < 1 ms")
def test_ac5_e6():
    a = SymmetricTriad1D(Kind.III_BC1, 8, 7, 8, 1)
    b = SymmetricTriad1D(Kind.III_BC1, 8, 3, 8, 5)
    ra, rb = classify(a), classify(b)
    assert ra.proper_biharmonic_t == [S(3), S(5)]
    numeric = _bisect_roots(a, [(1e-3, 0.55), (0.55, math.pi / 4 - 1e-3)])
    assert [math.tan(2 * s) ** 2 for s in numeric] == pytest.approx([3.0, 5.0], abs=1e-9)
    assert (b.m2 - b.n2) ** 2 - 4 * b.n2 * b.m1 == -156
    p, q, r = biharmonic_polynomial(b)
    assert q * q - 4 * p * r < 0
    assert rb.proper_biharmonic_t == [] and rb.case_label is CaseLabel.HARMONIC_ONLY
    assert GROUP_LABELS[3] is CaseLabel.HARMONIC_ONLY
    assert best_time(lambda: (classify(a), classify(b))) < 1e-3


@pytest.mark.acceptance("AC6 oracle: multiplicities exact, max rel dev <= 1e-9 over 20 samples, < 60 s")
def test_ac6_oracle():
    t0 = time.perf_counter()
    for case, b, c in ORACLE_CASES:
        r = run_oracle(case, b, c, samples=20, seed=0, tol=1e-9)
        assert r.error is None, (case, b, c, r.error)
        assert r.recovered_mults == catalog_multiplicities(case, b, c), (case, b, c)
        assert r.max_rel_dev <= 1e-9, (case, b, c, r.max_rel_dev)
        assert r.max_vanishing <= 1e-10
        assert len(r.deviations) == 20
        assert r.passed
    assert time.perf_counter() - t0 < 60.0


@pytest.mark.acceptance("AC7 duality: |B'|^2 = |B|^2 and equal tension vectors to 1e-10, 5 angles per case")
def test_ac7_duality():
    for case, b, c in ORACLE_CASES:
        build = build_triad(case, b, c)
        for s in sample_angles(build.triad, 5, seed=7):
            r = verify_duality(build, s)
            assert r.deviation <= 1e-10, (case, b, c, s)
            assert r.tension_dev <= 1e-10, (case, b, c, s)


def _random_triads(n, seed):
    rng = np.random.default_rng(seed)
    makers = [
        lambda m: SymmetricTriad1D(Kind.I_BC1, m[0], m[1], m[2], 0),
        lambda m: SymmetricTriad1D(Kind.II_BC1, m[0], 0, m[0], m[1]),
        lambda m: SymmetricTriad1D(Kind.III_BC1, m[0], m[1], m[0], m[2]),
        lambda m: SymmetricTriad1D(Kind.III_B1, m[0], 0, m[1], 0),
    ]
    for i in range(n):
        yield makers[i % len(makers)]([int(x) for x in rng.integers(1, 51, size=3)])


@pytest.mark.acceptance("AC8 property suite: Vieta exact, |B|^2 = 1/2 within 1e-12, I-BC1 betweenness, 500 tuples, < 5 s")
def test_ac8_properties():
    t0 = time.perf_counter()
    n_ibc1 = 0
    for t in _random_triads(500, seed=2024):
        a, b, c = biharmonic_polynomial(t)
        h = solve_harmonic(t)
        roots = solve_biharmonic(t)
        assert S(c, 0, 0, a) == h                                  # (a) product of the roots
        if len(roots) == 2:
            assert roots[0] * roots[1] == h
        if t.kind is Kind.III_B1:
            assert set(roots) == {S(1), h}
        for x in roots:                                            # (b)
            for s in angles_for(t, x):
                assert abs(b_norm_sq(t, s) - 0.5) <= 1e-12
        if t.kind is Kind.I_BC1:                                   # (c)
            lo, hi = roots
            assert lo < h < hi
            n_ibc1 += 1
    assert n_ibc1 == 125
    assert time.perf_counter() - t0 < 5.0


def _line(k, a=Fraction(1, 8)):
    return RootVector.line(k, a)


@pytest.mark.acceptance("AC9 axiom suite: four shapes pass, three counterexamples fail at the documented condition")
def test_ac9_axioms():
    shapes = [(Kind.III_B1, (3, 0, 2, 0)), (Kind.I_BC1, (4, 1, 1, 0)),
              (Kind.II_BC1, (2, 0, 2, 1)), (Kind.III_BC1, (4, 3, 4, 4))]
    for kind, m in shapes:
        report = validate_kind(kind, *m)
        assert report.passed, report.failed_conditions()
        assert len(report.checks) == 12          # six triad and six multiplicity conditions

    missing = validate_root_system(RootSystem(1, frozenset({_line(1)})))
    assert missing.first_failure.condition == "reflection closure"
    assert "-alpha missing" in missing.first_failure.witness

    sigma = frozenset({_line(2), _line(-2)})
    w = frozenset({_line(1), _line(-1)})
    disjoint = validate_symmetric_triad(SymmetricTriadData(RootSystem(1, sigma | w), sigma, w))
    assert "(4) Sigma n W nonempty short slice" in disjoint.failed_conditions()
    assert disjoint.first_failure.witness == "Sigma n W is empty"

    parity = validate_kind(Kind.II_BC1, 3, 0, 2, 1)
    assert parity.failed_conditions() == ["(4) parity coupling"]
