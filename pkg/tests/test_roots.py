from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hermann_biharmonic.roots import (MultiplicityMap, RootSystem, RootVector, SymmetricTriadData,
                                      cartan_integer, reflect, validate_multiplicities,
                                      validate_root_system, validate_symmetric_triad)

A = Fraction(1, 8)


def line(k):
    return RootVector.line(k, A)


def pm(*ks):
    return frozenset(line(e * k) for k in ks for e in (1, -1))


rationals = st.fractions(max_denominator=50).filter(lambda x: abs(x) < 100)


def test_reflect_examples():
    a = line(1)
    assert reflect(a, a) == line(-1)
    assert reflect(a, line(2)) == line(-2)
    # rank two: reflection fixes the orthogonal hyperplane
    g = ((1, 0), (0, 2))
    alpha = RootVector((1, 0), g)
    h = RootVector((0, 5), g)
    assert reflect(alpha, h) == h
    with pytest.raises(ValueError):
        reflect(RootVector((0, 0), g), h)


@settings(max_examples=60)
@given(rationals, rationals, rationals, rationals)
def test_reflect_is_an_involution(a1, a2, h1, h2):
    g = ((2, 1), (1, 3))
    alpha = RootVector((a1, a2), g)
    if alpha.is_zero():
        return
    h = RootVector((h1, h2), g)
    assert reflect(alpha, reflect(alpha, h)) == h
    assert reflect(alpha, alpha) == -alpha


def test_cartan_integers():
    assert cartan_integer(line(1), line(2)) == 4
    assert cartan_integer(line(2), line(1)) == 1


def test_root_system_reports():
    assert validate_root_system(RootSystem(1, pm(1))).passed
    assert validate_root_system(RootSystem(1, pm(1, 2))).passed
    bad = validate_root_system(RootSystem(1, frozenset({line(1)})))
    assert not bad.passed
    assert "-alpha missing" in bad.first_failure.witness
    assert not validate_root_system(RootSystem(1, pm(1, 3))).passed  # 2<a,3a>/<3a,3a> = 2/3


def test_non_positive_gram_rejected():
    with pytest.raises(ValueError):
        RootSystem(1, frozenset({RootVector((1,), ((-1,),))}))


def test_rank_two_b2_is_irreducible_a1xa1_is_not():
    g = ((1, 0), (0, 1))
    b2 = frozenset(RootVector(v, g) for v in [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1), (1, -1), (-1, 1)])
    rs = RootSystem(2, b2)
    assert validate_root_system(rs).passed and rs.is_irreducible()
    a1a1 = RootSystem(2, frozenset(RootVector(v, g) for v in [(1, 0), (-1, 0), (0, 1), (0, -1)]))
    assert validate_root_system(a1a1).passed and not a1a1.is_irreducible()


def triad(sigma, w):
    return SymmetricTriadData(RootSystem(1, sigma | w), sigma, w)


def test_triad_shapes_pass():
    assert validate_symmetric_triad(triad(pm(1), pm(1))).passed          # III-B1
    assert validate_symmetric_triad(triad(pm(1, 2), pm(1))).passed       # I-BC1
    assert validate_symmetric_triad(triad(pm(1), pm(1, 2))).passed       # II-BC1
    assert validate_symmetric_triad(triad(pm(1, 2), pm(1, 2))).passed    # III-BC1


def test_disjoint_sigma_and_w_fails_condition_4():
    r = validate_symmetric_triad(triad(pm(2), pm(1)))
    assert r.first_failure.condition.startswith("(4)")


def mults(m, n):
    return MultiplicityMap({line(e * k): v for k, v in m.items() for e in (1, -1)},
                           {line(e * k): v for k, v in n.items() for e in (1, -1)})


def test_multiplicity_reports():
    t = triad(pm(1), pm(1, 2))
    assert validate_multiplicities(t, mults({1: 2}, {1: 2, 2: 1})).passed
    bad = validate_multiplicities(t, mults({1: 3}, {1: 2, 2: 1}))
    assert bad.failed_conditions() == ["(4) parity coupling"]
    missing = validate_multiplicities(triad(pm(1), pm(1)), mults({1: 0}, {1: 2}))
    assert missing.first_failure.condition.startswith("(1-2)")
