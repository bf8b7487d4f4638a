from fractions import Fraction

import mpmath
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from hermann_biharmonic.surd import QuadraticSurd, quadratic_roots, squarefree_split

small = st.integers(-40, 40)
radicand = st.integers(0, 60)
denominator = st.integers(1, 30)


def as_sympy(x: QuadraticSurd):
    return (sympy.Integer(x.p) + x.q * sympy.sqrt(x.d)) / x.r


@st.composite
def surds_same_field(draw):
    d = draw(radicand)
    return (QuadraticSurd(draw(small), draw(small), d, draw(denominator)),
            QuadraticSurd(draw(small), draw(small), d, draw(denominator)))


def test_squarefree_split():
    assert squarefree_split(72) == (6, 2)
    assert squarefree_split(130) == (1, 130)
    assert squarefree_split(0) == (0, 0)
    assert squarefree_split(1) == (1, 1)
    assert squarefree_split(999983 ** 2 * 6) == (999983, 6)


@given(st.integers(1, 10 ** 12))
def test_squarefree_split_matches_factorisation(n):
    k, d = squarefree_split(n)
    assert k * k * d == n
    assert all(e == 1 for e in sympy.factorint(d).values())


def test_canonical_form():
    x = QuadraticSurd(50, 4, 130, 30)
    assert (x.p, x.q, x.d, x.r) == (25, 2, 130, 15)
    assert QuadraticSurd(2, 3, 4, 2) == QuadraticSurd(4)          # sqrt(4) folds into p
    assert QuadraticSurd(0, 1, 8, 2) == QuadraticSurd(0, 1, 2, 1)  # sqrt(8)/2 = sqrt(2)
    assert QuadraticSurd(3, 5, 0, -6) == QuadraticSurd(-1, 0, 0, 2)
    with pytest.raises(ZeroDivisionError):
        QuadraticSurd(1, 0, 0, 0)


def test_str_and_dict():
    x = QuadraticSurd(25, 2, 130, 15)
    assert str(x) == "(25 + 2*sqrt(130))/15"
    assert str(x.conjugate()) == "(25 - 2*sqrt(130))/15"
    assert str(QuadraticSurd(7, 0, 0, 15)) == "7/15"
    assert QuadraticSurd.from_dict(x.to_dict()) == x
    assert x.to_dict() == {"p": 25, "q": 2, "d": 130, "r": 15}


@given(small, small, radicand, denominator)
def test_value_matches_sympy(p, q, d, r):
    x = QuadraticSurd(p, q, d, r)
    assert sympy.expand(as_sympy(x) - (sympy.Integer(p) + q * sympy.sqrt(d)) / r) == 0
    assert float(x) == pytest.approx(float(as_sympy(x)), rel=1e-12, abs=1e-12)


@settings(max_examples=100)
@given(surds_same_field())
def test_field_operations_match_sympy(pair):
    x, y = pair
    ex, ey = as_sympy(x), as_sympy(y)
    assert sympy.expand(as_sympy(x + y) - (ex + ey)) == 0
    assert sympy.expand(as_sympy(x - y) - (ex - ey)) == 0
    assert sympy.expand(as_sympy(x * y) - ex * ey) == 0
    if y:
        assert sympy.radsimp(as_sympy(x / y) - ex / ey).expand() == 0


@settings(max_examples=200)
@given(surds_same_field())
def test_sign_and_order_are_exact(pair):
    x, y = pair
    diff = as_sympy(x) - as_sympy(y)
    expected = 0 if sympy.expand(diff) == 0 else (1 if diff.evalf(50) > 0 else -1)
    assert (x - y).sign() == expected
    assert (x < y) == (expected < 0)
    assert (x == y) == (expected == 0)


def test_float_has_no_cancellation_loss():
    # 1e8 - sqrt(1e16 - 1) is tiny; naive evaluation loses every digit
    x = QuadraticSurd(10 ** 8, -1, 10 ** 16 - 1, 1)
    with mpmath.workdps(60):
        ref = mpmath.mpf(10 ** 8) - mpmath.sqrt(10 ** 16 - 1)
    assert float(x) == pytest.approx(float(ref), rel=1e-12)


@given(st.integers(-30, 30).filter(bool), st.integers(-60, 60), st.integers(-60, 60))
def test_quadratic_roots_match_sympy(a, b, c):
    got = quadratic_roots(a, b, c)
    x = sympy.Symbol("x")
    real = sorted({r for r in sympy.roots(sympy.Poly(a * x ** 2 + b * x + c, x)) if r.is_real},
                  key=lambda r: float(r))
    assert len(got) == len(real)
    for g, r in zip(got, real):
        assert sympy.radsimp(as_sympy(g) - r).expand() == 0


def test_quadratic_roots_edge_cases():
    assert quadratic_roots(1, -2, 1) == [QuadraticSurd(1)]           # double root once
    assert quadratic_roots(1, 0, 1) == []                             # complex
    assert quadratic_roots(0, 1, -1) == [QuadraticSurd(1)]            # linear
    assert quadratic_roots(Fraction(1, 2), Fraction(-3, 2), 1) == [QuadraticSurd(1), QuadraticSurd(2)]
    with pytest.raises(ValueError):
        quadratic_roots(0, 0, 1)
