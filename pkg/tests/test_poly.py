from __future__ import annotations

import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dompoly.poly import (
    ONE,
    X,
    NonDivisible,
    Polynomial,
    RationalFunction,
    divide_exact,
    dumps,
    evaluate_complex,
    evaluate_gaussian_rational,
    gcd,
    loads,
    lowest_degree,
    render,
)

coeffs = st.lists(st.integers(-10**6, 10**6), max_size=8)
polys = coeffs.map(Polynomial)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


def test_trailing_zeros_trimmed():
    assert Polynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert Polynomial([0, 0]).is_zero()
    with pytest.raises(ValueError):
        Polynomial().degree


def test_render():
    assert render(Polynomial([0, 0, 6, 4, 1])) == "6x^2 + 4x^3 + x^4"
    assert render(Polynomial([0, 3, 3, 1])) == "3x + 3x^2 + x^3"
    assert render(Polynomial([-1, 0, -2])) == "-1 - 2x^2"
    assert render(Polynomial()) == "0"


def test_lowest_degree():
    assert lowest_degree(Polynomial([0, 0, 6, 4, 1])) == 2
    with pytest.raises(ValueError):
        lowest_degree(Polynomial())


def test_pow_negative_rejected():
    with pytest.raises(ValueError):
        X ** -1


def test_divide_exact_reports_remainder():
    assert divide_exact(X ** 2 - 1, X - 1) == X + 1
    with pytest.raises(NonDivisible) as info:
        divide_exact(X ** 2 + 1, X - 1)
    assert info.value.remainder == [Fraction(2)]


def test_gcd_primitive():
    g = gcd((X + 1) * (2 * X + 3) * 6, (X + 1) * (X - 5) * 4)
    assert g == X + 1


def test_json_round_trip_big_coefficients():
    p = (X + 7) ** 40
    assert loads(dumps(p)) == p
    assert all(isinstance(c, str) for c in __import__("json").loads(dumps(p)))


def test_evaluate_complex_c4_root():
    z = complex(-2, 2 ** 0.5)
    assert abs(evaluate_complex(Polynomial([6, 4, 1]), z)) < 1e-14


def test_evaluate_gaussian_rational_exact():
    # (1+i)^2 = 2i
    assert evaluate_gaussian_rational(X ** 2, Fraction(1), Fraction(1)) == (0, 2)


def test_rational_function_reduces():
    r = RationalFunction((X + 1) * (X + 2), (X + 1) * 3)
    assert r.is_polynomial() is False
    assert r == RationalFunction(X + 2, 3)
    assert (RationalFunction(X ** 2 - 1, X - 1)).to_polynomial() == X + 1


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == Polynomial()
    assert a * ONE == a


@given(polys, st.integers(0, 6))
def test_pow_matches_repeated_mul(a, k):
    out = ONE
    for _ in range(k):
        out = out * a
    assert a ** k == out


@given(polys, nonzero_polys)
def test_divide_exact_round_trip(a, b):
    assert divide_exact(a * b, b) == a


@settings(max_examples=50)
@given(polys, polys, st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False))
def test_evaluation_is_multiplicative(a, b, z):
    lhs = evaluate_complex(a * b, z)
    rhs = evaluate_complex(a, z) * evaluate_complex(b, z)
    assert cmath.isclose(lhs, rhs, rel_tol=1e-12, abs_tol=1e-9 * (1 + abs(lhs)))


@given(polys)
def test_json_round_trip(a):
    assert loads(dumps(a)) == a
