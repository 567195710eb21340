from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from symcube.arith import (
    NotRationalError,
    ONE,
    PHI,
    QSqrt5,
    ZERO,
    as_rational,
    galois_conj,
    qsqrt5_from_string,
)

rationals = st.fractions(
    min_value=Fraction(-20), max_value=Fraction(20), max_denominator=12
)
elements = st.builds(QSqrt5.of, rationals, rationals)
nonzero = elements.filter(lambda x: not x.is_zero())


@given(elements, elements, elements)
def test_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x
    assert x * y == y * x


@given(nonzero)
def test_inverse(x):
    assert x * x.inverse() == ONE
    assert ONE / x == x.inverse()


@given(elements, elements)
def test_galois_is_an_automorphism(x, y):
    assert galois_conj(x + y) == galois_conj(x) + galois_conj(y)
    assert galois_conj(x * y) == galois_conj(x) * galois_conj(y)
    assert galois_conj(galois_conj(x)) == x


@given(nonzero, st.integers(min_value=-6, max_value=6))
def test_integer_powers(x, n):
    expected = ONE
    for _ in range(abs(n)):
        expected = expected * (x if n >= 0 else x.inverse())
    assert x ** n == expected


def test_golden_ratio():
    assert PHI * PHI == PHI + ONE
    assert galois_conj(PHI) == ONE - PHI
    # norm of phi is -1: phi * (1 - phi) = -1... with the sign convention
    assert PHI.norm() == Fraction(-1)


def test_as_rational():
    assert as_rational(QSqrt5.of(Fraction(3, 7))) == Fraction(3, 7)
    with pytest.raises(NotRationalError):
        as_rational(PHI)


@pytest.mark.parametrize(
    "text,value",
    [
        ("2", QSqrt5.of(2)),
        ("-3/4", QSqrt5.of(Fraction(-3, 4))),
        ("1/2+1/2*sqrt5", PHI),
        ("sqrt5", QSqrt5.of(0, 1)),
        ("-sqrt5", QSqrt5.of(0, -1)),
        ("2-3*sqrt5", QSqrt5.of(2, -3)),
    ],
)
def test_from_string(text, value):
    assert qsqrt5_from_string(text) == value


@given(elements)
def test_string_round_trip(x):
    assert qsqrt5_from_string(str(x)) == x


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()
