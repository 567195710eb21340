from math import comb

import pytest
from hypothesis import given, strategies as st

from symcube import char_ring as cr


def test_cube_wedge_square():
    # Lambda^2(sym^3) = sym^4 * det + det^3, dimensions 6 = 5 + 1
    lhs = cr.power("ext", 2, cr.sym_std(3))
    rhs = cr.direct_sum(
        cr.tensor(cr.sym_std(4), cr.det_power(1)), cr.det_power(3)
    )
    assert lhs == rhs
    assert lhs.dimension() == 6
    assert cr.sym_std(3).dimension() == 4


@pytest.mark.parametrize("a", range(9))
@pytest.mark.parametrize("b", range(9))
def test_clebsch_gordan_oracle(a, b):
    # independent oracle: multiply the weight characters directly
    product = cr.tensor(cr.sym_std(a), cr.sym_std(b))
    dec = cr.clebsch_gordan(a, b)
    assert cr.reconstruct(dec) == product
    assert dec.dimension() == (a + 1) * (b + 1)
    ms = sorted((m, k) for m, k, mult in dec for _ in range(mult))
    assert ms == sorted((a + b - 2 * k, k) for k in range(min(a, b) + 1))


@pytest.mark.parametrize("m", range(7))
@pytest.mark.parametrize("n", range(1, 5))
def test_power_dimensions(m, n):
    x = cr.sym_std(n)
    assert cr.power("sym", m, x).dimension() == comb(n + m, m)
    if m <= n + 1:
        assert cr.power("ext", m, x).dimension() == comb(n + 1, m)


def test_power_rejects_virtual_input():
    virtual = cr.sym_std(1) - cr.sym_std(0)
    ok = cr.power("sym", 2, cr.direct_sum(cr.sym_std(1), cr.sym_std(0)))
    assert ok.dimension() == 6
    with pytest.raises(cr.NonEffectiveError):
        cr.power("sym", 2, cr.det_power(1) - cr.sym_std(1))
    del virtual


@given(st.integers(min_value=0, max_value=6), st.integers(min_value=0, max_value=4))
def test_decompose_reconstruct(m, k):
    x = cr.sym_det(m, k)
    assert cr.reconstruct(cr.decompose(x)) == x


@given(
    st.lists(
        st.tuples(
            st.integers(min_value=0, max_value=5), st.integers(min_value=0, max_value=3)
        ),
        min_size=1,
        max_size=4,
    )
)
def test_decompose_reconstruct_sums(parts):
    x = cr.zero()
    for m, k in parts:
        x = cr.direct_sum(x, cr.sym_det(m, k))
    assert cr.reconstruct(cr.decompose(x)) == x


def test_dual():
    # self-dual up to det twist: dual(sym^m) = sym^m * det^-m
    for m in range(5):
        assert cr.dual(cr.sym_std(m)) == cr.tensor(cr.sym_std(m), cr.det_power(-m))


def test_sym2_of_sym2():
    # sym^2(sym^2) = sym^4 + det^2
    lhs = cr.power("sym", 2, cr.sym_std(2))
    rhs = cr.direct_sum(cr.sym_std(4), cr.det_power(2))
    assert lhs == rhs
