from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from yangfock.algebraics import PolyU, RatFuncU, SeriesU, expand, shift


u = PolyU.x()


def test_expand_constant_one():
    s = expand(RatFuncU.one(), 4)
    assert s.coeffs == (1, 0, 0, 0, 0)


def test_expand_geometric():
    # u/(u-2) = 1 + 2/u + 4/u^2 + 8/u^3 + ...
    f = RatFuncU(u, u - 2)
    s = expand(f, 3)
    assert s.coeffs == (1, 2, 4, 8)


def test_expand_rejects_growth_at_infinity():
    f = RatFuncU(u * u, u - 1)
    with pytest.raises(ValueError, match="not expandable at infinity"):
        expand(f, 4)


def test_expand_of_reducible_quotient_is_one():
    p = u * u + 4 * u + 3
    assert RatFuncU(p, p).is_one()
    assert expand(RatFuncU(p, p), 5) == SeriesU.one(5)


def test_shift_examples():
    assert shift(u, 0) == u
    assert shift(u - 1, 1) == u
    assert shift(u * u - 1, 2) == u * u + 4 * u + 3


def test_shift_composes():
    p = 3 * u * u * u - u + Fraction(1, 2)
    assert shift(shift(p, Fraction(2, 3)), Fraction(-2, 3)) == p


rationals = st.fractions(min_value=-6, max_value=6, max_denominator=4)


def polys(max_deg=3):
    return st.lists(rationals, min_size=0, max_size=max_deg + 1).map(PolyU)


@given(polys(), polys(), polys(2), polys(2))
def test_expand_is_multiplicative(p1, q1, p2, q2):
    # build f, g with deg num <= deg den and nonzero den
    den1 = q1 * q1 + PolyU([0] * 7 + [1])  # u^7 dominates any q*q
    den2 = q2 * q2 + PolyU([0] * 7 + [1])
    f = RatFuncU(p1, den1)
    g = RatFuncU(p2, den2)
    K = 5
    assert expand(f * g, K) == expand(f, K) * expand(g, K)


@given(polys(3), polys(3), polys(2))
def test_ratfunc_reduction_is_canonical(p, q, r):
    if q.is_zero():
        q = PolyU.const(1)
    if r.is_zero():
        r = PolyU.const(1)
    assert RatFuncU(p * r, q * r) == RatFuncU(p, q)


def test_series_inverse():
    s = expand(RatFuncU(u, u - 2), 4)
    assert s * s.inverse() == SeriesU.one(4)


def test_series_order_mismatch_rejected():
    with pytest.raises(ValueError):
        SeriesU.one(3) + SeriesU.one(4)


def test_poly_eval_and_divmod():
    p = u * u * u - 2 * u + 5
    assert p(2) == 9
    q, r = p.divmod(u - 1)
    assert q * (u - 1) + r == p
