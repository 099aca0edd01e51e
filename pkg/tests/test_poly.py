"""Tests for integer polynomials and rational functions."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from biquadrates.poly import (
    ExactDivisionError,
    IPoly,
    PoleError,
    RatFn,
    content,
    divides,
    format_poly,
    poly_gcd,
    poly_sqrt,
    primitive_part,
    _kronecker_mul,
    _mul_coeffs,
    _prs_gcd,
)

M = IPoly.gen("m")


def P(*cs):
    """Ascending-coefficient shorthand."""
    return IPoly(cs, "m")


# -- basic ring operations --------------------------------------------------

def test_construction_strips_trailing_zeros():
    assert IPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert IPoly([0, 0]).is_zero
    assert IPoly([]).degree == -1
    assert P(0, 0, 3).degree == 2


def test_construction_rejects_non_integer():
    with pytest.raises(TypeError):
        IPoly([Fraction(1, 2)])
    with pytest.raises(TypeError):
        IPoly([1.5])


def test_mul_example():
    assert (M + 1) * (M - 1) == P(-1, 0, 1)


def test_evaluate_examples():
    assert (M**4 + 1).evaluate(2) == 17
    assert (M**4 + 1).evaluate(Fraction(1, 2)) == Fraction(17, 16)
    assert P().evaluate(5) == 0


def test_exact_div_examples():
    assert (M**2 - 1).exact_div(M + 1) == M - 1
    assert ((M + 3) * (M**2 + 7)).exact_div(M + 3) == M**2 + 7
    with pytest.raises(ExactDivisionError):
        (M**2 + 1).exact_div(M + 1)
    with pytest.raises(ExactDivisionError):
        P(2, 2).exact_div(P(4))
    with pytest.raises(ZeroDivisionError):
        M.exact_div(P())


def test_int_coercion():
    assert 2 * M + 1 == P(1, 2)
    assert (1 - M) == P(1, -1)
    assert (M + 0) == M
    assert M != 7
    assert P(7) == 7


def test_from_terms():
    p = IPoly.from_terms({21: 12, 1: -3, 0: 4})
    assert p.degree == 21
    assert p[21] == 12 and p[1] == -3 and p[0] == 4 and p[5] == 0


def test_mixed_variable_rejected():
    t = IPoly.gen("t")
    with pytest.raises(ValueError):
        _ = M + t
    # constants mix freely
    assert IPoly.const(3, "t") + M == P(3, 1)


def test_pow():
    assert (M + 1) ** 0 == P(1)
    assert (M + 1) ** 3 == P(1, 3, 3, 1)
    with pytest.raises(ValueError):
        (M + 1) ** -1


# -- content / primitive part ----------------------------------------------

def test_content_examples():
    assert content(P(0, 12, 6)) == 6
    assert primitive_part(P(0, 12, 6)) == P(0, 2, 1)
    assert content(P(0, -4)) == 4
    assert primitive_part(P(0, -4)) == -M
    assert content(IPoly.from_terms({9: 4, 5: 8, 1: 40})) == 4
    assert content(P()) == 0
    with pytest.raises(ValueError):
        primitive_part(P())


# -- gcd --------------------------------------------------------------------

def test_poly_gcd_examples():
    assert poly_gcd(M**2 - 1, M**2 - 2 * M + 1) == M - 1
    assert poly_gcd(M**3, M**2) == M**2
    assert poly_gcd(M**4 - 2, M**4 + 1) == P(1)
    assert poly_gcd(P(), M + 1) == M + 1
    assert poly_gcd(2 * M + 2, P()) == M + 1
    with pytest.raises(ValueError):
        poly_gcd(P(), P())


def test_poly_gcd_sign_and_content():
    # result is primitive with positive leading coefficient
    assert poly_gcd(-2 * M - 2, -4 * M - 4) == M + 1
    assert poly_gcd(P(6), M + 1) == P(1)


def test_poly_gcd_large_inputs_hits_heuristic_path():
    a = (M**37 - 5 * M + 3) * (M**11 + 7) ** 2
    b = (M**41 + M + 9) * (M**11 + 7) ** 2
    assert poly_gcd(a, b) == (M**11 + 7) ** 2
    c = M**60 + 4 * M**13 + 1
    d = M**59 + 11
    assert poly_gcd(c, d) == P(1)


# -- sqrt -------------------------------------------------------------------

def test_poly_sqrt_examples():
    assert poly_sqrt(M**2 + 2 * M + 1) == M + 1
    assert poly_sqrt(4 * M**4 + 4 * M**2 + 1) == 2 * M**2 + 1
    assert poly_sqrt(M**2 + 1) is None
    assert poly_sqrt(P()) == P()
    assert poly_sqrt(P(9)) == P(3)
    assert poly_sqrt(P(8)) is None
    assert poly_sqrt((1 - M) ** 2) == M - 1  # positive leading coefficient
    assert poly_sqrt(M**3) is None
    assert poly_sqrt(-(M**2)) is None
    assert poly_sqrt(M**2) == M


# -- formatting -------------------------------------------------------------

def test_format_poly():
    p = IPoly.from_terms({0: 4, 2: 6, 3: -1})
    assert format_poly(p) == "4 + 6*m^2 - m^3"
    assert format_poly(p, descending=True) == "-m^3 + 6*m^2 + 4"
    assert format_poly(P()) == "0"
    assert format_poly(P(0, -1)) == "-m"


# -- hypothesis: ring and gcd laws ------------------------------------------

coeffs = st.lists(st.integers(min_value=-50, max_value=50), max_size=9)
polys = coeffs.map(lambda cs: IPoly(cs, "m"))
nonzero_polys = polys.filter(lambda p: not p.is_zero)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - b) + b == a


@given(nonzero_polys, nonzero_polys)
def test_exact_div_of_product(a, b):
    assert (a * b).exact_div(b) == a


@given(nonzero_polys, nonzero_polys, nonzero_polys)
@settings(max_examples=60)
def test_gcd_scales_with_common_factor(a, b, c):
    g = poly_gcd(a * c, b * c)
    expected = poly_gcd(a, b) * primitive_part(c)
    if expected.lc < 0:
        expected = -expected
    assert g == expected


@given(nonzero_polys, nonzero_polys)
def test_gcd_divides_both(a, b):
    g = poly_gcd(a, b)
    assert divides(g, primitive_part(a))
    assert divides(g, primitive_part(b))


@given(st.lists(st.integers(min_value=-30, max_value=30), min_size=1, max_size=31))
def test_poly_sqrt_roundtrip(cs):
    q = IPoly(cs, "m")
    if q.is_zero:
        return
    r = poly_sqrt(q * q)
    assert r == q or r == -q
    assert r.lc > 0


@given(polys, polys, st.integers(min_value=-20, max_value=20))
def test_evaluate_is_homomorphism(a, b, x):
    assert (a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x)
    assert (a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x)


big_coeffs = st.lists(st.integers(min_value=-10**12, max_value=10**12),
                      min_size=1, max_size=90)


@given(big_coeffs, big_coeffs)
@settings(max_examples=40)
def test_kronecker_matches_schoolbook(a, b):
    ta, tb = tuple(a), tuple(b)
    if not any(ta) or not any(tb):
        return
    school = [0] * (len(ta) + len(tb) - 1)
    for i, ai in enumerate(ta):
        for j, bj in enumerate(tb):
            school[i + j] += ai * bj
    assert list(_kronecker_mul(ta, tb)) == school


@given(nonzero_polys, nonzero_polys)
@settings(max_examples=40)
def test_prs_agrees_with_poly_gcd(a, b):
    pa, pb = primitive_part(a), primitive_part(b)
    if pa.degree < 1 or pb.degree < 1:
        return
    if pa.degree < pb.degree:
        pa, pb = pb, pa
    g = _prs_gcd(pa, pb)
    if g.lc < 0:
        g = -g
    assert g == poly_gcd(a, b)


# -- rational functions -----------------------------------------------------

def test_ratfn_reduction_examples():
    f = RatFn(M**2 - 1, M - 1)
    assert f.num == M + 1 and f.den == P(1)
    assert RatFn(M, 1) / RatFn(M, 1) == 1
    assert RatFn(1, M) + RatFn(1, M**2) == RatFn(M + 1, M**2)


def test_ratfn_canonical_form():
    a = RatFn(2 * M + 2, 4 * M)
    assert (a.num, a.den) == (M + 1, 2 * M)
    b = RatFn(-(M + 1), -2 * M)
    assert a == b
    c = RatFn(M + 1, -2 * M)
    assert c.num == -(M + 1) and c.den == 2 * M


def test_ratfn_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        RatFn(M, P())
    with pytest.raises(ZeroDivisionError):
        RatFn(1, M).reciprocal() / M * 0 + RatFn(1, 1) / RatFn(0, 1)


def test_ratfn_evaluate():
    f = RatFn(M**2 + 1, M - 1)
    assert f.evaluate(2) == 5
    assert f.evaluate(Fraction(1, 2)) == Fraction(5, 4) / Fraction(-1, 2)
    with pytest.raises(PoleError):
        f.evaluate(1)


def test_ratfn_int_and_fraction_mixing():
    mg = RatFn.gen("m")
    x = 4 * (mg**4 - 2) ** 2 / 9
    assert x.evaluate(1) == Fraction(4, 9)
    y = mg + Fraction(1, 2)
    assert y.evaluate(0) == Fraction(1, 2)
    assert (mg * 0).is_zero
    assert mg**0 == 1


def test_ratfn_pow_negative():
    mg = RatFn.gen("m")
    assert (mg / (mg + 1)) ** -2 == (mg + 1) ** 2 / mg**2


ratfns = st.tuples(polys, nonzero_polys).map(lambda t: RatFn(t[0], t[1]))


@given(ratfns, ratfns)
@settings(max_examples=60)
def test_ratfn_add_matches_naive(a, b):
    fast = a + b
    naive = RatFn(a.num * b.den + b.num * a.den, a.den * b.den)
    assert fast == naive
    assert fast.num == naive.num and fast.den == naive.den


@given(ratfns, ratfns)
@settings(max_examples=60)
def test_ratfn_mul_matches_naive(a, b):
    fast = a * b
    naive = RatFn(a.num * b.num, a.den * b.den)
    assert fast.num == naive.num and fast.den == naive.den


@given(ratfns)
def test_ratfn_canonical_invariants(a):
    assert a.den.lc > 0
    if not a.is_zero:
        assert poly_gcd(a.num, a.den).degree == 0
        from math import gcd as igcd
        assert igcd(content(a.num), content(a.den)) == 1


@given(ratfns, ratfns, ratfns)
@settings(max_examples=40)
def test_ratfn_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    if not b.is_zero:
        assert (a / b) * b == a
