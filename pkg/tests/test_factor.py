"""Display factorization: content, square-free split, linear-factor
extraction, and exact round-trips."""

import random
from fractions import Fraction

import pytest

from lda import MultiPoly, RatFun, factor_output, parse_coefficient
from lda.factor import _factor_poly

from util import mk_table, PINNED_MASTER_COEFF


@pytest.fixture
def table():
    return mk_table()


def test_denominator_fragment(table):
    # q2^3*k^2 + q2^3*k  ->  q2^3 * k * (k+1)
    r = parse_coefficient("q2^3*k^2 + q2^3*k", table)
    f = factor_output(r)
    assert f.unit == 1
    rendered = {(str_poly(p), e) for p, e in f.num_factors}
    assert rendered == {("q2", 3), ("k", 1), ("k + 1", 1)}
    assert f.expand() == r


def str_poly(p):
    from lda.render import poly_str
    return poly_str(p)


def test_expand_then_factor_roundtrip(table):
    r = parse_coefficient("(2*n+4-d+2*k)*(2*n+2-d+2*k)", table)
    f = factor_output(r)
    assert len(f.num_factors) == 2
    assert all(e == 1 for _, e in f.num_factors)
    for p, _ in f.num_factors:
        assert p.total_degree() == 1
    assert f.expand() == r


def test_irreducible_quadratic_left_alone():
    t = mk_table(("x", "y"), ())
    r = parse_coefficient("x^2 + y^2", t)
    f = factor_output(r)
    assert len(f.num_factors) == 1
    assert f.num_factors[0][1] == 1
    assert f.num_factors[0][0] == r.num


def test_square_free_split(table):
    r = parse_coefficient("(k+1)^2*(n-2)", table)
    f = factor_output(r)
    by_exp = {str_poly(p): e for p, e in f.num_factors}
    assert by_exp == {"k + 1": 2, "n - 2": 1}
    assert f.expand() == r


def test_unit_and_denominator(table):
    # canonical factors carry a positive leading coefficient, so the sign
    # of (d-2*k-2) moves into the unit times the flipped factor
    r = parse_coefficient("-6*(d-2*k-2)/(4*k*(k+1))", table)
    f = factor_output(r)
    assert f.unit == Fraction(3, 2)
    assert {str_poly(p) for p, _ in f.num_factors} == {"2*k - d + 2"}
    assert f.expand() == r


def test_univariate_integer_factors():
    t = mk_table(("x",), ())
    r = parse_coefficient("6*x^2 + 5*x + 1", t)
    f = factor_output(r)
    assert {str_poly(p) for p, _ in f.num_factors} == {"2*x + 1", "3*x + 1"}


def test_pinned_reduction_coefficient_fully_splits(table):
    r = parse_coefficient(PINNED_MASTER_COEFF, table)
    f = factor_output(r)
    assert all(p.total_degree() == 1 for p, _ in f.num_factors)
    assert all(p.total_degree() == 1 for p, _ in f.den_factors)
    assert sum(e for _, e in f.num_factors) == 5
    assert sum(e for _, e in f.den_factors) == 8  # q2^3 counts three
    assert f.expand() == r


def test_zero_and_constant(table):
    zero = factor_output(RatFun.from_int(table, 0))
    assert zero.unit == 0 and not zero.num_factors
    five = factor_output(RatFun.from_int(table, 5) / RatFun.from_int(table, 3))
    assert five.unit == Fraction(5, 3)
    assert not five.num_factors and not five.den_factors


def test_random_products_roundtrip():
    t = mk_table(("x", "y"), ("c",))
    rng = random.Random(42)
    names = t.symbols
    for _ in range(120):
        poly = MultiPoly.const(t, rng.choice([-3, -2, -1, 1, 2, 3]))
        for _ in range(rng.randint(1, 3)):
            mono = [0, 0, 0]
            for i in range(3):
                if rng.random() < 0.5:
                    mono[i] = 1
            items = [(tuple(mono), rng.randint(1, 3))]
            items.append(((0, 0, 0), rng.randint(-4, 4)))
            factor = MultiPoly.from_terms(t, items)
            if factor.is_zero():
                continue
            poly = poly * factor
        if poly.is_zero() or poly.is_const():
            continue
        unit, factors = _factor_poly(poly)
        back = MultiPoly.const(t, unit.numerator)
        for p, e in factors:
            back = back * p ** e
        assert unit.denominator == 1
        assert back == poly
