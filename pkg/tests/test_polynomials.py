from fractions import Fraction

import pytest

from snlie.polynomials import (Poly, mono_degree, mono_div, mono_mul,
                               poly_det, poly_parse, random_poly)


def test_monomial_helpers():
    assert mono_mul((1, 0, 2), (0, 1, 1)) == (1, 1, 3)
    assert mono_div((1, 1, 3), (0, 1, 1)) == (1, 0, 2)
    assert mono_div((1, 0, 0), (0, 1, 0)) is None
    assert mono_degree((2, 0, 1)) == 3


def test_parse_round_trip():
    p = poly_parse("3/2*x1^2*x2 - x3 + 5", 3)
    assert p.terms[(2, 1, 0)] == Fraction(3, 2)
    assert p.terms[(0, 0, 1)] == Fraction(-1)
    assert p.terms[(0, 0, 0)] == Fraction(5)
    assert poly_parse(str(p), 3) == p


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        poly_parse("x4", 3)
    with pytest.raises(ValueError):
        poly_parse("x1 x2", 3)
    with pytest.raises(ValueError):
        poly_parse("", 3)


def test_arithmetic_and_derivative():
    x1 = poly_parse("x1", 2)
    x2 = poly_parse("x2", 2)
    p = (x1 + x2) * (x1 - x2)
    assert p == poly_parse("x1^2 - x2^2", 2)
    assert p.derivative(1) == poly_parse("2*x1", 2)
    assert p.derivative(2) == poly_parse("-2*x2", 2)


def test_poly_det_matches_expansion():
    a = poly_parse("x1", 2)
    b = poly_parse("x2", 2)
    c = poly_parse("1", 2)
    d = poly_parse("x1*x2", 2)
    assert poly_det([[a, b], [c, d]]) == a * d - b * c


def test_random_poly_is_seed_deterministic():
    import random
    p1 = random_poly(random.Random(5), 3, 4)
    p2 = random_poly(random.Random(5), 3, 4)
    assert p1 == p2 and not p1.is_zero()
