import pytest
from sympy.polys.domains import QQ

from src.algebra.polynomials import random_poly
from src.algebra.symmetric import (
    SigmaPoly,
    degree_ring,
    elementary,
    evaluate,
    expand,
    is_symmetric,
    leading_sigma_part,
    sigma_decompose,
    sigma_ring,
)
from src.errors import NotSymmetric


def test_elementary_in_three_variables():
    d1, d2, d3 = degree_ring(3).gens
    e = elementary(3)
    assert e[0] == d1 + d2 + d3
    assert e[1] == d1 * d2 + d1 * d3 + d2 * d3
    assert e[2] == d1 * d2 * d3


def test_power_sum_decomposes():
    d1, d2 = degree_ring(2).gens
    s = sigma_decompose(d1 ** 2 + d2 ** 2)
    s1, s2 = SigmaPoly.sigma(2, 1), SigmaPoly.sigma(2, 2)
    assert s.poly == (s1 * s1 - s2 * 2).poly
    assert str(s) == "-2*sigma2 + sigma1^2"


def test_non_symmetric_input_is_rejected():
    d1, d2 = degree_ring(2).gens
    assert not is_symmetric(d1 ** 2 + d2)
    with pytest.raises(NotSymmetric):
        sigma_decompose(d1 ** 2 + d2)


def test_sigma_roundtrip(rng):
    for r in range(1, 5):
        s = SigmaPoly(r, random_poly(rng, sigma_ring(r), max_degree=3, terms=4))
        assert sigma_decompose(expand(s)).poly == s.poly


def test_evaluate_at_degrees():
    s1, s3 = SigmaPoly.sigma(3, 1), SigmaPoly.sigma(3, 3)
    s = s1 * s3 + SigmaPoly.constant(3, 5)
    assert evaluate(s, [3, 3, 3]) == QQ(9 * 27 + 5)
    with pytest.raises(ValueError):
        evaluate(s, [3, 3])


def test_leading_sigma_part_keeps_fewest_factors():
    s1, s2, s3 = (SigmaPoly.sigma(3, j) for j in (1, 2, 3))
    s = s2 * s3 * 4 + s1 * s1 * s3 - s1 + SigmaPoly.constant(3, 2)
    assert leading_sigma_part(s, 5).poly == (s2 * s3 * 4).poly
    assert leading_sigma_part(s, 7).is_zero()
