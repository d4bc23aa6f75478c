import numpy as np
from sympy.polys.domains import QQ, QQ_I

from src.algebra import linalg
from src.algebra.scalars import (
    I,
    ONE,
    conj,
    conj_array,
    crat,
    format_crat,
    format_rat,
    i_power,
    rat,
    random_tensor,
    tensors_equal,
    zeros,
)


def test_format_rat_and_crat():
    assert format_rat(rat(-3, 6)) == "-1/2"
    assert format_rat(rat(4)) == "4"
    assert format_crat(crat(0, 1)) == "I"
    assert format_crat(crat(0, -2)) == "-2*I"
    assert format_crat(crat(rat(1, 2), -1)) == "1/2 - I"
    assert format_crat(crat(3)) == "3"


def test_i_power_cycles():
    assert i_power(0) == ONE
    assert i_power(1) == I
    assert i_power(2) == -ONE
    assert i_power(7) == -I
    # (-i)^k == i^(3k)
    assert i_power(3) == -I


def test_conj_is_involution():
    z = crat(rat(2, 3), rat(-5, 7))
    assert conj(conj(z)) == z
    assert (z * conj(z)).y == 0


def test_inverse_and_determinant():
    a = zeros((2, 2))
    a[0, 0], a[0, 1], a[1, 0], a[1, 1] = crat(2), I, -I, crat(3)
    assert linalg.determinant(a) == crat(5)
    prod = linalg.matmul(a, linalg.inverse(a))
    assert tensors_equal(prod, linalg.identity(2))


def test_nullspace_of_rank_one_rows():
    rows = [[crat(1), crat(1), crat(0)]]
    basis = linalg.nullspace(rows, 3)
    assert len(basis) == 2
    for vec in basis:
        assert not (vec[0] + vec[1])


def test_nullspace_without_rows_is_identity():
    basis = linalg.nullspace([], 2)
    assert basis == [[QQ_I.one, QQ_I.zero], [QQ_I.zero, QQ_I.one]]


def test_scale_and_trace():
    a = linalg.identity(3)
    assert linalg.trace(linalg.scale(a, I)) == crat(0, 3)
    assert linalg.trace(linalg.conj_transpose(linalg.scale(a, I))) == crat(0, -3)


def test_tensors_equal_checks_shape():
    assert not tensors_equal(zeros((2,)), zeros((3,)))
    assert tensors_equal(np.full((2,), QQ_I.zero, dtype=object), zeros((2,)))
    assert QQ(1, 2) == rat(1, 2)


def test_products_stay_exact(rng):
    a, b = random_tensor(rng, (3, 2)), random_tensor(rng, (2, 3))
    prod = linalg.matmul(a, b)
    assert prod[1, 2] == a[1, 0] * b[0, 2] + a[1, 1] * b[1, 2]
    assert isinstance(linalg.trace(prod), type(I))
    h = linalg.conj_transpose(a)
    assert h.shape == (2, 3) and h[1, 2] == conj(a[2, 1])
    assert tensors_equal(conj_array(conj_array(a)), a)
