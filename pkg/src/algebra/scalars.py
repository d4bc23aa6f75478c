"""Exact scalars: rationals (QQ) and Gaussian rationals (QQ_I)."""
from __future__ import annotations

from typing import Any, Tuple

import numpy as np
from sympy.polys.domains import QQ, QQ_I
from sympy.polys.domains.gaussiandomains import GaussianRational

Rat = Any
CRat = GaussianRational

I = QQ_I(0, 1)
ZERO = QQ_I.zero
ONE = QQ_I.one


def rat(p: int, q: int = 1) -> Rat:
    return QQ(int(p), int(q))


def crat(re: Any = 0, im: Any = 0) -> CRat:
    return QQ_I(QQ.convert(re), QQ.convert(im))


def as_crat(value: Any) -> CRat:
    if isinstance(value, np.ndarray):
        value = value.item()
    if isinstance(value, GaussianRational):
        return value
    return QQ_I.convert(value)


def conj(z: CRat) -> CRat:
    return QQ_I(z.x, -z.y)


_conj = np.frompyfunc(conj, 1, 1)


def conj_array(a: np.ndarray) -> np.ndarray:
    """Entrywise conjugate of an object array."""
    return _conj(a).astype(object)


def sign(parity: int) -> int:
    return -1 if parity % 2 else 1


def i_power(k: int) -> CRat:
    return (ONE, I, -ONE, -I)[k % 4]


def zeros(shape: Tuple[int, ...]) -> np.ndarray:
    return np.full(shape, ZERO, dtype=object)


def random_rat(rng: np.random.Generator, bound: int = 5, max_den: int = 3) -> Rat:
    return rat(int(rng.integers(-bound, bound + 1)), int(rng.integers(1, max_den + 1)))


def random_crat(rng: np.random.Generator, bound: int = 5, max_den: int = 3) -> CRat:
    return QQ_I(random_rat(rng, bound, max_den), random_rat(rng, bound, max_den))


def random_tensor(rng: np.random.Generator, shape: Tuple[int, ...], bound: int = 5) -> np.ndarray:
    out = zeros(shape)
    for idx in np.ndindex(*shape):
        out[idx] = random_crat(rng, bound)
    return out


def format_rat(q: Rat) -> str:
    num, den = int(q.numerator), int(q.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


def format_crat(z: CRat) -> str:
    z = as_crat(z)
    if not z.y:
        return format_rat(z.x)
    im = format_rat(abs(z.y))
    im = "I" if im == "1" else f"{im}*I"
    if not z.x:
        return im if z.y > 0 else f"-{im}"
    return f"{format_rat(z.x)} {'+' if z.y > 0 else '-'} {im}"


def tensors_equal(a: np.ndarray, b: np.ndarray) -> bool:
    if a.shape != b.shape:
        return False
    return all(not (x - y) for x, y in zip(a.flat, b.flat))
