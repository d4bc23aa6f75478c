"""Exact linear algebra over QQ_I: numpy products on object arrays, DomainMatrix for solves."""
from __future__ import annotations

from typing import List, Sequence

import numpy as np
from sympy.polys.domains import QQ_I
from sympy.polys.matrices import DomainMatrix

from src.algebra.scalars import CRat, as_crat, conj_array, zeros


def to_domain_matrix(rows: Sequence[Sequence]) -> DomainMatrix:
    data = [[as_crat(x) for x in row] for row in rows]
    ncols = len(data[0]) if data else 0
    return DomainMatrix(data, (len(data), ncols), QQ_I)


def from_domain_matrix(dm: DomainMatrix) -> np.ndarray:
    mat = dm.to_Matrix()
    out = zeros((mat.rows, mat.cols))
    for i in range(mat.rows):
        for j in range(mat.cols):
            out[i, j] = QQ_I.from_sympy(mat[i, j])
    return out


def inverse(a: np.ndarray) -> np.ndarray:
    return from_domain_matrix(to_domain_matrix(a.tolist()).inv())


def determinant(a: np.ndarray) -> CRat:
    if a.shape[0] == 0:
        return QQ_I.one
    return as_crat(to_domain_matrix(a.tolist()).det())


def nullspace(rows: Sequence[Sequence], ncols: int) -> List[List[CRat]]:
    """Basis vectors of {v : rows·v = 0}."""
    if not rows:
        return [[QQ_I.one if i == j else QQ_I.zero for i in range(ncols)] for j in range(ncols)]
    basis = from_domain_matrix(to_domain_matrix(rows).nullspace())
    return [list(basis[k, :]) for k in range(basis.shape[0])]


def identity(n: int) -> np.ndarray:
    out = zeros((n, n))
    np.fill_diagonal(out, QQ_I.one)
    return out


def conj_transpose(a: np.ndarray) -> np.ndarray:
    return conj_array(a).T.copy()


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b


def trace(a: np.ndarray) -> CRat:
    return as_crat(np.trace(a)) if a.size else QQ_I.zero


def scale(a: np.ndarray, c) -> np.ndarray:
    return a * as_crat(c)
