from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from sympy.polys.domains import QQ_I

from src.algebra.linalg import conj_transpose, determinant, identity, inverse, matmul
from src.algebra.scalars import conj, crat, random_crat, rat, zeros
from src.errors import DegenerateForm


@dataclass(frozen=True)
class HermitianForm:
    """h[α][β] = h_{αβ̄}; hinv[α][β] = h^{αβ̄}, so Σ_β hinv[α][β]·h[γ][β] = δ_αγ."""
    h: np.ndarray
    hinv: np.ndarray = field(repr=False)

    @property
    def n(self) -> int:
        return self.h.shape[0]

    @classmethod
    def from_matrix(cls, h: np.ndarray) -> "HermitianForm":
        n = h.shape[0]
        for a in range(n):
            for b in range(n):
                if conj(h[a, b]) - h[b, a]:
                    raise DegenerateForm(f"h is not hermitian at ({a}, {b})")
        if not determinant(h):
            raise DegenerateForm("h is degenerate")
        return cls(h, inverse(h.T.copy()))

    @classmethod
    def identity(cls, n: int) -> "HermitianForm":
        return cls.from_matrix(identity(n))

    def is_diagonal(self) -> bool:
        return all(not self.h[a, b] for a in range(self.n) for b in range(self.n) if a != b)


def random_hermitian(rng: np.random.Generator, n: int, definite: bool = True,
                     diagonal: bool = False) -> HermitianForm:
    if diagonal:
        h = zeros((n, n))
        for a in range(n):
            h[a, a] = crat(rat(int(rng.integers(1, 5)), int(rng.integers(1, 4))))
        if not definite:
            h[n - 1, n - 1] = -h[n - 1, n - 1]
        return HermitianForm.from_matrix(h)
    while True:
        a = zeros((n, n))
        for idx in np.ndindex(n, n):
            a[idx] = random_crat(rng, bound=3)
        if definite:
            h = matmul(a, conj_transpose(a)) + identity(n)
        else:
            if not determinant(a):
                continue
            d = identity(n)
            d[0, 0] = -QQ_I.one
            h = matmul(matmul(conj_transpose(a), d), a)
        if determinant(h):
            return HermitianForm.from_matrix(h)
