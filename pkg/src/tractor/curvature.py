"""Tractor curvature data (S, V, U) and the assembled extended curvature Ω.

Index conventions, all 0-based:
  S[a][b][c][d] = S_{a b̄ c d̄}, V[a][b][c] = V_{a b̄ c}, U[a][b] = U_{a b̄}.
The extra direction ∞ has index n. Ω[γ][μ][A][B] = Ω_γ^μ_{A B̄}, row γ is the source.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np
from sympy.polys.domains import QQ_I

from src.algebra.scalars import CRat, I, as_crat, conj, conj_array, crat, random_tensor, rat, zeros
from src.errors import InvalidDimension
from src.forms.hermitian import HermitianForm, random_hermitian

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CurvatureData:
    h: HermitianForm
    S: np.ndarray
    V: np.ndarray
    U: np.ndarray

    @property
    def n(self) -> int:
        return self.h.n

    @property
    def G(self) -> np.ndarray:
        return self.h.hinv

    def ricci(self) -> np.ndarray:
        """P[c][d] = Σ G[a][b] S[a][b][c][d]."""
        return np.einsum("ab,abcd->cd", self.G, self.S)

    def symmetry_defects(self, chern_moser: bool = False) -> List[str]:
        n, S, V, U = self.n, self.S, self.V, self.U
        out = []
        for a, b, c, d in np.ndindex(n, n, n, n):
            if conj(S[a, b, c, d]) - S[b, a, d, c]:
                out.append(f"S not hermitian at {(a, b, c, d)}")
            if S[a, b, c, d] - S[c, b, a, d] or S[a, b, c, d] - S[a, d, c, b]:
                out.append(f"S not pair-symmetric at {(a, b, c, d)}")
        for a, b, c in np.ndindex(n, n, n):
            if V[a, b, c] - V[c, b, a]:
                out.append(f"V not symmetric at {(a, b, c)}")
        for a, b in np.ndindex(n, n):
            if conj(U[a, b]) - U[b, a]:
                out.append(f"U not hermitian at {(a, b)}")
        if chern_moser and any(self.ricci().flat):
            out.append("S is not trace-free")
        return out


def _chern_moser_projection(S: np.ndarray, h: HermitianForm) -> np.ndarray:
    """Trace-free part of a hermitian pair-symmetric S."""
    n, H = h.n, h.h
    P = CurvatureData(h, S, zeros((n, n, n)), zeros((n, n))).ricci()
    tr = as_crat(np.einsum("cd,cd->", h.hinv, P))
    k1 = crat(rat(1, n + 2))
    k2 = tr * crat(rat(1, (n + 1) * (n + 2)))
    corr = (np.einsum("ab,cd->abcd", P, H) + np.einsum("cb,ad->abcd", P, H)
            + np.einsum("ad,cb->abcd", P, H) + np.einsum("cd,ab->abcd", P, H))
    pairs = np.einsum("ab,cd->abcd", H, H) + np.einsum("ad,cb->abcd", H, H)
    return S - corr * k1 + pairs * k2


def random_curvature(seed: int, n: int, chern_moser_tracefree: bool = False, zero_v: bool = False,
                     zero_u: bool = False, dense_metric: bool = False) -> CurvatureData:
    """Random (S, V, U) with all required symmetries, reproducible from seed."""
    if n < 2:
        raise InvalidDimension(f"tractor data needs n >= 2, got {n}")
    rng = np.random.default_rng(seed)
    h = random_hermitian(rng, n, definite=True, diagonal=not dense_metric)

    R = random_tensor(rng, (n, n, n, n))
    S1 = zeros((n, n, n, n))
    quarter = crat(rat(1, 4))
    for a, b, c, d in np.ndindex(n, n, n, n):
        S1[a, b, c, d] = (R[a, b, c, d] + R[c, b, a, d] + R[a, d, c, b] + R[c, d, a, b]) * quarter
    half = crat(rat(1, 2))
    S = zeros((n, n, n, n))
    for a, b, c, d in np.ndindex(n, n, n, n):
        S[a, b, c, d] = (S1[a, b, c, d] + conj(S1[b, a, d, c])) * half
    if chern_moser_tracefree:
        S = _chern_moser_projection(S, h)

    V = zeros((n, n, n))
    if not zero_v:
        W = random_tensor(rng, (n, n, n))
        for a, b, c in np.ndindex(n, n, n):
            V[a, b, c] = (W[a, b, c] + W[c, b, a]) * half
    U = zeros((n, n))
    if not zero_u:
        X = random_tensor(rng, (n, n))
        for a, b in np.ndindex(n, n):
            U[a, b] = X[a, b] + conj(X[b, a])
    data = CurvatureData(h, S, V, U)
    logger.debug("random_curvature(seed=%s, n=%s, tracefree=%s)", seed, n, chern_moser_tracefree)
    return data


@dataclass(frozen=True)
class PhiPartition:
    """Φ = T_(m_1) ··· T_(m_k); the order of the parts does not change Φ."""
    parts: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(m) for m in self.parts))
        if not self.parts or any(m < 1 for m in self.parts):
            raise InvalidDimension(f"partition parts must be positive, got {self.parts}")

    @property
    def degree(self) -> int:
        return sum(self.parts)

    @property
    def block_starts(self) -> Tuple[int, ...]:
        out, s = [], 0
        for m in self.parts:
            out.append(s)
            s += m
        return tuple(out)

    @classmethod
    def all_of(cls, m: int) -> List["PhiPartition"]:
        from src.algebra.invariants import partitions_of

        return [cls(p) for p in partitions_of(m)]

    def __str__(self) -> str:
        return "*".join(f"T{m}" for m in self.parts)


class ExtCurvature:
    """Ω_γ^μ_{AB̄} for γ, μ tangential and A, B over the n + 1 directions."""

    def __init__(self, n: int, omega: np.ndarray, h: HermitianForm):
        self.n = n
        self.omega = omega
        self.h = h

    @property
    def infinity(self) -> int:
        return self.n

    def matrix(self, A: int, B: int) -> np.ndarray:
        return self.omega[:, :, A, B]

    @classmethod
    def assemble(cls, data: CurvatureData, u_scale: CRat = QQ_I.one) -> "ExtCurvature":
        n, G = data.n, data.G
        inf = n
        lowered = zeros((n, n, n + 1, n + 1))
        lowered[:, :, :n, :n] = data.S
        lowered[:, :, :n, inf] = data.V * I
        # ∞β̄ block: hermitian dual of the α∞̄ block
        lowered[:, :, inf, :n] = conj_array(data.V).transpose(1, 0, 2) * -I
        lowered[:, :, inf, inf] = data.U * as_crat(u_scale)
        omega = np.einsum("mv,gvAB->gmAB", G, lowered)
        return cls(n, omega, data.h)
