"""Antisymmetrized, h-contracted products of chain traces of Ω.

For Φ = T_(m_1)···T_(m_k) of degree m, the slots 1..m are split into blocks.
Each block contributes a chain trace tr(Ω_{A B̄} ··· Ω_{A' B̄'}), and the
product is alternated over the unbarred and over the barred slot indices.
"""
from __future__ import annotations

import logging
from functools import lru_cache
from itertools import permutations, product
from math import factorial
from typing import Dict, Sequence, Tuple

import numpy as np
from sympy.polys.domains import QQ_I

from src.algebra.linalg import matmul, scale, trace
from src.algebra.scalars import CRat, I, ONE, ZERO, crat, rat, zeros
from src.errors import DegreeTooLarge
from src.forms.altform import sort_sign
from src.tractor.curvature import ExtCurvature, PhiPartition

logger = logging.getLogger(__name__)

Pairs = Tuple[Tuple[int, int], ...]


@lru_cache(maxsize=None)
def signed_permutations(k: int) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
    return tuple((perm, sort_sign(perm)[1]) for perm in permutations(range(k)))


class ContractionEngine:
    def __init__(self, omega: ExtCurvature):
        self.omega = omega
        self.n = omega.n
        self.G = omega.h.hinv
        # tangential index pairs (a, b) with G[a][b] != 0
        self.contracted = [(a, b) for a in range(self.n) for b in range(self.n) if self.G[a, b]]
        self._traces: Dict[Pairs, CRat] = {}
        self._v_traces: Dict[Tuple[int, Pairs], CRat] = {}
        self._products: Dict[Pairs, np.ndarray] = {}

    # ── chain traces ──────────────────────────────────────────────────────────
    def _chain(self, pairs: Pairs) -> np.ndarray:
        if pairs in self._products:
            return self._products[pairs]
        if len(pairs) == 1:
            out = self.omega.matrix(*pairs[0])
        else:
            out = matmul(self._chain(pairs[:-1]), self.omega.matrix(*pairs[-1]))
        self._products[pairs] = out
        return out

    def chain_trace(self, pairs: Pairs) -> CRat:
        """tr(M_{A_1B_1} ··· M_{A_pB_p}) with M_{AB}[γ][μ] = Ω_γ^μ_{AB̄}."""
        if pairs not in self._traces:
            self._traces[pairs] = trace(self._chain(pairs))
        return self._traces[pairs]

    def v_matrix(self, a: int) -> np.ndarray:
        """V_γ^μ_a = -i Ω_γ^μ_{a ∞̄}."""
        return scale(self.omega.matrix(a, self.omega.infinity), -I)

    def v_chain_trace(self, a: int, pairs: Pairs) -> CRat:
        key = (a, pairs)
        if key not in self._v_traces:
            m = self.v_matrix(a)
            if pairs:
                m = matmul(m, self._chain(pairs))
            self._v_traces[key] = trace(m)
        return self._v_traces[key]

    def r_chain(self, p: int) -> np.ndarray:
        """Full tensor R~^(p)[A_1][B_1]...[A_p][B_p]."""
        dim = self.n + 1
        out = zeros((dim,) * (2 * p))
        for idx in np.ndindex(*out.shape):
            pairs = tuple((idx[2 * k], idx[2 * k + 1]) for k in range(p))
            out[idx] = self.chain_trace(pairs)
        return out

    # ── S^Φ ───────────────────────────────────────────────────────────────────
    def _blocks(self, part: PhiPartition, us: Sequence[int], bs: Sequence[int]) -> CRat:
        out = ONE
        for start, m in zip(part.block_starts, part.parts):
            t = self.chain_trace(tuple((us[k], bs[k]) for k in range(start, start + m)))
            if not t:
                return ZERO
            out = out * t
        return out

    def _alternated(self, part: PhiPartition, us: Sequence[int], bs: Sequence[int]) -> CRat:
        m = part.degree
        acc = ZERO
        perms = signed_permutations(m)
        for sigma, s1 in perms:
            u = [us[k] for k in sigma]
            for tau, s2 in perms:
                x = self._blocks(part, u, [bs[k] for k in tau])
                if x:
                    acc = acc + (x if s1 * s2 == 1 else -x)
        return acc

    def _check_degree(self, part: PhiPartition) -> None:
        if part.degree > self.n:
            raise DegreeTooLarge(f"degree {part.degree} exceeds n = {self.n}")

    def s_phi_entry(self, part: PhiPartition, A: int, B: int) -> CRat:
        m = part.degree
        acc = ZERO
        for rest in product(self.contracted, repeat=m - 1):
            us = (A,) + tuple(a for a, _ in rest)
            bs = (B,) + tuple(b for _, b in rest)
            if len(set(us)) < m or len(set(bs)) < m:
                continue
            w = ONE
            for a, b in rest:
                w = w * self.G[a, b]
            y = self._alternated(part, us, bs)
            if y:
                acc = acc + w * y
        return acc * crat(rat(1, factorial(m) ** 2))

    def s_phi_matrix(self, part: PhiPartition) -> np.ndarray:
        """S^Φ_{A B̄} for A, B over the n + 1 directions."""
        self._check_degree(part)
        dim = self.n + 1
        out = zeros((dim, dim))
        for A, B in np.ndindex(dim, dim):
            out[A, B] = self.s_phi_entry(part, A, B)
        return out

    def s_phi_scalar(self, part: PhiPartition, matrix: np.ndarray = None) -> CRat:
        """S^Φ = h^{αβ̄} S^Φ_{αβ̄}."""
        if matrix is None:
            self._check_degree(part)
            return self._contract_tangential(lambda a, b: self.s_phi_entry(part, a, b))
        return self._contract_tangential(lambda a, b: matrix[a, b])

    def _contract_tangential(self, entry) -> CRat:
        acc = ZERO
        for a, b in self.contracted:
            acc = acc + self.G[a, b] * entry(a, b)
        return acc

    def tracefree_part(self, part: PhiPartition, matrix: np.ndarray = None) -> np.ndarray:
        """S^Φ_{αβ̄} - (1/n) S^Φ h_{αβ̄}."""
        if matrix is None:
            matrix = self.s_phi_matrix(part)
        n = self.n
        scalar = self.s_phi_scalar(part, matrix) * crat(rat(1, n))
        return matrix[:n, :n] - self.omega.h.h * scalar

    # ── S′^(p) ────────────────────────────────────────────────────────────────
    def _v_blocks(self, part: PhiPartition, p_index: int, us: Sequence[int], bs: Sequence[int]) -> CRat:
        out = ONE
        for j, (start, m) in enumerate(zip(part.block_starts, part.parts)):
            if j == p_index:
                pairs = tuple((us[k], bs[k]) for k in range(start + 1, start + m))
                t = self.v_chain_trace(us[start], pairs)
            else:
                t = self.chain_trace(tuple((us[k], bs[k]) for k in range(start, start + m)))
            if not t:
                return ZERO
            out = out * t
        return out

    def s_prime(self, p_index: int, part: PhiPartition) -> np.ndarray:
        """S′^(p)_α: block p carries V in front with its direction taken from the free slot.

        The free unbarred index sits at the first slot of block p, which has no
        barred partner. The m unbarred and m - 1 barred slots are alternated
        with weight 1/(m!(m-1)!), and every other slot pair is contracted with h.
        """
        self._check_degree(part)
        m = part.degree
        s0 = part.block_starts[p_index]
        others = [k for k in range(m) if k != s0]
        perms_u = signed_permutations(m)
        perms_b = signed_permutations(m - 1)
        weight = crat(rat(1, factorial(m) * factorial(m - 1)))
        out = zeros((self.n,))
        for alpha in range(self.n):
            acc = ZERO
            for rest in product(self.contracted, repeat=m - 1):
                us = [0] * m
                us[s0] = alpha
                barred = []
                for k, (a, b) in zip(others, rest):
                    us[k] = a
                    barred.append(b)
                if len(set(us)) < m or len(set(barred)) < m - 1:
                    continue
                w = ONE
                for a, b in rest:
                    w = w * self.G[a, b]
                y = ZERO
                for sigma, s1 in perms_u:
                    u = [us[k] for k in sigma]
                    for tau, s2 in perms_b:
                        bs = [0] * m
                        for k, t in zip(others, tau):
                            bs[k] = barred[t]
                        x = self._v_blocks(part, p_index, u, bs)
                        if x:
                            y = y + (x if s1 * s2 == 1 else -x)
                if y:
                    acc = acc + w * y
            out[alpha] = acc * weight
        return out

    def eq_x_rhs(self, part: PhiPartition) -> np.ndarray:
        """(i/m) Σ_p m_p S′^(p)_α."""
        m = part.degree
        total = zeros((self.n,))
        for p_index, mp in enumerate(part.parts):
            total = total + self.s_prime(p_index, part) * crat(mp)
        return scale(total, I * crat(rat(1, m)))


def algebraic_parts(part: PhiPartition, omega: ExtCurvature) -> Dict[str, object]:
    """Algebraic parts of X^Φ_α and I′_Φ for Φ of degree n; derivative terms vanish here."""
    engine = ContractionEngine(omega)
    if part.degree != engine.n:
        raise DegreeTooLarge(f"algebraic parts need degree n = {engine.n}, got {part.degree}")
    inf = omega.infinity
    x_alpha = [engine.s_phi_entry(part, a, inf) for a in range(engine.n)]
    return {
        "X_alpha": x_alpha,
        "I_prime": engine.s_phi_entry(part, inf, inf),
        "nabla_S_phi": QQ_I.zero,
        "laplacian_S_phi": QQ_I.zero,
    }
