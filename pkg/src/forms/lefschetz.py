"""Lefschetz operators L = ω∧·, Λ = L* and H for a (possibly indefinite) hermitian form.

ω = i h_{αβ̄} θ^α ∧ θ^β̄, and Λ is the adjoint of L for the pairing
⟨φ, ψ⟩ = φ_{IJ̄} conj(ψ_{I'J̄'}) h^{II'} h^{J'J}.
"""
from __future__ import annotations

import logging
from itertools import combinations, permutations
from math import factorial
from typing import Dict, List, Tuple

import numpy as np

from src.algebra.linalg import nullspace
from src.algebra.scalars import CRat, I, ONE, ZERO, conj, crat, i_power, random_crat, rat
from src.errors import BidegreeMismatch
from src.forms.altform import AltForm, Index, Key, sort_sign
from src.forms.hermitian import HermitianForm

logger = logging.getLogger(__name__)


def basis_keys(n: int, p: int, q: int) -> List[Key]:
    return [(i, j) for i in combinations(range(n), p) for j in combinations(range(n), q)]


def random_form(rng: np.random.Generator, n: int, p: int, q: int, density: float = 1.0) -> AltForm:
    terms = {}
    for key in basis_keys(n, p, q):
        if density >= 1.0 or rng.random() < density:
            terms[key] = random_crat(rng, bound=4)
    return AltForm(n, terms)


def _minor(g: np.ndarray, rows: Index, cols: Index) -> CRat:
    """det g[rows, cols] by Leibniz expansion (small sizes only)."""
    k = len(rows)
    if k == 0:
        return ONE
    acc = ZERO
    for perm in permutations(range(k)):
        _, s = sort_sign(perm)
        term = ONE
        for a in range(k):
            x = g[rows[a], cols[perm[a]]]
            if not x:
                term = ZERO
                break
            term = term * x
        if term:
            acc = acc + (term if s == 1 else -term)
    return acc


class Lefschetz:
    """sl2 action on forms of one hermitian space."""

    def __init__(self, h: HermitianForm):
        self.h = h
        self.n = h.n
        self.G = h.hinv
        self.omega = AltForm(self.n, {
            ((a,), (b,)): I * h.h[a, b] for a in range(self.n) for b in range(self.n) if h.h[a, b]
        })

    def L(self, phi: AltForm, times: int = 1) -> AltForm:
        for _ in range(times):
            phi = self.omega.wedge(phi)
        return phi

    def Lambda(self, phi: AltForm, times: int = 1) -> AltForm:
        for _ in range(times):
            phi = self._lambda_once(phi)
        return phi

    def _lambda_once(self, phi: AltForm) -> AltForm:
        G = self.G
        out: Dict[Key, CRat] = {}
        for (i, j), c in phi.items():
            p = len(i)
            if p == 0 or not j:
                continue
            pref = -I * c if p % 2 else I * c  # -i (-1)^(p-1) c
            for k, a in enumerate(i):
                for l, b in enumerate(j):
                    g = G[a, b]
                    if not g:
                        continue
                    key = (i[:k] + i[k + 1:], j[:l] + j[l + 1:])
                    v = pref * g
                    out[key] = out.get(key, ZERO) + (-v if (k + l) % 2 else v)
        return AltForm(phi.n, out)

    def H(self, phi: AltForm) -> AltForm:
        out = {k: c * (self.n - len(k[0]) - len(k[1])) for k, c in phi.items()}
        return AltForm(phi.n, out)

    def inner(self, phi: AltForm, psi: AltForm) -> CRat:
        """Hermitian pairing, antilinear in psi; only equal bidegrees pair."""
        G = self.G
        acc = ZERO
        for (i, j), c in phi.items():
            for (i2, j2), d in psi.items():
                if len(i) != len(i2) or len(j) != len(j2):
                    continue
                a = _minor(G, i, i2)
                if not a:
                    continue
                b = _minor(G, j2, j)
                if not b:
                    continue
                acc = acc + c * conj(d) * a * b
        return acc

    # ── primitive forms ───────────────────────────────────────────────────────
    def lambda_matrix(self, p: int, q: int) -> Tuple[List[List[CRat]], List[Key]]:
        src = basis_keys(self.n, p, q)
        dst = basis_keys(self.n, p - 1, q - 1) if p > 0 and q > 0 else []
        rows = [[ZERO] * len(src) for _ in dst]
        index = {k: r for r, k in enumerate(dst)}
        for col, key in enumerate(src):
            image = self._lambda_once(AltForm(self.n, {key: ONE}))
            for k, c in image.items():
                rows[index[k]][col] = c
        return rows, src

    def primitive_basis(self, p: int, q: int) -> List[AltForm]:
        rows, src = self.lambda_matrix(p, q)
        basis = nullspace(rows, len(src))
        return [AltForm(self.n, dict(zip(src, vec))) for vec in basis]

    def random_primitive(self, rng: np.random.Generator, p: int, q: int) -> AltForm:
        out = AltForm(self.n)
        for b in self.primitive_basis(p, q):
            out = out + b.scale(random_crat(rng, bound=3))
        return out


# ───────────────────────────────────────────────────────────────────────────────
# Closed-form identities
# ───────────────────────────────────────────────────────────────────────────────
def _q(x) -> CRat:
    return crat(x)


def lambda_L_power(lef: Lefschetz, phi: AltForm, m: int) -> bool:
    """[Λ, L^m] φ = m (n - p - q - m + 1) L^(m-1) φ."""
    p, q = phi.bidegree()
    lhs = lef.Lambda(lef.L(phi, m)) - lef.L(lef.Lambda(phi), m)
    return lhs == lef.L(phi, m - 1).scale(_q(m * (lef.n - p - q - m + 1)))


def lambda_power_L(lef: Lefschetz, phi: AltForm, m: int) -> bool:
    """[Λ^m, L] φ = m (n - p - q + m - 1) Λ^(m-1) φ."""
    p, q = phi.bidegree()
    lhs = lef.Lambda(lef.L(phi), m) - lef.L(lef.Lambda(phi, m))
    return lhs == lef.Lambda(phi, m - 1).scale(_q(m * (lef.n - p - q + m - 1)))


def lambda_k_L_m_primitive(lef: Lefschetz, phi: AltForm, k: int, m: int) -> bool:
    """Λ^k L^m φ = m!/(m-k)! Π_{j=1}^k (n - p - q - m + j) L^(m-k) φ for primitive φ, k ≤ m."""
    p, q = phi.bidegree()
    coeff = factorial(m) // factorial(m - k)
    for j in range(1, k + 1):
        coeff *= lef.n - p - q - m + j
    return lef.Lambda(lef.L(phi, m), k) == lef.L(phi, m - k).scale(_q(coeff))


def sl2_relations(lef: Lefschetz, phi: AltForm) -> bool:
    """[Λ, L] = H, [H, L] = -2L, [H, Λ] = 2Λ."""
    L, Lam, H = lef.L, lef.Lambda, lef.H
    return (
        Lam(L(phi)) - L(Lam(phi)) == H(phi)
        and H(L(phi)) - L(H(phi)) == L(phi).scale(_q(-2))
        and H(Lam(phi)) - Lam(H(phi)) == Lam(phi).scale(_q(2))
    )


def adjointness(lef: Lefschetz, phi: AltForm, psi: AltForm) -> bool:
    """⟨Lφ, ψ⟩ = ⟨φ, Λψ⟩."""
    return not (lef.inner(lef.L(phi), psi) - lef.inner(phi, lef.Lambda(psi)))


def _expect(phi: AltForm, p: int, q: int) -> None:
    if phi.bidegree() != (p, q):
        raise BidegreeMismatch(f"expected bidegree ({p}, {q}), got {phi.bidegree()}")


def diff_form_identity(lef: Lefschetz, case: str, phi: AltForm) -> bool:
    """Top-degree reconstruction identities (cases i-v)."""
    n = lef.n
    L, Lam = lef.L, lef.Lambda
    fn = factorial
    if case == "i":
        _expect(phi, n, n)
        return phi == L(Lam(phi, n), n).scale(_q(rat(1, fn(n) ** 2)))
    if case == "ii":
        _expect(phi, n, n - 1)
        return phi == L(Lam(phi, n - 1), n - 1).scale(_q(rat(1, fn(n - 1) ** 2)))
    if case == "iii":
        _expect(phi, n - 1, n - 1)
        return L(phi) == L(Lam(phi, n - 1), n).scale(_q(rat(1, fn(n) * fn(n - 1))))
    if case == "iv":
        m, m2 = phi.bidegree()
        if m != m2 or not 0 <= m <= n - 1 or n < 2:
            raise BidegreeMismatch(f"case iv needs bidegree (m, m) with m ≤ n - 1 and n ≥ 2, got {(m, m2)}")
        lhs = Lam(L(phi, n - m - 1), n - 2)
        rhs = L(Lam(phi, m)).scale(_q(n - m - 1))
        if m > 0:
            rhs = rhs + Lam(phi, m - 1).scale(_q(m))
        return lhs == rhs.scale(_q(rat(fn(n - 2) * fn(n - m - 1), fn(m))))
    if case == "v":
        m, m1 = phi.bidegree()
        if m1 != m - 1 or not 2 <= m <= n - 1 or n < 3:
            raise BidegreeMismatch(f"case v needs bidegree (m, m-1) with 2 ≤ m ≤ n - 1 and n ≥ 3, got {(m, m1)}")
        lhs = Lam(L(phi, n - m - 1), n - 3)
        rhs = Lam(phi, m - 2).scale(_q(m - 1)) + L(Lam(phi, m - 1)).scale(_q(n - m - 1))
        return lhs == rhs.scale(_q(rat(fn(n - 3) * fn(n - m - 1), fn(m - 1))))
    raise ValueError(f"unknown case {case!r}")


def lambda_top_formula(lef: Lefschetz, phi: AltForm) -> CRat:
    """Λ^n φ for φ of bidegree (n, n), written out in components.

    Λ^n φ = (-i)^n (-1)^(n(n-1)/2) n! det(G) c,
    with c the stored coefficient on the full index sets.
    """
    n = lef.n
    _expect(phi, n, n)
    full = tuple(range(n))
    c = phi.coefficient((full, full))
    det_g = _minor(lef.G, full, full)
    coeff = _minus_i_power(n)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return coeff * c * det_g * _q(factorial(n) * sign)


def _minus_i_power(k: int) -> CRat:
    return i_power(3 * k)


def lambda_n_minus_1_formula(lef: Lefschetz, phi: AltForm) -> AltForm:
    """Λ^(n-1) φ for φ of bidegree (n, n-1): the (1, 0)-form with components

    (Λ^(n-1) φ)_α = (-i)^(n-1) (-1)^((n-1)(n-2)/2) Σ G[a_1][b_1]···G[a_(n-1)][b_(n-1)] φ_{α a_1..a_(n-1) b̄_1..b̄_(n-1)}
    summed over all index sequences.
    """
    n = lef.n
    _expect(phi, n, n - 1)
    G = lef.G
    k = n - 1
    pref = _minus_i_power(k) * _q(-1 if (k * (k - 1) // 2) % 2 else 1)
    out: Dict[Key, CRat] = {}
    for alpha in range(n):
        acc = ZERO
        for a_seq in permutations(range(n), k):
            if alpha in a_seq:
                continue
            for b_seq in permutations(range(n), k):
                w = ONE
                for a, b in zip(a_seq, b_seq):
                    g = G[a, b]
                    if not g:
                        w = ZERO
                        break
                    w = w * g
                if not w:
                    continue
                acc = acc + w * phi.component((alpha,) + a_seq, b_seq)
        if acc:
            out[((alpha,), ())] = pref * acc
    return AltForm(n, out)
