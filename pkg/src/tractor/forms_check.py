"""Φ(Ω) as an honest differential form, compared against the contracted tensors."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from math import factorial
from typing import List

import numpy as np

from src.algebra.scalars import CRat, I, ONE, ZERO, conj, crat, i_power, rat
from src.forms.altform import AltForm
from src.forms.extended import ExtendedForm
from src.forms.lefschetz import Lefschetz
from src.tractor.contraction import ContractionEngine
from src.tractor.curvature import CurvatureData, ExtCurvature, PhiPartition

logger = logging.getLogger(__name__)

FormMatrix = List[List[object]]


def _matmul_forms(a: FormMatrix, b: FormMatrix, zero) -> FormMatrix:
    n = len(a)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = zero
            for k in range(n):
                acc = acc + a[i][k].wedge(b[k][j])
            row.append(acc)
        out.append(row)
    return out


def _phi_of(matrix: FormMatrix, part: PhiPartition, one, zero):
    """Π_j T_(m_j)(Ω) with T_m(Ω) = i^m tr(Ω^m)."""
    n = len(matrix)
    powers = {1: matrix}
    for m in range(2, max(part.parts) + 1):
        powers[m] = _matmul_forms(powers[m - 1], matrix, zero)
    out = one
    for m in part.parts:
        tr = zero
        for g in range(n):
            tr = tr + powers[m][g][g]
        out = out.wedge(tr.scale(i_power(m)))
    return out


def omega_forms(data: CurvatureData) -> FormMatrix:
    """Ω_α^β as forms on M: S θ^γ∧θ^μ̄ + V_α^β_γ θ^γ∧θ + V^β_{αμ̄} θ∧θ^μ̄."""
    n, G, S, V = data.n, data.G, data.S, data.V
    out = []
    for a in range(n):
        row = []
        for b in range(n):
            even, theta = {}, {}
            for g, mu in np.ndindex(n, n):
                acc = ZERO
                for v in range(n):
                    if G[b, v]:
                        acc += G[b, v] * S[a, v, g, mu]
                if acc:
                    even[((g,), (mu,))] = acc
            for g in range(n):
                acc = ZERO
                for v in range(n):
                    if G[b, v]:
                        acc += G[b, v] * V[a, v, g]
                if acc:
                    theta[((g,), ())] = -acc
            for mu in range(n):
                acc = ZERO
                for rho in range(n):
                    if G[b, rho]:
                        acc += G[b, rho] * conj(V[rho, a, mu])
                if acc:
                    theta[((), (mu,))] = acc
            row.append(ExtendedForm(AltForm(n, even), AltForm(n, theta)))
        out.append(row)
    return out


def phi_of_omega(data: CurvatureData, part: PhiPartition) -> ExtendedForm:
    n = data.n
    return _phi_of(omega_forms(data), part, ExtendedForm(AltForm.scalar(n, ONE)), ExtendedForm.zero(n))


@dataclass
class PhiDecomposition:
    phi0: ExtendedForm
    phi1: ExtendedForm
    phi1_bar: ExtendedForm
    s_phi: CRat
    s_prime_sum: np.ndarray
    even_matches: bool
    theta_matches: bool

    @property
    def holds(self) -> bool:
        return self.even_matches and self.theta_matches


def phi_omega_decomposition(part: PhiPartition, data: CurvatureData) -> PhiDecomposition:
    """Φ(Ω) = S^Φ (dθ)^n + i n Σ_p m_p (S′^(p)_α θ^α - S′^(p)_ᾱ θ^ᾱ)∧θ∧(dθ)^(n-1), for degree n."""
    n = data.n
    phi = phi_of_omega(data, part)
    lef = Lefschetz(data.h)
    engine = ContractionEngine(ExtCurvature.assemble(data))
    s_phi = engine.s_phi_scalar(part)
    s_prime_sum = np.array([ZERO] * n, dtype=object)
    for p_index, mp in enumerate(part.parts):
        sp = engine.s_prime(p_index, part)
        for a in range(n):
            s_prime_sum[a] = s_prime_sum[a] + sp[a] * crat(mp)

    omega_n = lef.L(AltForm.scalar(n, ONE), n)
    omega_n1 = lef.L(AltForm.scalar(n, ONE), n - 1)
    holo = AltForm(n, {((a,), ()): s_prime_sum[a] for a in range(n)})
    anti = AltForm(n, {((), (a,)): conj(s_prime_sum[a]) for a in range(n)})
    expected_theta = holo.wedge(omega_n1).scale(-I * crat(n)) + anti.wedge(omega_n1).scale(I * crat(n))

    phi0 = ExtendedForm(phi.even)
    phi1 = ExtendedForm(AltForm(n), phi.theta.part(n, n - 1))
    phi1_bar = ExtendedForm(AltForm(n), phi.theta.part(n - 1, n))
    return PhiDecomposition(
        phi0=phi0,
        phi1=phi1,
        phi1_bar=phi1_bar,
        s_phi=s_phi,
        s_prime_sum=s_prime_sum,
        even_matches=phi.even == omega_n.scale(s_phi),
        theta_matches=phi.theta == expected_theta,
    )


def phi_reality_check(part: PhiPartition, data: CurvatureData) -> bool:
    phi = phi_of_omega(data, part)
    return phi.conjugate() == phi


def full_curvature_forms(omega: ExtCurvature) -> FormMatrix:
    """Ω~_γ^μ = Ω_γ^μ_{AB̄} θ^A∧θ^B̄ over the n + 1 directions."""
    n = omega.n
    dim = n + 1
    out = []
    for g in range(n):
        row = []
        for mu in range(n):
            terms = {}
            for A, B in np.ndindex(dim, dim):
                c = omega.omega[g, mu, A, B]
                if c:
                    terms[((A,), (B,))] = c
            row.append(AltForm(dim, terms))
        out.append(row)
    return out


def infty_contraction_check(part: PhiPartition, data: CurvatureData) -> bool:
    """(i/(n!(n-1)!)) Λ^(n-1) (Z_∞̄ ⌟ Z_∞ ⌟ Φ(Ω~))|_TM = -n S^Φ_{∞∞̄}, for degree n."""
    n = data.n
    omega = ExtCurvature.assemble(data)
    dim = n + 1
    phi = _phi_of(full_curvature_forms(omega), part, AltForm.scalar(dim, ONE), AltForm(dim))
    psi = phi.contract(n).contract(n, barred=True).restrict(n)
    lam = Lefschetz(data.h).Lambda(psi, n - 1)
    lhs = lam.coefficient(((), ())) * I * crat(rat(1, factorial(n) * factorial(n - 1)))
    engine = ContractionEngine(omega)
    rhs = engine.s_phi_entry(part, n, n) * crat(-n)
    return not (lhs - rhs)
