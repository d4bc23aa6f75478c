"""Closed-form contractions for Φ = T_2 and Φ = T_3, valid for trace-free S.

Matrices below act on the tangential index pair [γ][μ] = (source, target):
  Mup[a][b] = S_γ^μ_a^b, Vm[a] = V_γ^μ_a, Um = U_γ^μ, Vbar[a] = V^μ_γ^a.
"""
from __future__ import annotations

from functools import reduce
from typing import List

import numpy as np

from src.algebra.linalg import trace
from src.algebra.scalars import CRat, I, ZERO, as_crat, conj_array, crat, rat
from src.tractor.curvature import CurvatureData, ExtCurvature, PhiPartition, random_curvature


class RaisedTensors:
    def __init__(self, data: CurvatureData):
        self.data = data
        self.n = data.n
        G, S, V, U = data.G, data.S, data.V, data.U
        # Mup[a][b] = S_γ^μ_a^b, Vm[a] = V_γ^μ_a, Vbar[a] = V^μ_γ^a; rows γ, columns μ
        self.Mup = np.einsum("mv,bc,gvac->abgm", G, G, S)
        self.Vm = np.einsum("mv,gva->agm", G, V)
        self.Vbar = np.einsum("ab,mr,rgb->agm", G, G, conj_array(V))
        self.Um = np.einsum("mv,gv->gm", G, U)

    def tr(self, *mats: np.ndarray) -> CRat:
        return trace(reduce(np.matmul, mats))


def _norm_sq_s(data: CurvatureData) -> CRat:
    G = data.G
    return as_crat(np.einsum("abcd,ae,fb,cg,hd,efgh->", data.S, G, G, G, G, conj_array(data.S)))


def _norm_sq_v(data: CurvatureData) -> CRat:
    G = data.G
    return as_crat(np.einsum("abc,ad,eb,cf,def->", data.V, G, G, G, conj_array(data.V)))


def s_t2(data: CurvatureData) -> CRat:
    """S^{T_2} = -1/2 |S|^2."""
    return -_norm_sq_s(data) * crat(rat(1, 2))


def s_t2_alpha_infty(data: CurvatureData) -> List[CRat]:
    """S^{T_2}_{α∞̄} = -(i/2) S_{αβ̄γμ̄} V^{β̄γμ̄}."""
    G = data.G
    contracted = np.einsum("abgm,rb,gv,sm,rvs->a", data.S, G, G, G, data.V)
    return [x * (-I) * crat(rat(1, 2)) for x in contracted]


def s_t2_infty_infty(data: CurvatureData) -> CRat:
    """S^{T_2}_{∞∞̄} = -1/2 |V|^2."""
    return -_norm_sq_v(data) * crat(rat(1, 2))


def s_t3(data: CurvatureData, raised: RaisedTensors = None) -> CRat:
    t = raised or RaisedTensors(data)
    n, M = t.n, t.Mup
    acc = ZERO
    for a1, a2, a3 in np.ndindex(n, n, n):
        acc += t.tr(M[a1][a2], M[a2][a3], M[a3][a1]) + t.tr(M[a1][a3], M[a2][a1], M[a3][a2])
    return acc * crat(rat(1, 6))


def s_t3_alpha_infty(data: CurvatureData, raised: RaisedTensors = None) -> List[CRat]:
    t = raised or RaisedTensors(data)
    n, M, Vm = t.n, t.Mup, t.Vm
    out = []
    for alpha in range(n):
        acc = ZERO
        for a2, a3 in np.ndindex(n, n):
            acc += -I * t.tr(Vm[alpha], M[a2][a3], M[a3][a2])
            acc += I * t.tr(M[alpha][a3], Vm[a2], M[a3][a2])
            acc += I * t.tr(M[alpha][a3], M[a3][a2], Vm[a2])
        out.append(acc * crat(rat(1, 6)))
    return out


def s_t3_infty_infty(data: CurvatureData, raised: RaisedTensors = None) -> CRat:
    t = raised or RaisedTensors(data)
    n, M, Vm, Vbar, Um = t.n, t.Mup, t.Vm, t.Vbar, t.Um
    acc = ZERO
    for a2, a3 in np.ndindex(n, n):
        acc += -t.tr(Um, M[a2][a3], M[a3][a2])
        acc += t.tr(Vbar[a3], Vm[a2], M[a3][a2])
        acc += t.tr(Vbar[a3], M[a3][a2], Vm[a2])
    return acc * crat(rat(1, 6))


U_CANDIDATES = {"1": crat(1), "-1": crat(-1), "i": I, "-i": -I}


def resolve_u_constant(seed: int, n: int = 3) -> List[str]:
    """Labels of the constants c_U in {1, -1, i, -i} for which S^{T_3}_{∞∞̄} matches its oracle."""
    from src.tractor.contraction import ContractionEngine

    data = random_curvature(seed, n, chern_moser_tracefree=True)
    want = s_t3_infty_infty(data)
    part = PhiPartition((3,))
    found = []
    for label, c in U_CANDIDATES.items():
        engine = ContractionEngine(ExtCurvature.assemble(data, u_scale=c))
        if not engine.s_phi_entry(part, n, n) - want:
            found.append(label)
    return found
