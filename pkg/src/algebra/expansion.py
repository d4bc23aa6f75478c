"""Binomial expansions of T_m(W') and T_m(Ψ) in ω and the trace variables.

Ring generators: w (for ω), psi1..psiN (T_j(Ψ)) and wp1..wpN (T_j(W')).
"""
from __future__ import annotations

import logging
from functools import lru_cache
from math import comb
from typing import Any, List, Optional

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, PolyRing

from src.algebra.invariants import (
    Basis,
    Dimension,
    InvariantPoly,
    Mode,
    basis_ring,
    to_chern_basis,
    to_power_basis,
    trace_constant,
)
from src.algebra.polynomials import coerce, make_ring, substitute
from src.errors import InvalidDimension

logger = logging.getLogger(__name__)

ExpansionElement = PolyElement


@lru_cache(maxsize=None)
def expansion_ring(maxgen: int, domain: Any = QQ) -> PolyRing:
    names = ["w"] + [f"psi{j}" for j in range(1, maxgen + 1)] + [f"wp{j}" for j in range(1, maxgen + 1)]
    return make_ring(names, domain)


def _ring_and_constant(m: int, n: Dimension, mode: Mode, ring: Optional[PolyRing]):
    domain, K = trace_constant(n, mode)
    if ring is None:
        ring = expansion_ring(m, domain)
    return ring, coerce(K, ring.domain, domain)


def _gen(ring: PolyRing, name: str) -> PolyElement:
    return ring.gens[[str(s) for s in ring.symbols].index(name)]


def expand_TW(m: int, n: Dimension = None, *, mode: Mode = Mode.DOMAIN,
              ring: Optional[PolyRing] = None) -> ExpansionElement:
    """T_m(W') = Σ_{l=0}^{m-1} C(m,l) ω^l ψ_(m-l) + K ω^m."""
    ring, K = _ring_and_constant(m, n, mode, ring)
    w = _gen(ring, "w")
    out = w ** m * K
    for l in range(m):
        out = out + w ** l * _gen(ring, f"psi{m - l}") * comb(m, l)
    return out


def expand_TPsi(m: int, n: Dimension = None, *, mode: Mode = Mode.DOMAIN,
                ring: Optional[PolyRing] = None) -> ExpansionElement:
    """T_m(Ψ) = Σ_{l=0}^{m-1} (-1)^l C(m,l) ω^l T_(m-l)(W') + (-1)^m K ω^m."""
    ring, K = _ring_and_constant(m, n, mode, ring)
    w = _gen(ring, "w")
    out = w ** m * K if m % 2 == 0 else -(w ** m * K)
    for l in range(m):
        term = w ** l * _gen(ring, f"wp{m - l}") * comb(m, l)
        out = out + term if l % 2 == 0 else out - term
    return out


def composition_holds(m: int, n: Dimension = None) -> bool:
    """Substituting T_W into T_Psi must give back psi_m."""
    ring = expansion_ring(m, trace_constant(n, Mode.DOMAIN)[0])
    bindings = {f"wp{j}": expand_TW(j, n, ring=ring) for j in range(1, m + 1)}
    return substitute(expand_TPsi(m, n, ring=ring), bindings, ring) == _gen(ring, f"psi{m}")


def _omega_degree(p: PolyElement) -> dict:
    by_power: dict = {}
    for monom, coeff in p.items():
        rest = (0,) + monom[1:]
        by_power.setdefault(monom[0], {})[rest] = coeff
    return {k: p.ring.from_dict(v) for k, v in by_power.items()}


def chern_expansion(n: int) -> List[InvariantPoly]:
    """[Φ_0, ..., Φ_n] with c_(n+1)(W') = c_(n+1)(Ψ) + Σ_m Φ_m(W') ω^(n+1-m)."""
    if n < 1:
        raise InvalidDimension(f"dimension n must be >= 1, got {n}")
    N = n + 1
    ring = expansion_ring(N, QQ)
    top = to_power_basis(InvariantPoly.generator(Basis.CHERN, N, N)).poly

    in_psi = substitute(top, {f"T{j}": expand_TW(j, n, ring=ring) for j in range(1, N + 1)}, ring)
    parts = _omega_degree(in_psi)
    omega_free = parts.get(0, ring.zero)
    expected = substitute(top, {f"T{j}": _gen(ring, f"psi{j}") for j in range(1, N + 1)}, ring)
    if omega_free != expected:
        raise ArithmeticError("omega-free part of c_(n+1)(W') is not c_(n+1)(Psi)")

    remainder = in_psi - omega_free
    in_wp = substitute(remainder, {f"psi{j}": expand_TPsi(j, n, ring=ring) for j in range(1, N + 1)}, ring)

    target = basis_ring(Basis.POWER, N, QQ)
    to_target = {"w": target.one}
    to_target.update({f"wp{j}": target.gens[j - 1] for j in range(1, N + 1)})
    by_power = _omega_degree(in_wp)
    out = []
    for m in range(n + 1):
        coeff = by_power.get(N - m, ring.zero)
        phi_m = to_chern_basis(InvariantPoly(Basis.POWER, substitute(coeff, to_target, target)))
        out.append(phi_m)
        logger.debug("Phi_%d = %s", m, phi_m)
    return out


def format_expansion(parts: List[InvariantPoly]) -> str:
    return "; ".join(f"Phi_{m} = {p}" for m, p in enumerate(parts))
