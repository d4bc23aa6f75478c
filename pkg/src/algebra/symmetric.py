"""Symmetric polynomials in the degrees d_1..d_r and their σ-form."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Any, Dict, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, PolyRing

from src.algebra.polynomials import coerce, format_poly, make_ring, substitute
from src.errors import NotSymmetric

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def degree_ring(r: int) -> PolyRing:
    return make_ring([f"d{j}" for j in range(1, r + 1)], QQ)


@lru_cache(maxsize=None)
def sigma_ring(r: int) -> PolyRing:
    return make_ring([f"sigma{j}" for j in range(1, r + 1)], QQ)


@lru_cache(maxsize=None)
def elementary(r: int) -> Tuple[PolyElement, ...]:
    ring = degree_ring(r)
    d = ring.gens
    out = []
    for j in range(1, r + 1):
        acc = ring.zero
        for combo in combinations(range(r), j):
            term = ring.one
            for i in combo:
                term = term * d[i]
            acc = acc + term
        out.append(acc)
    return tuple(out)


def sigma_count(monom: Tuple[int, ...]) -> int:
    return sum(monom)


def d_degree(monom: Tuple[int, ...]) -> int:
    """Degree in the d variables of σ^monom; σ_j has degree j."""
    return sum((j + 1) * e for j, e in enumerate(monom))


@dataclass(frozen=True)
class SigmaPoly:
    r: int
    poly: PolyElement

    @classmethod
    def zero(cls, r: int) -> "SigmaPoly":
        return cls(r, sigma_ring(r).zero)

    @classmethod
    def constant(cls, r: int, value: Any) -> "SigmaPoly":
        ring = sigma_ring(r)
        return cls(r, ring.ground_new(coerce(value, QQ)))

    @classmethod
    def sigma(cls, r: int, j: int) -> "SigmaPoly":
        return cls(r, sigma_ring(r).gens[j - 1])

    def is_zero(self) -> bool:
        return not self.poly

    def terms(self) -> Dict[Tuple[int, ...], Any]:
        return dict(self.poly.items())

    def __add__(self, other: "SigmaPoly") -> "SigmaPoly":
        return SigmaPoly(self.r, self.poly + other.poly)

    def __sub__(self, other: "SigmaPoly") -> "SigmaPoly":
        return SigmaPoly(self.r, self.poly - other.poly)

    def __neg__(self) -> "SigmaPoly":
        return SigmaPoly(self.r, -self.poly)

    def __mul__(self, other: Any) -> "SigmaPoly":
        if isinstance(other, SigmaPoly):
            return SigmaPoly(self.r, self.poly * other.poly)
        return SigmaPoly(self.r, self.poly * coerce(other, QQ))

    __rmul__ = __mul__

    def __str__(self) -> str:
        return format_poly(self.poly, tuple(range(1, self.r + 1)))


def expand(s: SigmaPoly) -> PolyElement:
    """Write s back in d_1..d_r."""
    ring = degree_ring(s.r)
    bindings = {f"sigma{j}": e for j, e in enumerate(elementary(s.r), start=1)}
    return substitute(s.poly, bindings, ring)


def is_symmetric(p: PolyElement) -> bool:
    r = p.ring.ngens
    for i in range(r - 1):
        swapped = {m[:i] + (m[i + 1], m[i]) + m[i + 2:]: c for m, c in p.items()}
        if p.ring.from_dict(swapped) != p:
            return False
    return True


def sigma_decompose(p: PolyElement) -> SigmaPoly:
    """Unique σ-polynomial s with expand(s) = p (Gauss reduction by leading monomials)."""
    r = p.ring.ngens
    if not is_symmetric(p):
        raise NotSymmetric(f"{p.as_expr()} is not symmetric in {', '.join(map(str, p.ring.symbols))}")
    dring = degree_ring(r)
    if p.ring != dring:
        p = dring.from_dict(dict(p.items()), p.ring.domain) if p else dring.zero
    sym, rem, _ = p.symmetrize()
    if rem:
        raise NotSymmetric(f"remainder {rem.as_expr()} after σ-reduction")
    # generator j of sym stands for e_(j+1), matching sigma(j+1)
    return SigmaPoly(r, sigma_ring(r).from_dict(dict(sym.items())) if sym else sigma_ring(r).zero)


def leading_sigma_part(s: SigmaPoly, total_d_degree: int) -> SigmaPoly:
    """Terms of d-degree ``total_d_degree`` with the fewest σ factors."""
    candidates = {m: c for m, c in s.poly.items() if d_degree(m) == total_d_degree}
    if not candidates:
        return SigmaPoly.zero(s.r)
    fewest = min(sigma_count(m) for m in candidates)
    kept = {m: c for m, c in candidates.items() if sigma_count(m) == fewest}
    return SigmaPoly(s.r, sigma_ring(s.r).from_dict(kept))


def evaluate(s: SigmaPoly, degrees: Sequence[int]) -> Any:
    if len(degrees) != s.r:
        raise ValueError(f"expected {s.r} degrees, got {len(degrees)}")
    values = [QQ.zero] * (s.r + 1)
    values[0] = QQ.one
    for d in degrees:
        for k in range(s.r, 0, -1):
            values[k] = values[k] + values[k - 1] * d
    acc = QQ.zero
    for monom, coeff in s.poly.items():
        term = coeff
        for j, e in enumerate(monom, start=1):
            if e:
                term = term * values[j] ** e
        acc = acc + term
    return acc
