"""Invariant polynomials on gl(N) in the Chern basis c_k or the trace basis T_k.

Newton's identities convert between the two, with e_k <-> c_k and p_k <-> T_k.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import comb
from typing import Any, Dict, List, Optional, Sequence, Set, Tuple, Union

import numpy as np
from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, PolyRing

from src.algebra.polynomials import (
    N_FIELD,
    coerce,
    evaluate,
    format_poly,
    make_ring,
    rebase,
    substitute,
    symbolic_n,
    weighted_degree,
)
from src.algebra.scalars import rat, random_rat
from src.errors import DegreeMismatch, InvalidDimension

logger = logging.getLogger(__name__)

Dimension = Optional[int]  # None stands for a symbolic n


class Basis(str, Enum):
    CHERN = "chern"
    POWER = "power"


class Mode(str, Enum):
    DOMAIN = "domain"
    BASE = "base"


_PREFIX = {Basis.CHERN: "c", Basis.POWER: "T"}


@lru_cache(maxsize=None)
def basis_ring(basis: Basis, maxgen: int, domain: Any = QQ) -> PolyRing:
    return make_ring([f"{_PREFIX[basis]}{k}" for k in range(1, maxgen + 1)], domain)


def _trim(monom: Tuple[int, ...]) -> Tuple[int, ...]:
    end = len(monom)
    while end and not monom[end - 1]:
        end -= 1
    return monom[:end]


@dataclass(frozen=True)
class InvariantPoly:
    basis: Basis
    poly: PolyElement

    @property
    def maxgen(self) -> int:
        return self.poly.ring.ngens

    @property
    def domain(self) -> Any:
        return self.poly.ring.domain

    @property
    def weights(self) -> Tuple[int, ...]:
        return tuple(range(1, self.maxgen + 1))

    @classmethod
    def generator(cls, basis: Basis, k: int, maxgen: int, domain: Any = QQ) -> "InvariantPoly":
        return cls(basis, basis_ring(basis, maxgen, domain).gens[k - 1])

    @classmethod
    def constant(cls, value: Any, basis: Basis = Basis.CHERN, maxgen: int = 1,
                 domain: Any = QQ) -> "InvariantPoly":
        ring = basis_ring(basis, maxgen, domain)
        return cls(basis, ring.ground_new(coerce(value, domain)))

    def degrees(self) -> Set[int]:
        return {weighted_degree(m, self.weights) for m in self.poly.keys()}

    def is_homogeneous(self, d: int) -> bool:
        return self.degrees() <= {d}

    def homogeneous_part(self, d: int) -> "InvariantPoly":
        ring = self.poly.ring
        kept = {m: c for m, c in self.poly.items() if weighted_degree(m, self.weights) == d}
        return InvariantPoly(self.basis, ring.from_dict(kept) if kept else ring.zero)

    def is_zero(self) -> bool:
        return not self.poly

    def with_ring(self, maxgen: int, domain: Any = None) -> "InvariantPoly":
        ring = basis_ring(self.basis, maxgen, domain or self.domain)
        return InvariantPoly(self.basis, rebase(self.poly, ring))

    def _aligned(self, other: "InvariantPoly") -> Tuple[PolyElement, PolyElement, Basis]:
        a, b = self, other
        if a.basis != b.basis:
            a, b = to_chern_basis(a), to_chern_basis(b)
        maxgen = max(a.maxgen, b.maxgen)
        domain = a.domain.unify(b.domain)
        return a.with_ring(maxgen, domain).poly, b.with_ring(maxgen, domain).poly, a.basis

    def __add__(self, other: "InvariantPoly") -> "InvariantPoly":
        p, q, basis = self._aligned(other)
        return InvariantPoly(basis, p + q)

    def __sub__(self, other: "InvariantPoly") -> "InvariantPoly":
        p, q, basis = self._aligned(other)
        return InvariantPoly(basis, p - q)

    def __mul__(self, other: Union["InvariantPoly", Any]) -> "InvariantPoly":
        if isinstance(other, InvariantPoly):
            p, q, basis = self._aligned(other)
            return InvariantPoly(basis, p * q)
        return InvariantPoly(self.basis, self.poly * coerce(other, self.domain))

    __rmul__ = __mul__

    def __neg__(self) -> "InvariantPoly":
        return InvariantPoly(self.basis, -self.poly)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, InvariantPoly):
            return NotImplemented
        p, q, _ = self._aligned(other)
        return p == q

    def __hash__(self) -> int:
        # Chern-basis support with trailing zero exponents dropped; equal polys agree
        # on it whatever their basis, maxgen or domain
        chern = to_chern_basis(self)
        return hash(frozenset(_trim(m) for m, c in chern.poly.items() if c))

    def __str__(self) -> str:
        return format_poly(self.poly, self.weights)


# ───────────────────────────────────────────────────────────────────────────────
# Newton's identities
# ───────────────────────────────────────────────────────────────────────────────
@lru_cache(maxsize=None)
def _chern_in_power(maxgen: int) -> Tuple[PolyElement, ...]:
    """c_k written in T_1..T_N over QQ: e_k = (1/k) Σ_{i=1}^k (-1)^(i-1) e_(k-i) p_i."""
    ring = basis_ring(Basis.POWER, maxgen, QQ)
    p = ring.gens
    e: List[PolyElement] = [ring.one]
    for k in range(1, maxgen + 1):
        acc = ring.zero
        for i in range(1, k + 1):
            term = e[k - i] * p[i - 1]
            acc = acc + term if i % 2 else acc - term
        e.append(acc * rat(1, k))
    return tuple(e[1:])


@lru_cache(maxsize=None)
def _power_in_chern(maxgen: int) -> Tuple[PolyElement, ...]:
    """T_k written in c_1..c_N over QQ: p_k = Σ_{i<k} (-1)^(i-1) e_i p_(k-i) + (-1)^(k-1) k e_k."""
    ring = basis_ring(Basis.CHERN, maxgen, QQ)
    e = ring.gens
    p: List[PolyElement] = []
    for k in range(1, maxgen + 1):
        acc = ring.zero
        for i in range(1, k):
            term = e[i - 1] * p[k - i - 1]
            acc = acc + term if i % 2 else acc - term
        last = e[k - 1] * k
        acc = acc + last if k % 2 else acc - last
        p.append(acc)
    return tuple(p)


def _convert(phi: InvariantPoly, target: Basis) -> InvariantPoly:
    table = _chern_in_power if target is Basis.POWER else _power_in_chern
    ring = basis_ring(target, phi.maxgen, phi.domain)
    images = table(phi.maxgen)
    bindings = {f"{_PREFIX[phi.basis]}{k}": rebase(images[k - 1], ring) for k in range(1, phi.maxgen + 1)}
    return InvariantPoly(target, substitute(phi.poly, bindings, ring))


def to_power_basis(phi: InvariantPoly) -> InvariantPoly:
    return phi if phi.basis is Basis.POWER else _convert(phi, Basis.POWER)


def to_chern_basis(phi: InvariantPoly) -> InvariantPoly:
    return phi if phi.basis is Basis.CHERN else _convert(phi, Basis.CHERN)


def reduce_mod_c1(phi: InvariantPoly) -> InvariantPoly:
    """Drop every Chern monomial divisible by c1."""
    psi = to_chern_basis(phi)
    ring = psi.poly.ring
    kept = {m: c for m, c in psi.poly.items() if m[0] == 0}
    return InvariantPoly(Basis.CHERN, ring.from_dict(kept) if kept else ring.zero)


# ───────────────────────────────────────────────────────────────────────────────
# Einstein (trace-free) transform
# ───────────────────────────────────────────────────────────────────────────────
def _check_dimension(n: Dimension) -> None:
    if n is not None and n < 1:
        raise InvalidDimension(f"dimension n must be >= 1, got {n}")


def trace_constant(n: Dimension, mode: Mode) -> Tuple[Any, Any]:
    """(domain, K) with K = n + 2 on the domain and n + 1 on the base."""
    shift = 2 if mode is Mode.DOMAIN else 1
    if n is None:
        return N_FIELD, symbolic_n() + shift
    return QQ, QQ(n + shift)


def einstein_transform(phi: InvariantPoly, n: Dimension, mode: Mode = Mode.DOMAIN) -> InvariantPoly:
    """Replace T_m by T_m of the trace-free part A - (T_1(A)/K)·Id, K as in ``trace_constant``.

    T~_m = Σ_{l=0}^{m-2} (-1)^l C(m,l) K^-l T_1^l T_(m-l) + (-1)^(m-1) (m-1) K^-(m-1) T_1^m.
    The result is returned in the Chern basis.
    """
    _check_dimension(n)
    base_domain, K = trace_constant(n, mode)
    domain = phi.domain.unify(base_domain)
    psi = to_power_basis(phi).with_ring(phi.maxgen, domain)
    ring = psi.poly.ring
    K = coerce(K, domain, base_domain)
    inv = domain.quo(domain.one, K)
    T = ring.gens
    T1 = T[0]

    images: Dict[str, PolyElement] = {"T1": ring.zero}
    for m in range(2, phi.maxgen + 1):
        acc = ring.zero
        for l in range(m - 1):
            term = T1 ** l * T[m - l - 1] * (comb(m, l) * inv ** l)
            acc = acc + term if l % 2 == 0 else acc - term
        last = T1 ** m * ((m - 1) * inv ** (m - 1))
        acc = acc + last if (m - 1) % 2 == 0 else acc - last
        images[f"T{m}"] = acc
    out = to_chern_basis(InvariantPoly(Basis.POWER, substitute(psi.poly, images, ring)))
    logger.debug("einstein_transform(%s, n=%s, %s) = %s", phi, n, mode.value, out)
    return out


def random_invariant(rng: np.random.Generator, degree: int, maxgen: int,
                     basis: Basis = Basis.CHERN, skip_c1: bool = False) -> InvariantPoly:
    """Random homogeneous element of the given weighted degree."""
    ring = basis_ring(basis, maxgen, QQ)
    terms = {}
    for parts in partitions_of(degree, max_part=maxgen):
        if skip_c1 and 1 in parts:
            continue
        exps = [0] * maxgen
        for k in parts:
            exps[k - 1] += 1
        c = random_rat(rng)
        if c:
            terms[tuple(exps)] = c
    return InvariantPoly(basis, ring.from_dict(terms) if terms else ring.zero)


def partitions_of(total: int, max_part: Optional[int] = None, min_part: int = 1) -> List[Tuple[int, ...]]:
    """Partitions of total as non-increasing tuples."""
    max_part = total if max_part is None else min(max_part, total)
    if total == 0:
        return [()]
    out = []
    for first in range(max_part, min_part - 1, -1):
        for rest in partitions_of(total - first, first, min_part):
            out.append((first,) + rest)
    return out


def monomial(parts: Sequence[int], maxgen: int, basis: Basis = Basis.CHERN) -> InvariantPoly:
    ring = basis_ring(basis, maxgen, QQ)
    out = ring.one
    for k in parts:
        out = out * ring.gens[k - 1]
    return InvariantPoly(basis, out)


# ───────────────────────────────────────────────────────────────────────────────
# Oracles
# ───────────────────────────────────────────────────────────────────────────────
def newton_oracle(values: Sequence[Any], maxgen: Optional[int] = None) -> bool:
    """Check both conversion tables against power sums and elementary symmetric values."""
    maxgen = maxgen or len(values)
    power_sums = [sum((v ** k for v in values), QQ.zero) for k in range(1, maxgen + 1)]
    elem = [QQ.one] + [QQ.zero] * maxgen
    for v in values:
        for k in range(maxgen, 0, -1):
            elem[k] = elem[k] + elem[k - 1] * v
    at_power = {f"T{k}": power_sums[k - 1] for k in range(1, maxgen + 1)}
    at_chern = {f"c{k}": elem[k] for k in range(1, maxgen + 1)}
    for k in range(1, maxgen + 1):
        if evaluate(_chern_in_power(maxgen)[k - 1], at_power) != elem[k]:
            return False
        if evaluate(_power_in_chern(maxgen)[k - 1], at_chern) != power_sums[k - 1]:
            return False
    return True


def einstein_oracle(m: int, n: int, mode: Mode = Mode.DOMAIN) -> InvariantPoly:
    """T~_m via the binomial expansion: ω -> -T_1/K and ψ_j -> T_j."""
    from src.algebra.expansion import expand_TW, expansion_ring

    _check_dimension(n)
    base_domain, K = trace_constant(n, mode)
    ring = expansion_ring(m, base_domain)
    target = basis_ring(Basis.POWER, m, base_domain)
    T = target.gens
    bindings = {"w": T[0] * (-(base_domain.one / K))}
    bindings.update({f"psi{j}": T[j - 1] for j in range(1, m + 1)})
    image = substitute(expand_TW(m, n, mode=mode, ring=ring), bindings, target)
    return to_chern_basis(InvariantPoly(Basis.POWER, image))


def base_mode_oracle(m: int, n: int) -> InvariantPoly:
    return einstein_oracle(m, n, Mode.BASE)


def check_same_degree(a: InvariantPoly, b: InvariantPoly) -> None:
    if a.degrees() != b.degrees():
        raise DegreeMismatch(f"degrees {sorted(a.degrees())} and {sorted(b.degrees())} differ")
