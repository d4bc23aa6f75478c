"""Sparse multivariate polynomials on top of sympy's PolyRing.

Every polynomial in the package is a sympy ``PolyElement``: a dict from
exponent tuples to coefficients in QQ, QQ_I or the field QQ(n).
"""
from __future__ import annotations

import logging
from itertools import combinations_with_replacement
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np
import sympy
from sympy import Symbol
from sympy.polys.domains import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, PolyRing

from src.algebra.scalars import format_crat, format_rat, random_rat

logger = logging.getLogger(__name__)

MultiPoly = PolyElement

N_SYMBOL = Symbol("n")
N_FIELD = QQ.frac_field(N_SYMBOL)


def make_ring(names: Sequence[str], domain: Any = QQ) -> PolyRing:
    return PolyRing(",".join(names), domain, grlex)


def ring_names(ring: PolyRing) -> List[str]:
    return [str(s) for s in ring.symbols]


def symbolic_n() -> Any:
    return N_FIELD.from_sympy(N_SYMBOL)


def coerce(value: Any, domain: Any, source: Any = None) -> Any:
    if source is None or source == domain:
        return value if domain.of_type(value) else domain.convert(value)
    return domain.convert(value, source)


def generator(ring: PolyRing, name: str) -> PolyElement:
    names = ring_names(ring)
    if name not in names:
        raise KeyError(f"{name} is not a generator of {ring}")
    return ring.gens[names.index(name)]


def rebase(p: PolyElement, ring: PolyRing) -> PolyElement:
    """Move p into ``ring`` by generator name."""
    if p.ring == ring:
        return p
    return substitute(p, {}, ring)


def substitute(p: PolyElement, bindings: Mapping[str, PolyElement],
               ring: Optional[PolyRing] = None) -> PolyElement:
    """Replace generators of p by polynomials, all at once.

    Unbound generators map to the generator of the same name in the target
    ring, which defaults to the ring of the bound values.
    """
    source = p.ring
    if ring is None:
        ring = next(iter(bindings.values())).ring if bindings else source
    names = ring_names(ring)
    images: List[Optional[PolyElement]] = []
    for name in ring_names(source):
        if name in bindings:
            value = bindings[name]
            images.append(value if value.ring == ring else rebase(value, ring))
        elif name in names:
            images.append(ring.gens[names.index(name)])
        else:
            images.append(None)

    powers: Dict[Tuple[int, int], PolyElement] = {}

    def _power(i: int, e: int) -> PolyElement:
        key = (i, e)
        if key not in powers:
            base = images[i]
            if base is None:
                raise KeyError(f"generator {ring_names(source)[i]} has no image in {ring}")
            powers[key] = base ** e
        return powers[key]

    result = ring.zero
    for monom, coeff in p.items():
        term = ring.ground_new(coerce(coeff, ring.domain, source.domain))
        for i, e in enumerate(monom):
            if e:
                term = term * _power(i, e)
        result = result + term
    return result


def evaluate(p: PolyElement, values: Mapping[str, Any]) -> Any:
    """Σ coeff·Π value^e over the terms of p."""
    names = ring_names(p.ring)
    acc = p.ring.domain.zero
    for monom, coeff in p.items():
        term = coeff
        for name, e in zip(names, monom):
            if e:
                term = term * values[name] ** e
        acc = acc + term
    return acc


def weighted_degree(monom: Tuple[int, ...], weights: Optional[Sequence[int]] = None) -> int:
    if weights is None:
        return sum(monom)
    return sum(w * e for w, e in zip(weights, monom))


# ───────────────────────────────────────────────────────────────────────────────
# Canonical printer
# ───────────────────────────────────────────────────────────────────────────────
def _format_monomial(names: Sequence[str], monom: Tuple[int, ...]) -> str:
    parts = []
    for name, e in zip(names, monom):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def _split_sign(coeff: Any) -> Tuple[bool, str]:
    """Return (negative, magnitude text) for a coefficient of any supported domain."""
    if QQ.of_type(coeff):
        return coeff < 0, format_rat(abs(coeff))
    if hasattr(coeff, "as_expr") and hasattr(coeff, "numer"):
        expr = sympy.factor(coeff.as_expr())
        if expr.is_Rational:
            q = QQ.from_sympy(expr)
            return q < 0, format_rat(abs(q))
        if expr.could_extract_minus_sign():
            return True, f"({-expr})"
        return False, f"({expr})"
    return False, f"({format_crat(coeff)})"


def format_poly(p: PolyElement, weights: Optional[Sequence[int]] = None) -> str:
    if not p:
        return "0"
    names = ring_names(p.ring)
    ordered = sorted(
        p.items(),
        key=lambda t: (-weighted_degree(t[0], weights), tuple(-e for e in reversed(t[0]))),
    )
    out = []
    for monom, coeff in ordered:
        negative, mag = _split_sign(coeff)
        mono = _format_monomial(names, monom)
        if not mono:
            body = mag
        elif mag == "1":
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(f"-{body}" if negative else body)
        else:
            out.append(f" - {body}" if negative else f" + {body}")
    return "".join(out)


def random_poly(rng: np.random.Generator, ring: PolyRing, max_degree: int = 3,
                terms: int = 4) -> PolyElement:
    monoms = [m for d in range(max_degree + 1) for m in _monomials(ring.ngens, d)]
    picks = rng.choice(len(monoms), size=min(terms, len(monoms)), replace=False)
    return ring.from_dict({monoms[int(i)]: random_rat(rng) for i in picks})


def _monomials(ngens: int, degree: int) -> Iterable[Tuple[int, ...]]:
    for combo in combinations_with_replacement(range(ngens), degree):
        exps = [0] * ngens
        for i in combo:
            exps[i] += 1
        yield tuple(exps)
