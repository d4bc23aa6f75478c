"""Chern numbers and total I′ on complete intersections Y ⊂ CP^(n+r) of degrees d_1..d_r."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, List, Optional, Sequence, Tuple, Union

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, PolyRing

from src.algebra.invariants import (
    InvariantPoly,
    Mode,
    einstein_transform,
    monomial,
    partitions_of,
    to_chern_basis,
)
from src.algebra.polynomials import make_ring, substitute
from src.algebra.scalars import Rat, format_rat
from src.algebra.series import TruncatedSeries, series_inverse, series_pow
from src.algebra.symmetric import (
    SigmaPoly,
    degree_ring,
    evaluate,
    leading_sigma_part,
    sigma_decompose,
    sigma_ring,
)
from src.errors import InvalidDimension, NotMonomial, WrongDegree

logger = logging.getLogger(__name__)

ChernValue = Union[Rat, SigmaPoly]


@dataclass(frozen=True)
class CIData:
    n: int
    r: int
    degrees: Optional[Tuple[int, ...]] = None  # None keeps σ_1..σ_r symbolic

    def __post_init__(self):
        if self.n < 1 or self.r < 1:
            raise InvalidDimension(f"need n >= 1 and r >= 1, got n = {self.n}, r = {self.r}")
        if self.degrees is not None:
            object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
            if len(self.degrees) != self.r:
                raise InvalidDimension(f"expected {self.r} degrees, got {len(self.degrees)}")
            if any(d < 1 for d in self.degrees):
                raise InvalidDimension(f"degrees must be >= 1, got {self.degrees}")

    @property
    def symbolic(self) -> bool:
        return self.degrees is None

    def as_symbolic(self) -> "CIData":
        return CIData(self.n, self.r)


@dataclass(frozen=True)
class PiValue:
    """coefficient · π^pi_power."""
    coefficient: ChernValue
    pi_power: int = 1

    def is_zero(self) -> bool:
        c = self.coefficient
        return c.is_zero() if isinstance(c, SigmaPoly) else not c

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        pi = "pi" if self.pi_power == 1 else f"pi^{self.pi_power}"
        c = self.coefficient
        if isinstance(c, SigmaPoly):
            return f"({c})*{pi}"
        text = format_rat(c)
        if text == "1":
            return pi
        if text == "-1":
            return f"-{pi}"
        return f"{text}*{pi}"


@dataclass
class PositivityReport:
    warnings: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.warnings


# ───────────────────────────────────────────────────────────────────────────────
# Cohomology ring QQ[x, σ_1..σ_r] / (x^(n+1))
# ───────────────────────────────────────────────────────────────────────────────
def cohomology_ring(ci: CIData) -> PolyRing:
    names = ["x"] + ([f"sigma{j}" for j in range(1, ci.r + 1)] if ci.symbolic else [])
    return make_ring(names, QQ)


def _sigmas(ci: CIData, ring: PolyRing) -> List[PolyElement]:
    if ci.symbolic:
        return list(ring.gens[1:])
    values = [QQ.one] + [QQ.zero] * ci.r
    for d in ci.degrees:
        for k in range(ci.r, 0, -1):
            values[k] = values[k] + values[k - 1] * d
    return [ring.ground_new(v) for v in values[1:]]


def chern_series(ci: CIData) -> TruncatedSeries:
    """c(TY) = (1 + x)^(n+r+1) · (1 + Σ σ_j x^j)^(-1) mod x^(n+1)."""
    ring = cohomology_ring(ci)
    x = ring.gens[0]
    denom = ring.one
    for j, s in enumerate(_sigmas(ci, ring), start=1):
        denom = denom + s * x ** j
    ambient = series_pow(TruncatedSeries.of(ring.one + x, "x", ci.n), ci.n + ci.r + 1)
    return ambient * series_inverse(TruncatedSeries.of(denom, "x", ci.n))


def _to_value(p: PolyElement, ci: CIData) -> ChernValue:
    if ci.symbolic:
        return SigmaPoly(ci.r, sigma_ring(ci.r).from_dict({m[1:]: c for m, c in p.items()}))
    return dict(p.items()).get(p.ring.zero_monom, QQ.zero)


def total_chern(ci: CIData) -> List[ChernValue]:
    """[c_1(TY), ..., c_n(TY)] as coefficients of x^k."""
    series = chern_series(ci)
    return [_to_value(series.coefficient(k), ci) for k in range(1, ci.n + 1)]


def total_chern_via_degrees(ci: CIData) -> List[SigmaPoly]:
    """Cross-check: expand Π_j (1 + d_j x)^(-1) in the d variables, then σ-decompose."""
    r, n = ci.r, ci.n
    dring = degree_ring(r)
    ring = make_ring(["x"] + [str(s) for s in dring.symbols], QQ)
    x, ds = ring.gens[0], ring.gens[1:]
    series = series_pow(TruncatedSeries.of(ring.one + x, "x", n), n + r + 1)
    for d in ds:
        series = series * series_inverse(TruncatedSeries.of(ring.one + d * x, "x", n))
    out = []
    for k in range(1, n + 1):
        coeff = series.coefficient(k)
        in_d = dring.from_dict({m[1:]: c for m, c in coeff.items()})
        out.append(sigma_decompose(in_d))
    return out


def _check_degree(psi: InvariantPoly, n: int) -> None:
    degrees = psi.degrees()
    if degrees <= {n}:
        return
    if len(degrees) == 1:
        (d,) = degrees
        raise WrongDegree(f"degree {d} ≠ n = {n}")
    raise WrongDegree(f"φ is not homogeneous (degrees {sorted(degrees)}), need degree n = {n}")


def chern_number(phi: InvariantPoly, ci: CIData) -> ChernValue:
    """∫_Y φ(c(TY)) = [x^n] φ(c(TY)) · σ_r."""
    psi = to_chern_basis(phi)
    _check_degree(psi, ci.n)
    series = chern_series(ci)
    ring = series.ring
    x = ring.gens[0]
    bindings = {}
    for k in range(1, psi.maxgen + 1):
        bindings[f"c{k}"] = series.coefficient(k) * x ** k if k <= ci.n else ring.zero
    evaluated = substitute(psi.poly, bindings, ring)
    top = TruncatedSeries.of(evaluated, "x", ci.n).coefficient(ci.n)
    sigma_r = _sigmas(ci, ring)[-1]
    return _to_value(top * sigma_r, ci)


def transformed_chern_number(phi: InvariantPoly, ci: CIData) -> ChernValue:
    """∫_Y φ~(c(TY)), with φ~ the base-mode trace-free transform."""
    psi = to_chern_basis(phi)
    _check_degree(psi, ci.n)
    return chern_number(einstein_transform(psi, ci.n, Mode.BASE), ci)


def total_Iprime(phi: InvariantPoly, ci: CIData) -> PiValue:
    """I′_Φ = -2/(n(n+1)) · ∫_Y Φ~(c(TY)) · π."""
    value = transformed_chern_number(phi, ci)
    return PiValue(value * QQ(-2, ci.n * (ci.n + 1)))


def _single_monomial(phi: InvariantPoly) -> Tuple[Tuple[int, ...], Any]:
    psi = to_chern_basis(phi)
    terms = list(psi.poly.items())
    if len(terms) != 1:
        raise NotMonomial(f"{psi} is not a single Chern monomial")
    monom, coeff = terms[0]
    if monom[0] > 0:
        raise NotMonomial(f"{psi} contains c1")
    return monom, coeff


def leading_term(phi: InvariantPoly, ci: CIData) -> SigmaPoly:
    """Part of the symbolic ∫_Y φ~(c(TY)) with d-degree n + r and fewest σ factors."""
    _single_monomial(phi)
    value = transformed_chern_number(phi, ci.as_symbolic())
    return leading_sigma_part(value, ci.n + ci.r)


def expected_leading_term(phi: InvariantPoly, ci: CIData) -> SigmaPoly:
    """Closed form for φ = a·c_(i_1)···c_(i_k): a · (-1)^k σ_(i_1)···σ_(i_k) σ_r."""
    monom, coeff = _single_monomial(phi)
    r = ci.r
    k = sum(monom)
    out = SigmaPoly.constant(r, coeff * (-1) ** k)
    for i, e in enumerate(monom, start=1):
        if e and i > r:
            return SigmaPoly.zero(r)
        for _ in range(e):
            out = out * SigmaPoly.sigma(r, i)
    return out * SigmaPoly.sigma(r, r)


def validate_positivity(ci: CIData) -> PositivityReport:
    report = PositivityReport()
    n, r = ci.n, ci.r
    if not ci.symbolic and sum(ci.degrees) <= n + r + 1:
        report.warnings.append(
            f"canonical bundle not positive: sum of degrees {sum(ci.degrees)} ≤ n + r + 1 = {n + r + 1}"
        )
    if r <= n:
        report.warnings.append(f"σ-independence hypothesis r > n fails (r = {r}, n = {n})")
    for w in report.warnings:
        logger.warning(w)
    return report


def injectivity_witness(n: int, r: int) -> Tuple[List[InvariantPoly], List[SigmaPoly], bool]:
    """Symbolic total I′ of every c_2..c_n monomial of degree n, and whether they are pairwise distinct."""
    ci = CIData(n, r)
    monomials = [monomial(parts, n) for parts in partitions_of(n, min_part=2)]
    results = [total_Iprime(m, ci).coefficient for m in monomials]
    distinct = all(a.poly != b.poly for a, b in combinations(results, 2))
    return monomials, results, distinct


def evaluate_pi(value: PiValue, degrees: Sequence[int]) -> PiValue:
    """Specialize a symbolic PiValue at numeric degrees."""
    c = value.coefficient
    if isinstance(c, SigmaPoly):
        return PiValue(evaluate(c, degrees), value.pi_power)
    return value

