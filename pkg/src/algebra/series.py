from __future__ import annotations

from dataclasses import dataclass
from typing import List

from sympy.polys.ring_series import rs_mul, rs_pow, rs_series_inversion, rs_trunc
from sympy.polys.rings import PolyElement

from src.algebra.polynomials import generator
from src.errors import NonUnitConstantTerm


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series in one ring variable, kept modulo var^(order + 1).

    The remaining generators of the ring act as coefficients.
    """
    poly: PolyElement
    var: str
    order: int

    @classmethod
    def of(cls, poly: PolyElement, var: str, order: int) -> "TruncatedSeries":
        x = generator(poly.ring, var)
        return cls(rs_trunc(poly, x, order + 1), var, order)

    @property
    def ring(self):
        return self.poly.ring

    @property
    def x(self) -> PolyElement:
        return generator(self.ring, self.var)

    @property
    def prec(self) -> int:
        return self.order + 1

    def coefficient(self, i: int) -> PolyElement:
        """Coefficient of var^i, as an element of the same ring free of var."""
        if i < 0 or i > self.order:
            return self.ring.zero
        k = self.ring.gens.index(self.x)
        out = {}
        for monom, coeff in self.poly.items():
            if monom[k] == i:
                out[monom[:k] + (0,) + monom[k + 1:]] = coeff
        return self.ring.from_dict(out) if out else self.ring.zero

    def coefficients(self) -> List[PolyElement]:
        return [self.coefficient(i) for i in range(self.order + 1)]

    def _check(self, other: "TruncatedSeries") -> None:
        if other.ring != self.ring or other.var != self.var or other.order != self.order:
            raise ValueError("series live in different rings or orders")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(self.poly + other.poly, self.var, self.order)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(self.poly - other.poly, self.var, self.order)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(-self.poly, self.var, self.order)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(rs_mul(self.poly, other.poly, self.x, self.prec), self.var, self.order)


def series_inverse(s: TruncatedSeries) -> TruncatedSeries:
    c0 = s.coefficient(0)
    if not c0 or not c0.is_ground:
        raise NonUnitConstantTerm(f"constant term {c0.as_expr()} is not a unit")
    return TruncatedSeries(rs_series_inversion(s.poly, s.x, s.prec), s.var, s.order)


def series_pow(s: TruncatedSeries, k: int) -> TruncatedSeries:
    if k < 0:
        return series_pow(series_inverse(s), -k)
    if k == 0:
        return TruncatedSeries(s.ring.one, s.var, s.order)
    return TruncatedSeries(rs_pow(s.poly, k, s.x, s.prec), s.var, s.order)
