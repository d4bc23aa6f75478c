"""Complex differential forms on an n-dimensional complex space, with exact coefficients.

A form is a sparse dict {(I, J): c} over strictly increasing 0-based index
tuples, standing for Σ c·θ^I ∧ θ^J̄ with all unbarred factors first.
"""
from __future__ import annotations

from typing import Dict, Iterator, Optional, Sequence, Set, Tuple

from sympy.polys.domains import QQ_I

from src.algebra.scalars import CRat, as_crat, conj, format_crat
from src.errors import BidegreeMismatch

Index = Tuple[int, ...]
Key = Tuple[Index, Index]


def merge_sign(a: Index, b: Index) -> Tuple[Optional[Index], int]:
    """Sorted union of disjoint a, b and the sign of sorting a + b; (None, 0) on overlap."""
    if set(a) & set(b):
        return None, 0
    inversions = sum(1 for x in a for y in b if x > y)
    return tuple(sorted(a + b)), -1 if inversions % 2 else 1


def sort_sign(seq: Sequence[int]) -> Tuple[Optional[Index], int]:
    """Sorted tuple and permutation sign; (None, 0) when seq repeats an index."""
    if len(set(seq)) != len(seq):
        return None, 0
    inversions = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
    return tuple(sorted(seq)), -1 if inversions % 2 else 1


class AltForm:
    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Optional[Dict[Key, CRat]] = None):
        self.n = n
        self.terms: Dict[Key, CRat] = {}
        for key, c in (terms or {}).items():
            c = as_crat(c)
            if c:
                self.terms[key] = c

    # ── constructors ──────────────────────────────────────────────────────────
    @classmethod
    def zero(cls, n: int) -> "AltForm":
        return cls(n)

    @classmethod
    def scalar(cls, n: int, c) -> "AltForm":
        return cls(n, {((), ()): c})

    @classmethod
    def theta(cls, n: int, a: int) -> "AltForm":
        return cls(n, {((a,), ()): QQ_I.one})

    @classmethod
    def theta_bar(cls, n: int, b: int) -> "AltForm":
        return cls(n, {((), (b,)): QQ_I.one})

    # ── structure ─────────────────────────────────────────────────────────────
    def bidegrees(self) -> Set[Tuple[int, int]]:
        return {(len(i), len(j)) for i, j in self.terms}

    def bidegree(self) -> Tuple[int, int]:
        degs = self.bidegrees()
        if len(degs) != 1:
            raise BidegreeMismatch(f"form is not of pure bidegree: {sorted(degs)}")
        return next(iter(degs))

    def part(self, p: int, q: int) -> "AltForm":
        return AltForm(self.n, {k: c for k, c in self.terms.items() if len(k[0]) == p and len(k[1]) == q})

    def parity_twist(self) -> "AltForm":
        """Σ (-1)^(p+q) φ_(p,q)."""
        return AltForm(self.n, {k: (-c if (len(k[0]) + len(k[1])) % 2 else c) for k, c in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def items(self) -> Iterator[Tuple[Key, CRat]]:
        return iter(self.terms.items())

    def coefficient(self, key: Key) -> CRat:
        return self.terms.get(key, QQ_I.zero)

    def component(self, unbarred: Sequence[int], barred: Sequence[int]) -> CRat:
        """φ_{a_1..a_p b̄_1..b̄_q} for arbitrary index order, antisymmetric in each group."""
        i, si = sort_sign(tuple(unbarred))
        j, sj = sort_sign(tuple(barred))
        if i is None or j is None:
            return QQ_I.zero
        c = self.terms.get((i, j))
        if c is None:
            return QQ_I.zero
        return c if si * sj == 1 else -c

    def restrict(self, m: int) -> "AltForm":
        """Keep the components with every index below m, as a form in m dimensions."""
        return AltForm(m, {k: c for k, c in self.terms.items() if all(x < m for x in k[0] + k[1])})

    # ── arithmetic ────────────────────────────────────────────────────────────
    def _check(self, other: "AltForm") -> None:
        if other.n != self.n:
            raise BidegreeMismatch(f"forms live in dimensions {self.n} and {other.n}")

    def __add__(self, other: "AltForm") -> "AltForm":
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, QQ_I.zero) + c
        return AltForm(self.n, out)

    def __sub__(self, other: "AltForm") -> "AltForm":
        return self + (-other)

    def __neg__(self) -> "AltForm":
        return AltForm(self.n, {k: -c for k, c in self.terms.items()})

    def scale(self, c) -> "AltForm":
        c = as_crat(c)
        if not c:
            return AltForm(self.n)
        return AltForm(self.n, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, c) -> "AltForm":
        return self.scale(c)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AltForm):
            return NotImplemented
        return self.n == other.n and not (self - other).terms

    __hash__ = None  # type: ignore[assignment]

    def wedge(self, other: "AltForm") -> "AltForm":
        self._check(other)
        out: Dict[Key, CRat] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                i, si = merge_sign(i1, i2)
                if i is None:
                    continue
                j, sj = merge_sign(j1, j2)
                if j is None:
                    continue
                s = si * sj * (-1 if (len(j1) * len(i2)) % 2 else 1)
                key = (i, j)
                v = c1 * c2
                out[key] = out.get(key, QQ_I.zero) + (v if s == 1 else -v)
        return AltForm(self.n, out)

    def contract(self, index: int, barred: bool = False) -> "AltForm":
        """Interior product with Z_index (or Z_index-bar)."""
        out: Dict[Key, CRat] = {}
        for (i, j), c in self.terms.items():
            if not barred:
                if index not in i:
                    continue
                k = i.index(index)
                key = (i[:k] + i[k + 1:], j)
                sgn = k
            else:
                if index not in j:
                    continue
                k = j.index(index)
                key = (i, j[:k] + j[k + 1:])
                sgn = len(i) + k
            out[key] = out.get(key, QQ_I.zero) + (-c if sgn % 2 else c)
        return AltForm(self.n, out)

    def conjugate(self) -> "AltForm":
        out = {}
        for (i, j), c in self.terms.items():
            cc = conj(c)
            out[(j, i)] = -cc if (len(i) * len(j)) % 2 else cc
        return AltForm(self.n, out)

    def __repr__(self) -> str:
        if not self.terms:
            return f"AltForm(n={self.n}, 0)"
        body = " + ".join(
            f"({format_crat(c)})*{_basis_name(k)}" for k, c in sorted(self.terms.items())
        )
        return f"AltForm(n={self.n}, {body})"


def _basis_name(key: Key) -> str:
    i, j = key
    parts = [f"th{a + 1}" for a in i] + [f"thb{b + 1}" for b in j]
    return "^".join(parts) or "1"
