from __future__ import annotations

from typing import Optional

from src.forms.altform import AltForm


class ExtendedForm:
    """a + θ∧b with a, b transverse forms and θ a real 1-form with θ∧θ = 0."""

    __slots__ = ("even", "theta")

    def __init__(self, even: AltForm, theta: Optional[AltForm] = None):
        self.even = even
        self.theta = theta if theta is not None else AltForm(even.n)

    @property
    def n(self) -> int:
        return self.even.n

    @classmethod
    def zero(cls, n: int) -> "ExtendedForm":
        return cls(AltForm(n))

    def __add__(self, other: "ExtendedForm") -> "ExtendedForm":
        return ExtendedForm(self.even + other.even, self.theta + other.theta)

    def __sub__(self, other: "ExtendedForm") -> "ExtendedForm":
        return ExtendedForm(self.even - other.even, self.theta - other.theta)

    def __neg__(self) -> "ExtendedForm":
        return ExtendedForm(-self.even, -self.theta)

    def scale(self, c) -> "ExtendedForm":
        return ExtendedForm(self.even.scale(c), self.theta.scale(c))

    def wedge(self, other: "ExtendedForm") -> "ExtendedForm":
        # (a1 + θb1)(a2 + θb2) = a1a2 + θ[(-1)^deg(a1) a1 b2 + b1 a2]
        even = self.even.wedge(other.even)
        theta = self.even.parity_twist().wedge(other.theta) + self.theta.wedge(other.even)
        return ExtendedForm(even, theta)

    def conjugate(self) -> "ExtendedForm":
        return ExtendedForm(self.even.conjugate(), self.theta.conjugate())

    def is_zero(self) -> bool:
        return self.even.is_zero() and self.theta.is_zero()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExtendedForm):
            return NotImplemented
        return self.even == other.even and self.theta == other.theta

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"ExtendedForm({self.even!r} + theta^{self.theta!r})"
