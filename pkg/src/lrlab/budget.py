"""Error-budgeted values.

Every numerical result that is not exact carries an absolute error bound
("budget") along with it.  For complex values the budget bounds the modulus
of the error, which in particular bounds each component.  Budgets combine
additively under addition/subtraction and by first-order bounds under
multiplication and division.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = ["ValueWithBudget", "csum", "abs_sum"]


def csum(terms) -> float:
    """Compensated sum of an iterable of floats (exactly rounded)."""
    return math.fsum(terms)


def abs_sum(terms) -> float:
    return math.fsum(abs(t) for t in terms)


def _up(x: float) -> float:
    """Round a budget upward so float evaluation stays conservative."""
    return x * (1.0 + 8e-16)


@dataclass(frozen=True)
class ValueWithBudget:
    """A real or complex value with an absolute error bound.

    ``budget`` must be a nonnegative bound on ``|computed - true|``.
    Budget arithmetic rounds upward, so propagated bounds stay sound in
    binary64.
    """

    value: complex
    budget: float

    def __post_init__(self):
        if self.budget < 0 or math.isnan(self.budget):
            raise ValueError(f"budget must be nonnegative, got {self.budget}")

    @property
    def real(self) -> "ValueWithBudget":
        return ValueWithBudget(self.value.real, self.budget)

    @property
    def imag(self) -> "ValueWithBudget":
        return ValueWithBudget(self.value.imag, self.budget)

    def conjugate(self) -> "ValueWithBudget":
        return ValueWithBudget(self.value.conjugate(), self.budget)

    def widened(self, extra: float) -> "ValueWithBudget":
        return ValueWithBudget(self.value, self.budget + extra)

    def __neg__(self) -> "ValueWithBudget":
        return ValueWithBudget(-self.value, self.budget)

    def __add__(self, other) -> "ValueWithBudget":
        if isinstance(other, ValueWithBudget):
            return ValueWithBudget(self.value + other.value, _up(self.budget + other.budget))
        return ValueWithBudget(self.value + other, self.budget)

    __radd__ = __add__

    def __sub__(self, other) -> "ValueWithBudget":
        return self + (-other if isinstance(other, ValueWithBudget) else -1 * other)

    def __rsub__(self, other) -> "ValueWithBudget":
        return (-self) + other

    def __mul__(self, other) -> "ValueWithBudget":
        if isinstance(other, ValueWithBudget):
            a, b = self.value, other.value
            return ValueWithBudget(
                a * b,
                _up(abs(a) * other.budget + abs(b) * self.budget + self.budget * other.budget),
            )
        return ValueWithBudget(self.value * other, _up(abs(other) * self.budget))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "ValueWithBudget":
        if isinstance(other, ValueWithBudget):
            a, b = self.value, other.value
            if other.budget >= abs(b):
                return ValueWithBudget(a / b, math.inf)
            # |a/b - a'/b'| <= (|Δa| + |a/b||Δb|) / (|b| - |Δb|)
            bud = (self.budget + abs(a / b) * other.budget) / (abs(b) - other.budget)
            return ValueWithBudget(a / b, _up(bud))
        return ValueWithBudget(self.value / other, _up(self.budget / abs(other)))

    def agrees_with(self, other: "ValueWithBudget") -> bool:
        """True if the two intervals overlap (values agree within budgets)."""
        return abs(self.value - other.value) <= self.budget + other.budget

    def __format__(self, spec: str) -> str:
        spec = spec or ".10g"
        v = self.value
        if isinstance(v, complex) and v.imag != 0.0:
            sign = "+" if v.imag >= 0 else "-"
            body = f"{v.real:{spec}} {sign} {abs(v.imag):{spec}}i"
        else:
            body = f"{v.real if isinstance(v, complex) else v:{spec}}"
        return f"{body} ± {self.budget:.3g}"

    def __str__(self) -> str:
        return format(self)
