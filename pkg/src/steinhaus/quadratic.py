"""Exact arithmetic in Q(sqrt 2) and the period-8 trigonometric lookup."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

__all__ = ["QSqrt2", "cos_quarter_pi", "sin_quarter_pi"]

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class QSqrt2:
    """The number ``a + b*sqrt(2)`` with rational ``a`` and ``b``."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    @staticmethod
    def _lift(other: QSqrt2 | Rational) -> QSqrt2:
        return other if isinstance(other, QSqrt2) else QSqrt2(Fraction(other))

    def __add__(self, other: QSqrt2 | Rational) -> QSqrt2:
        o = self._lift(other)
        return QSqrt2(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self) -> QSqrt2:
        return QSqrt2(-self.a, -self.b)

    def __sub__(self, other: QSqrt2 | Rational) -> QSqrt2:
        return self + (-self._lift(other))

    def __rsub__(self, other: Rational) -> QSqrt2:
        return self._lift(other) - self

    def __mul__(self, other: QSqrt2 | Rational) -> QSqrt2:
        o = self._lift(other)
        return QSqrt2(self.a * o.a + 2 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __truediv__(self, other: Rational) -> QSqrt2:
        if isinstance(other, QSqrt2):
            raise TypeError("division is only supported by rationals")
        return QSqrt2(self.a / other, self.b / other)

    def is_rational(self) -> bool:
        return self.b == 0

    def is_integer(self) -> bool:
        return self.b == 0 and self.a.denominator == 1

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * 2**0.5

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        return f"{self.a}+{self.b}*sqrt(2)"


_HALF_ROOT2 = QSqrt2(0, Fraction(1, 2))
_ONE = QSqrt2(1)
_ZERO = QSqrt2()

# cos(m*pi/4) and sin(m*pi/4) for m = 0..7
_COS = (_ONE, _HALF_ROOT2, _ZERO, -_HALF_ROOT2, -_ONE, -_HALF_ROOT2, _ZERO, _HALF_ROOT2)
_SIN = (_ZERO, _HALF_ROOT2, _ONE, _HALF_ROOT2, _ZERO, -_HALF_ROOT2, -_ONE, -_HALF_ROOT2)


def cos_quarter_pi(m: int) -> QSqrt2:
    """Exact ``cos(m * pi / 4)``."""
    return _COS[m % 8]


def sin_quarter_pi(m: int) -> QSqrt2:
    """Exact ``sin(m * pi / 4)``."""
    return _SIN[m % 8]
