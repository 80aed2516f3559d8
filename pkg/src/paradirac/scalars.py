"""Scalar coefficient domains.

Coefficients throughout the package are duck-typed Python numbers: int,
fractions.Fraction and GaussianRational for exact work, float and complex
for floating sweeps. GaussianRational supplies the exact complex domain
(rational real and imaginary parts) that plain Fraction lacks.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Exact = Union[int, Fraction, "GaussianRational"]
Scalar = Union[int, float, complex, Fraction, "GaussianRational"]


class GaussianRational:
    """Complex number with Fraction real and imaginary parts.

    Closed under +, -, *, / (division by zero raises ZeroDivisionError).
    Mixed arithmetic with int and Fraction promotes the other operand;
    mixed arithmetic with float/complex degrades to complex.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def __repr__(self):
        if not self.im:
            return f"GaussianRational({self.re})"
        return f"GaussianRational({self.re}, {self.im})"

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if isinstance(other, (float, complex)):
            return complex(self) == complex(other)
        return NotImplemented

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __add__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re + other, self.im)
        if isinstance(other, (float, complex)):
            return complex(self) + other
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re * other, self.im * other)
        if isinstance(other, (float, complex)):
            return complex(self) * other
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re / other, self.im / other)
        if isinstance(other, GaussianRational):
            den = other.re * other.re + other.im * other.im
            if not den:
                raise ZeroDivisionError("division by zero GaussianRational")
            num = self * other.conjugate()
            return GaussianRational(num.re / den, num.im / den)
        if isinstance(other, (float, complex)):
            return complex(self) / other
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other) / self
        if isinstance(other, (float, complex)):
            return other / complex(self)
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out


def is_exact(value: Scalar) -> bool:
    """True when the scalar lives in an exact domain (no rounding)."""
    return isinstance(value, (int, Fraction, GaussianRational))


def to_complex(value: Scalar) -> complex:
    return complex(value)


def scalar_abs(value: Scalar) -> float:
    return abs(complex(value))


def conj_scalar(value: Scalar) -> Scalar:
    """Complex conjugate staying inside the operand's domain."""
    if isinstance(value, (int, Fraction, float)):
        return value
    if isinstance(value, GaussianRational):
        return value.conjugate()
    return value.conjugate()
