"""The Cl(1,1) parameter element zeta and analytic functions of zeta* zeta.

zeta = a f fdag + b f + c fdag + d fdag f is represented faithfully by
the 2x2 matrix [[a, b], [c, d]] (f fdag, f, fdag, fdag f map to the four
matrix units), so products, involution, inversion, and eigenvalue work
all happen at matrix level. xi = (f fdag - fdag f) zeta has matrix
[[a, b], [-c, -d]] and satisfies xi^2 = zeta* zeta, which is what lets an
analytic psi(zeta* zeta) be evaluated through the eigenvalues of xi:
Sylvester's two-point interpolation for distinct eigenvalues, and its
confluent limit psi(l^2) + 2 l psi'(l^2) (xi - l) for a repeated one.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .algebra import AlgebraContext, Multivector, witt_basis
from .scalars import Scalar, is_exact

# repeated-eigenvalue branch: relative gap below this uses the confluent formula
BRANCH_TOL = 1e-9


class NotInvertibleError(ZeroDivisionError):
    """zeta has zero determinant and cannot be inverted."""


@dataclass(frozen=True)
class ZetaElement:
    """a f fdag + b f + c fdag + d fdag f, matrix rep [[a, b], [c, d]]."""

    a: Scalar = 0
    b: Scalar = 0
    c: Scalar = 0
    d: Scalar = 0

    @classmethod
    def identity(cls) -> "ZetaElement":
        return cls(1, 0, 0, 1)

    @classmethod
    def zero(cls) -> "ZetaElement":
        return cls(0, 0, 0, 0)

    def is_exact(self) -> bool:
        return all(is_exact(v) for v in (self.a, self.b, self.c, self.d))

    def is_zero(self) -> bool:
        return not (self.a or self.b or self.c or self.d)

    def entries(self) -> Tuple[Scalar, Scalar, Scalar, Scalar]:
        return (self.a, self.b, self.c, self.d)

    # -- algebra ---------------------------------------------------------

    def involution(self) -> "ZetaElement":
        """Main involution: zeta* = a f fdag - b f - c fdag + d fdag f."""
        return ZetaElement(self.a, -self.b, -self.c, self.d)

    def xi(self) -> "ZetaElement":
        """xi = (f fdag - fdag f) zeta, matrix [[a, b], [-c, -d]]."""
        return ZetaElement(self.a, self.b, -self.c, -self.d)

    def __add__(self, other: "ZetaElement") -> "ZetaElement":
        return ZetaElement(self.a + other.a, self.b + other.b,
                           self.c + other.c, self.d + other.d)

    def __sub__(self, other: "ZetaElement") -> "ZetaElement":
        return ZetaElement(self.a - other.a, self.b - other.b,
                           self.c - other.c, self.d - other.d)

    def __neg__(self) -> "ZetaElement":
        return ZetaElement(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, other):
        if isinstance(other, ZetaElement):
            a, b, c, d = self.entries()
            e, f_, g, h = other.entries()
            return ZetaElement(a * e + b * g, a * f_ + b * h,
                               c * e + d * g, c * f_ + d * h)
        return self.scale(other)

    def __rmul__(self, value):
        return self.scale(value)

    def scale(self, value: Scalar) -> "ZetaElement":
        return ZetaElement(self.a * value, self.b * value,
                           self.c * value, self.d * value)

    def star_zeta(self) -> "ZetaElement":
        """zeta* zeta; equal to xi^2."""
        return self.involution() * self

    def zeta_star(self) -> "ZetaElement":
        """zeta zeta*; the involution image of zeta* zeta."""
        return self * self.involution()

    def det(self) -> Scalar:
        return self.a * self.d - self.b * self.c

    def is_invertible(self) -> bool:
        return bool(self.det())

    def invert(self) -> "ZetaElement":
        det = self.det()
        if not det:
            raise NotInvertibleError(f"zeta {self.entries()} has det = 0")
        if isinstance(det, int):
            det = Fraction(det)       # keep integer entries exact
        return ZetaElement(self.d / det, -self.b / det,
                           -self.c / det, self.a / det)

    # -- spectral data -----------------------------------------------------

    def eigenvalues_xi(self) -> Tuple[complex, complex]:
        """Eigenvalues of xi: l = ((a-d) +- sqrt((a+d)^2 - 4bc)) / 2.

        Principal square root branch; the pair enters all formulas
        symmetrically, so the branch choice is unobservable.
        """
        a, b, c, d = (complex(v) for v in self.entries())
        root = cmath.sqrt((a + d) ** 2 - 4 * b * c)
        return ((a - d + root) / 2, (a - d - root) / 2)

    # -- embedding ------------------------------------------------------------

    def to_multivector(self, ctx: AlgebraContext) -> Multivector:
        f, fdag = witt_basis(ctx)
        return (f * fdag) * self.a + f * self.b + fdag * self.c + (fdag * f) * self.d

    @classmethod
    def from_multivector(cls, mv: Multivector) -> "ZetaElement":
        """Inverse of to_multivector; requires a pure Cl(1,1) element."""
        from .algebra import split as split_mv

        parts = split_mv(mv)
        for comp in (parts.f0, parts.f1, parts.f2, parts.f3):
            if any(mask for mask in comp.terms):
                raise ValueError("multivector has components outside Cl(1,1)")
        s0 = parts.f0.scalar_part()
        s3 = parts.f3.scalar_part()
        # u = s0 + f s1 + fdag s2 + f fdag s3 with 1 = f fdag + fdag f
        return cls(s0 + s3, parts.f1.scalar_part(), parts.f2.scalar_part(), s0)


class PowerSeries:
    """psi(w) = sum_n coeffs[n] w^n; carries its own derivative series."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Scalar]):
        self.coeffs = list(coeffs)

    def __call__(self, w: Scalar) -> Scalar:
        total: Scalar = 0
        for c in reversed(self.coeffs):
            total = total * w + c
        return total

    def derivative(self) -> "PowerSeries":
        return PowerSeries([n * c for n, c in enumerate(self.coeffs)][1:] or [0])

    @classmethod
    def exp(cls, n_terms: int = 60) -> "PowerSeries":
        coeffs: List[Scalar] = [Fraction(1)]
        for n in range(1, n_terms + 1):
            coeffs.append(coeffs[-1] / n)
        return cls(coeffs)

    @classmethod
    def hyp0f1(cls, gamma: Scalar, n_terms: int = 60) -> "PowerSeries":
        """0F1(gamma; w) = sum w^n / (n! (gamma)_n)."""
        coeffs: List[Scalar] = [Fraction(1)]
        g = Fraction(gamma) if isinstance(gamma, int) else gamma
        for n in range(1, n_terms + 1):
            coeffs.append(coeffs[-1] / (n * (g + n - 1)))
        return cls(coeffs)

    @classmethod
    def cosh_sqrt(cls, n_terms: int = 60) -> "PowerSeries":
        """cosh(sqrt(w)) = sum w^n / (2n)!; a cos-like entire series."""
        coeffs: List[Scalar] = [Fraction(1)]
        for n in range(1, n_terms + 1):
            coeffs.append(coeffs[-1] / ((2 * n - 1) * (2 * n)))
        return cls(coeffs)


def series_eval(psi: PowerSeries, z: ZetaElement, L: int) -> ZetaElement:
    """sum_{n<=L} psi_n (zeta* zeta)^n by direct Cl(1,1) powers."""
    if L < 0:
        raise ValueError("truncation must be >= 0")
    w = z.star_zeta()
    power = ZetaElement.identity()
    total = ZetaElement.zero()
    for n, cn in enumerate(psi.coeffs[: L + 1]):
        if n:
            power = power * w
        if cn:
            total = total + power.scale(cn)
    return total


def sylvester_eval(psi: PowerSeries, z: ZetaElement) -> ZetaElement:
    """psi(zeta* zeta) through the eigenvalues of xi.

    Distinct branch:  psi(l+^2) (xi - l-)/(l+ - l-) + psi(l-^2) (xi - l+)/(l- - l+).
    Repeated branch (relative gap below BRANCH_TOL): the confluent limit
    psi(l^2) + 2 l psi'(l^2) (xi - l).
    """
    lp, lm = z.eigenvalues_xi()
    xi = ZetaElement(*(complex(v) for v in z.xi().entries()))
    ident = ZetaElement.identity()
    gap = abs(lp - lm)
    if gap < BRANCH_TOL * max(1.0, abs(lp) + abs(lm)):
        lam = (lp + lm) / 2
        dpsi = psi.derivative()
        base = ident.scale(complex(psi(lam * lam)))
        corr = (xi - ident.scale(lam)).scale(2 * lam * complex(dpsi(lam * lam)))
        return base + corr
    left = (xi - ident.scale(lm)).scale(complex(psi(lp * lp)) / (lp - lm))
    right = (xi - ident.scale(lp)).scale(complex(psi(lm * lm)) / (lm - lp))
    return left + right
