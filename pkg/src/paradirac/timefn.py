"""Exact calculus in the time variable and space-time expressions.

Time profiles live in span{t^n e^{lambda t}}, the smallest class closed
under d/dt that contains polynomials and exponentials. The operator
symbol s = d/dt therefore acts exactly: s never needs an inverse here,
because the hypergeometric operator series below only ever applies
nonnegative powers of s to the profile.

SpaceTimeFunction combines the spatial polynomial engine with that time
class: terms are indexed by (exponents, n, lambda) with a left
Multivector coefficient, and carry the Dirac, Laplace, and d/dt
operators plus the parabolic operator D = d_x + f d_t + fdag.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from typing import Dict, Sequence, Tuple

from .algebra import AlgebraContext, AlgebraMismatchError, Multivector, split, witt_basis
from .poly import CliffordPoly, rho_squared
from .scalars import Scalar, is_exact

TimeKey = Tuple[int, Scalar]          # (n, lambda)
SpaceTimeKey = Tuple[Tuple[int, ...], int, Scalar]


def pochhammer(a: Scalar, k: int):
    """Rising factorial (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1."""
    if k < 0:
        raise ValueError("pochhammer needs k >= 0")
    out = 1
    for j in range(k):
        out = out * (a + j)
    return out


def _norm_lambda(lam: Scalar) -> Scalar:
    # canonical zero so polynomial and exponential keys never alias
    return lam if lam else 0


class TimeFunction:
    """Finite sum of c * t^n * e^{lambda t} with Multivector coefficient c."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: AlgebraContext, terms: Dict[TimeKey, Multivector]):
        self.ctx = ctx
        self.terms = terms

    @classmethod
    def zero(cls, ctx: AlgebraContext) -> "TimeFunction":
        return cls(ctx, {})

    @classmethod
    def term(cls, ctx: AlgebraContext, coeff, n: int = 0, lam: Scalar = 0) -> "TimeFunction":
        """Single term c*t^n*e^{lam t}; coeff may be a scalar or Multivector."""
        if n < 0:
            raise ValueError("t exponent must be >= 0")
        mv = coeff if isinstance(coeff, Multivector) else ctx.scalar(coeff)
        if mv.is_zero():
            return cls(ctx, {})
        return cls(ctx, {(n, _norm_lambda(lam)): mv})

    @classmethod
    def polynomial(cls, ctx: AlgebraContext, coeffs: Sequence[Scalar]) -> "TimeFunction":
        """Polynomial sum coeffs[n] * t^n."""
        out = {}
        for n, c in enumerate(coeffs):
            if c:
                out[(n, 0)] = ctx.scalar(c)
        return cls(ctx, out)

    def is_zero(self) -> bool:
        return not self.terms

    def is_polynomial(self) -> bool:
        return all(lam == 0 for _, lam in self.terms)

    def is_exact(self) -> bool:
        return all(
            mv.is_exact() and is_exact(lam)
            for (_, lam), mv in self.terms.items()
        )

    def max_n(self) -> int:
        return max((n for n, _ in self.terms), default=0)

    def __eq__(self, other):
        if isinstance(other, TimeFunction):
            return self.ctx == other.ctx and self.terms == other.terms
        return NotImplemented

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for (n, lam) in sorted(self.terms, key=lambda k: (k[0], repr(k[1]))):
            c = self.terms[(n, lam)]
            piece = f"({c!r})"
            if n:
                piece += f"*t^{n}"
            if lam != 0:
                piece += f"*exp({lam!r}*t)"
            bits.append(piece)
        return " + ".join(bits)

    def __add__(self, other):
        if not isinstance(other, TimeFunction):
            return NotImplemented
        if self.ctx != other.ctx:
            raise AlgebraMismatchError("time functions over different contexts")
        out = dict(self.terms)
        for key, mv in other.terms.items():
            s = out.get(key)
            s = mv if s is None else s + mv
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
        return TimeFunction(self.ctx, out)

    def __neg__(self):
        return TimeFunction(self.ctx, {k: -mv for k, mv in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, value: Scalar) -> "TimeFunction":
        out = {}
        for key, mv in self.terms.items():
            s = mv * value
            if not s.is_zero():
                out[key] = s
        return TimeFunction(self.ctx, out)

    def __mul__(self, other):
        if isinstance(other, TimeFunction):
            if self.ctx != other.ctx:
                raise AlgebraMismatchError("time functions over different contexts")
            out: Dict[TimeKey, Multivector] = {}
            for (na, la), ca in self.terms.items():
                for (nb, lb), cb in other.terms.items():
                    key = (na + nb, _norm_lambda(la + lb))
                    mv = ca * cb
                    s = out.get(key)
                    s = mv if s is None else s + mv
                    if s.is_zero():
                        out.pop(key, None)
                    else:
                        out[key] = s
            return TimeFunction(self.ctx, out)
        return self.scale(other)

    __rmul__ = __mul__

    def __truediv__(self, value: Scalar) -> "TimeFunction":
        out = {}
        for key, mv in self.terms.items():
            s = mv / value
            if not s.is_zero():
                out[key] = s
        return TimeFunction(self.ctx, out)

    def d_dt(self) -> "TimeFunction":
        """Exact derivative: c t^n e^{lt} -> c n t^{n-1} e^{lt} + c l t^n e^{lt}."""
        out: Dict[TimeKey, Multivector] = {}

        def put(key, mv):
            s = out.get(key)
            s = mv if s is None else s + mv
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s

        for (n, lam), mv in self.terms.items():
            if n:
                put((n - 1, lam), mv * n)
            if lam != 0:
                put((n, lam), mv * lam)
        return TimeFunction(self.ctx, out)

    def evaluate(self, t: Scalar) -> Multivector:
        total = self.ctx.zero()
        for (n, lam), mv in self.terms.items():
            w = t ** n if n else 1
            if lam != 0:
                w = complex(w) * cmath.exp(complex(lam) * complex(t))
            total = total + mv * w
        return total


class SpaceTimeFunction:
    """Sum of c * x^alpha * t^n * e^{lambda t} with left Multivector c."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: AlgebraContext, terms: Dict[SpaceTimeKey, Multivector]):
        self.ctx = ctx
        self.terms = terms

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, ctx: AlgebraContext) -> "SpaceTimeFunction":
        return cls(ctx, {})

    @classmethod
    def from_poly(cls, p: CliffordPoly, tf: TimeFunction | None = None) -> "SpaceTimeFunction":
        """p(x) * a(t); with tf omitted the profile is the constant 1."""
        ctx = p.ctx
        if tf is None:
            return cls(ctx, {(exps, 0, 0): mv for exps, mv in p.terms.items()})
        if tf.ctx != ctx:
            raise AlgebraMismatchError("poly and time profile over different contexts")
        out: Dict[SpaceTimeKey, Multivector] = {}
        for exps, cp in p.terms.items():
            for (n, lam), ct in tf.terms.items():
                mv = cp * ct
                key = (exps, n, lam)
                s = out.get(key)
                s = mv if s is None else s + mv
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
        return cls(ctx, out)

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_exact(self) -> bool:
        return all(
            mv.is_exact() and is_exact(key[2])
            for key, mv in self.terms.items()
        )

    def degree_space(self) -> int:
        if not self.terms:
            return -1
        return max(sum(key[0]) for key in self.terms)

    def spatial_degrees(self):
        return sorted({sum(key[0]) for key in self.terms})

    def max_abs(self) -> float:
        return max((mv.max_abs() for mv in self.terms.values()), default=0.0)

    def __eq__(self, other):
        if isinstance(other, SpaceTimeFunction):
            return self.ctx == other.ctx and self.terms == other.terms
        return NotImplemented

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for key in sorted(self.terms, key=lambda k: (k[0], k[1], repr(k[2]))):
            exps, n, lam = key
            c = self.terms[key]
            mono = "*".join(
                f"x{i + 1}^{e}" if e > 1 else f"x{i + 1}"
                for i, e in enumerate(exps) if e
            )
            piece = f"({c!r})"
            if mono:
                piece += "*" + mono
            if n:
                piece += f"*t^{n}"
            if lam != 0:
                piece += f"*exp({lam!r}*t)"
            bits.append(piece)
        return " + ".join(bits)

    # -- linear structure ----------------------------------------------------

    def _check(self, other: "SpaceTimeFunction"):
        if self.ctx != other.ctx:
            raise AlgebraMismatchError("space-time functions over different contexts")

    def _put(self, out, key, mv):
        s = out.get(key)
        s = mv if s is None else s + mv
        if s.is_zero():
            out.pop(key, None)
        else:
            out[key] = s

    def __add__(self, other):
        if not isinstance(other, SpaceTimeFunction):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for key, mv in other.terms.items():
            self._put(out, key, mv)
        return SpaceTimeFunction(self.ctx, out)

    def __neg__(self):
        return SpaceTimeFunction(self.ctx, {k: -mv for k, mv in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, value: Scalar) -> "SpaceTimeFunction":
        out = {}
        for key, mv in self.terms.items():
            s = mv * value
            if not s.is_zero():
                out[key] = s
        return SpaceTimeFunction(self.ctx, out)

    def lmul(self, mv: Multivector) -> "SpaceTimeFunction":
        out = {}
        for key, c in self.terms.items():
            s = mv * c
            if not s.is_zero():
                out[key] = s
        return SpaceTimeFunction(self.ctx, out)

    def rmul(self, mv: Multivector) -> "SpaceTimeFunction":
        out = {}
        for key, c in self.terms.items():
            s = c * mv
            if not s.is_zero():
                out[key] = s
        return SpaceTimeFunction(self.ctx, out)

    def mul_time(self, tf: TimeFunction) -> "SpaceTimeFunction":
        """Right product with a time profile (time scalars commute)."""
        out: Dict[SpaceTimeKey, Multivector] = {}
        for (exps, n, lam), c in self.terms.items():
            for (nb, lb), ct in tf.terms.items():
                mv = c * ct
                self._put(out, (exps, n + nb, _norm_lambda(lam + lb)), mv)
        return SpaceTimeFunction(self.ctx, out)

    # -- operators ----------------------------------------------------------------

    def d_dt(self) -> "SpaceTimeFunction":
        out: Dict[SpaceTimeKey, Multivector] = {}
        for (exps, n, lam), mv in self.terms.items():
            if n:
                self._put(out, (exps, n - 1, lam), mv * n)
            if lam != 0:
                self._put(out, (exps, n, lam), mv * lam)
        return SpaceTimeFunction(self.ctx, out)

    def partial(self, i: int) -> "SpaceTimeFunction":
        out: Dict[SpaceTimeKey, Multivector] = {}
        for (exps, n, lam), mv in self.terms.items():
            d = exps[i]
            if not d:
                continue
            new = exps[:i] + (d - 1,) + exps[i + 1:]
            self._put(out, (new, n, lam), mv * d)
        return SpaceTimeFunction(self.ctx, out)

    def dirac(self) -> "SpaceTimeFunction":
        ctx = self.ctx
        out: Dict[SpaceTimeKey, Multivector] = {}
        e_mvs = [ctx.e(i + 1) for i in range(ctx.m)]
        for (exps, n, lam), mv in self.terms.items():
            for i, d in enumerate(exps):
                if not d:
                    continue
                new = exps[:i] + (d - 1,) + exps[i + 1:]
                self._put(out, (new, n, lam), (e_mvs[i] * mv) * d)
        return SpaceTimeFunction(ctx, out)

    def laplacian(self) -> "SpaceTimeFunction":
        out: Dict[SpaceTimeKey, Multivector] = {}
        for (exps, n, lam), mv in self.terms.items():
            for i, d in enumerate(exps):
                if d < 2:
                    continue
                new = exps[:i] + (d - 2,) + exps[i + 1:]
                self._put(out, (new, n, lam), mv * (d * (d - 1)))
        return SpaceTimeFunction(self.ctx, out)

    def truncate_space_degree(self, max_degree: int) -> "SpaceTimeFunction":
        out = {k: mv for k, mv in self.terms.items() if sum(k[0]) <= max_degree}
        return SpaceTimeFunction(self.ctx, out)

    def split(self):
        """Four component functions (F0, F1, F2, F3), coefficients in Cl(0,m)."""
        outs = ({}, {}, {}, {})
        for key, mv in self.terms.items():
            parts = split(mv)
            for which, comp in enumerate((parts.f0, parts.f1, parts.f2, parts.f3)):
                if not comp.is_zero():
                    self._put(outs[which], key, comp)
        return tuple(SpaceTimeFunction(self.ctx, d) for d in outs)

    def evaluate(self, point: Sequence[Scalar], t: Scalar = 0) -> Multivector:
        if len(point) != self.ctx.m:
            raise ValueError(f"point has {len(point)} coordinates, expected {self.ctx.m}")
        total = self.ctx.zero()
        for (exps, n, lam), mv in self.terms.items():
            w: Scalar = 1
            for x, d in zip(point, exps):
                if d:
                    w = w * x ** d
            if n:
                w = w * t ** n
            if lam != 0:
                w = complex(w) * cmath.exp(complex(lam) * complex(t))
            total = total + mv * w
        return total


def assemble_split(f0, f1, f2, f3) -> SpaceTimeFunction:
    """F0 + f*F1 + fdag*F2 + f*fdag*F3 for SpaceTimeFunction components."""
    ctx = f0.ctx
    f, fdag = witt_basis(ctx)
    return f0 + f1.lmul(f) + f2.lmul(fdag) + f3.lmul(f * fdag)


def parabolic_dirac(F: SpaceTimeFunction) -> SpaceTimeFunction:
    """D F = d_x F + f d_t F + fdag F."""
    f, fdag = witt_basis(F.ctx)
    return F.dirac() + F.d_dt().lmul(f) + F.lmul(fdag)


def heat_residual(F: SpaceTimeFunction) -> SpaceTimeFunction:
    """(Delta - d_t) F; D squares to the negative of this operator."""
    return F.laplacian() - F.d_dt()


def apply_0F1(gamma, base: CliffordPoly, a: TimeFunction, L: int) -> SpaceTimeFunction:
    """Operator series 0F1(gamma; rho^2 s / 4) applied to base(x) * a(t).

    Returns sum_{l} rho^{2l} * base * a^{(l)}(t) / (4^l l! (gamma)_l).
    For a polynomial profile the series terminates by itself (the l-th
    derivative dies); otherwise it is truncated at l = L.
    """
    if gamma <= 0 and (isinstance(gamma, int) or (isinstance(gamma, Fraction) and gamma.denominator == 1)):
        raise ValueError(f"0F1 pole: gamma = {gamma} is a nonpositive integer")
    if L < 0:
        raise ValueError("truncation must be >= 0")
    ctx = base.ctx
    last = a.max_n() if a.is_polynomial() else L
    rho2 = rho_squared(ctx)

    total = SpaceTimeFunction.zero(ctx)
    spatial = base          # rho^{2l} * base
    deriv = a               # a^{(l)}
    # integer gamma would otherwise fall into float division below
    weight: Scalar = Fraction(1) if isinstance(gamma, (int, Fraction)) else 1
    for l in range(last + 1):
        if deriv.is_zero():
            break
        if l:
            spatial = rho2 * spatial
            weight = weight / (4 * l * (gamma + l - 1))
        total = total + SpaceTimeFunction.from_poly(spatial, deriv).scale(weight)
        deriv = deriv.d_dt()
    return total
