"""Clifford-valued polynomials in x_1..x_m with exact operator calculus.

A CliffordPoly stores terms as {exponent tuple -> Multivector}; the
Multivector coefficient sits to the LEFT of the (commuting, scalar)
monomial. All noncommutativity therefore lives inside coefficient
products: the Dirac operator acts by left multiplication with e_i, so
identities like x c = c* x for Cl(1,1)-valued c come out of the blade
product itself and never need a separate rewriting pass.
"""

from __future__ import annotations

from typing import Dict, Sequence, Tuple

from .algebra import AlgebraContext, AlgebraMismatchError, Multivector
from .scalars import Scalar

Exponents = Tuple[int, ...]


class CliffordPoly:
    """Polynomial with left Multivector coefficients, value semantics."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: AlgebraContext, terms: Dict[Exponents, Multivector]):
        self.ctx = ctx
        self.terms = terms

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, ctx: AlgebraContext) -> "CliffordPoly":
        return cls(ctx, {})

    @classmethod
    def constant(cls, ctx: AlgebraContext, coeff) -> "CliffordPoly":
        """Constant polynomial from a Multivector or plain scalar."""
        mv = coeff if isinstance(coeff, Multivector) else ctx.scalar(coeff)
        zero_exps = (0,) * ctx.m
        return cls(ctx, {zero_exps: mv} if not mv.is_zero() else {})

    @classmethod
    def monomial(cls, ctx: AlgebraContext, exps: Sequence[int], coeff) -> "CliffordPoly":
        exps = tuple(exps)
        if len(exps) != ctx.m or any(e < 0 for e in exps):
            raise ValueError(f"bad exponent tuple {exps!r} for m={ctx.m}")
        mv = coeff if isinstance(coeff, Multivector) else ctx.scalar(coeff)
        return cls(ctx, {exps: mv} if not mv.is_zero() else {})

    # -- inspection -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_exact(self) -> bool:
        return all(mv.is_exact() for mv in self.terms.values())

    def degree(self) -> int:
        """Total spatial degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def max_abs(self) -> float:
        return max((mv.max_abs() for mv in self.terms.values()), default=0.0)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for exps in sorted(self.terms):
            mono = "*".join(
                f"x{i + 1}^{e}" if e > 1 else f"x{i + 1}"
                for i, e in enumerate(exps) if e
            )
            c = repr(self.terms[exps])
            bits.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(bits)

    def __eq__(self, other):
        if isinstance(other, CliffordPoly):
            return self.ctx == other.ctx and self.terms == other.terms
        return NotImplemented

    # -- linear structure -------------------------------------------------------

    def _check(self, other: "CliffordPoly"):
        if self.ctx != other.ctx:
            raise AlgebraMismatchError("polynomials over different algebra contexts")

    def __add__(self, other):
        if not isinstance(other, CliffordPoly):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for exps, mv in other.terms.items():
            s = out.get(exps)
            s = mv if s is None else s + mv
            if s.is_zero():
                out.pop(exps, None)
            else:
                out[exps] = s
        return CliffordPoly(self.ctx, out)

    def __neg__(self):
        return CliffordPoly(self.ctx, {e: -mv for e, mv in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        """Product; scalars and Multivectors multiply every coefficient.

        For a Multivector right operand the product is p * const(mv);
        use lmul for mv * p since Python routes that through __rmul__.
        """
        if isinstance(other, CliffordPoly):
            self._check(other)
            ctx = self.ctx
            mul_row = ctx.mul_row
            acc: Dict[Exponents, Dict[int, Scalar]] = {}
            for ea, ca in self.terms.items():
                ta = ca.terms
                for eb, cb in other.terms.items():
                    exps = tuple(a + b for a, b in zip(ea, eb))
                    tgt = acc.get(exps)
                    if tgt is None:
                        tgt = acc[exps] = {}
                    for ma, va in ta.items():
                        if ma:
                            row = mul_row(ma)
                            for mb, vb in cb.terms.items():
                                mask, sign = row[mb]
                                v = va * vb if sign > 0 else -(va * vb)
                                s = tgt.get(mask, 0) + v
                                if s:
                                    tgt[mask] = s
                                else:
                                    tgt.pop(mask, None)
                        else:   # scalar blade: no sign, no mask change
                            for mb, vb in cb.terms.items():
                                s = tgt.get(mb, 0) + va * vb
                                if s:
                                    tgt[mb] = s
                                else:
                                    tgt.pop(mb, None)
            out = {exps: Multivector(ctx, t) for exps, t in acc.items() if t}
            return CliffordPoly(ctx, out)
        if isinstance(other, Multivector):
            return self.rmul(other)
        return self.scale(other)

    def __rmul__(self, other):
        if isinstance(other, Multivector):
            return self.lmul(other)
        return self.scale(other)

    def scale(self, value: Scalar) -> "CliffordPoly":
        out = {}
        for exps, mv in self.terms.items():
            s = mv * value
            if not s.is_zero():
                out[exps] = s
        return CliffordPoly(self.ctx, out)

    def lmul(self, mv: Multivector) -> "CliffordPoly":
        """Left multiplication by a constant Multivector."""
        out = {}
        for exps, c in self.terms.items():
            s = mv * c
            if not s.is_zero():
                out[exps] = s
        return CliffordPoly(self.ctx, out)

    def rmul(self, mv: Multivector) -> "CliffordPoly":
        """Right multiplication by a constant Multivector."""
        out = {}
        for exps, c in self.terms.items():
            s = c * mv
            if not s.is_zero():
                out[exps] = s
        return CliffordPoly(self.ctx, out)

    def __truediv__(self, value: Scalar) -> "CliffordPoly":
        out = {}
        for exps, mv in self.terms.items():
            s = mv / value
            if not s.is_zero():
                out[exps] = s
        return CliffordPoly(self.ctx, out)

    # -- operators ---------------------------------------------------------------

    def partial(self, i: int) -> "CliffordPoly":
        """Scalar derivative d/dx_{i+1} (0-based index)."""
        out: Dict[Exponents, Multivector] = {}
        for exps, mv in self.terms.items():
            n = exps[i]
            if not n:
                continue
            new = exps[:i] + (n - 1,) + exps[i + 1:]
            s = mv * n
            prev = out.get(new)
            s = s if prev is None else prev + s
            if s.is_zero():
                out.pop(new, None)
            else:
                out[new] = s
        return CliffordPoly(self.ctx, out)

    def dirac(self) -> "CliffordPoly":
        """Left Dirac operator sum_i e_i d/dx_i; dirac(dirac(p)) = -laplacian(p)."""
        ctx = self.ctx
        rows = [ctx.mul_row(1 << (i + 1)) for i in range(ctx.m)]  # e_{i+1} rows
        acc: Dict[Exponents, Dict[int, Scalar]] = {}
        for exps, mv in self.terms.items():
            for i, n in enumerate(exps):
                if not n:
                    continue
                new = exps[:i] + (n - 1,) + exps[i + 1:]
                tgt = acc.get(new)
                if tgt is None:
                    tgt = acc[new] = {}
                row = rows[i]
                for mask, v in mv.terms.items():
                    pmask, sign = row[mask]
                    w = v * n if sign > 0 else -(v * n)
                    s = tgt.get(pmask, 0) + w
                    if s:
                        tgt[pmask] = s
                    else:
                        tgt.pop(pmask, None)
        out = {e: Multivector(ctx, t) for e, t in acc.items() if t}
        return CliffordPoly(ctx, out)

    def laplacian(self) -> "CliffordPoly":
        out: Dict[Exponents, Multivector] = {}
        for exps, mv in self.terms.items():
            for i, n in enumerate(exps):
                if n < 2:
                    continue
                new = exps[:i] + (n - 2,) + exps[i + 1:]
                s = mv * (n * (n - 1))
                prev = out.get(new)
                s = s if prev is None else prev + s
                if s.is_zero():
                    out.pop(new, None)
                else:
                    out[new] = s
        return CliffordPoly(self.ctx, out)

    def euler(self) -> "CliffordPoly":
        """Euler operator sum_i x_i d/dx_i; multiplies each term by its degree."""
        out = {}
        for exps, mv in self.terms.items():
            d = sum(exps)
            if not d:
                continue
            out[exps] = mv * d
        return CliffordPoly(self.ctx, out)

    def truncate_degree(self, max_degree: int) -> "CliffordPoly":
        """Drop every monomial of degree above max_degree."""
        return CliffordPoly(self.ctx, {exps: mv for exps, mv in self.terms.items()
                                       if sum(exps) <= max_degree})

    def evaluate(self, point: Sequence[Scalar]) -> Multivector:
        if len(point) != self.ctx.m:
            raise ValueError(f"point has {len(point)} coordinates, expected {self.ctx.m}")
        total = self.ctx.zero()
        for exps, mv in self.terms.items():
            w: Scalar = 1
            for x, n in zip(point, exps):
                if n:
                    w = w * x ** n
            total = total + mv * w
        return total


def vector_variable(ctx: AlgebraContext) -> CliffordPoly:
    """x = sum_i e_i x_i, satisfying x*x = -rho^2."""
    terms = {}
    for i in range(ctx.m):
        exps = tuple(1 if j == i else 0 for j in range(ctx.m))
        terms[exps] = ctx.e(i + 1)
    return CliffordPoly(ctx, terms)


def rho_squared(ctx: AlgebraContext) -> CliffordPoly:
    """rho^2 = sum_i x_i^2 (scalar coefficients)."""
    terms = {}
    for i in range(ctx.m):
        exps = tuple(2 if j == i else 0 for j in range(ctx.m))
        terms[exps] = ctx.one()
    return CliffordPoly(ctx, terms)
