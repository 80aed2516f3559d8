"""Clifford algebra Cl(1, m+1) with the nilpotent Witt pair.

Generators are ordered (eps, e_1, ..., e_{m+1}) with eps^2 = +1 and
e_j^2 = -1; distinct generators anticommute. Blades are bitmasks over
that order: bit 0 is eps, bit j is e_j. The Witt elements

    f = (e_{m+1} - eps)/2        fdag = -(e_{m+1} + eps)/2

satisfy f^2 = fdag^2 = 0 and f fdag + fdag f = 1, and every element
decomposes uniquely as F0 + f F1 + fdag F2 + f fdag F3 with components
in the subalgebra generated by e_1..e_m.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Tuple

from .scalars import GaussianRational, Scalar, is_exact


class AlgebraMismatchError(ValueError):
    """Operands belong to different algebra contexts."""


class AlgebraContext:
    """Cl(1, m+1) for spatial dimension m >= 1.

    Holds the generator table and memoizes blade products. Instances are
    immutable; two contexts are interchangeable iff their m agree.
    """

    __slots__ = ("m", "n_gen", "_squares", "_mul_cache", "_mul_rows",
                 "_f", "_fdag")

    def __init__(self, m: int):
        if not isinstance(m, int) or m < 1:
            raise ValueError(f"spatial dimension must be a positive integer, got {m!r}")
        self.m = m
        self.n_gen = m + 2
        # index 0 is eps (+1), indices 1..m+1 are e_j (-1)
        self._squares = (1,) + (-1,) * (m + 1)
        self._mul_cache: Dict[Tuple[int, int], Tuple[int, int]] = {}
        self._mul_rows: Dict[int, Dict[int, Tuple[int, int]]] = {}
        self._f = None
        self._fdag = None

    def __repr__(self):
        return f"AlgebraContext(m={self.m})"

    def __eq__(self, other):
        return isinstance(other, AlgebraContext) and other.m == self.m

    def __hash__(self):
        return hash(("AlgebraContext", self.m))

    # -- blade arithmetic -------------------------------------------------

    def blade_mul(self, a: int, b: int) -> Tuple[int, int]:
        """Product of basis blades: returns (mask, sign).

        Inserts the generators of b into a in ascending index order,
        counting anticommutations past higher generators and applying
        the metric sign when indices collide.
        """
        key = (a, b)
        hit = self._mul_cache.get(key)
        if hit is not None:
            return hit
        sign = 1
        cur = a
        rest = b
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            rest ^= low
            higher = cur >> (i + 1)
            if higher.bit_count() & 1:
                sign = -sign
            if cur & low:
                sign *= self._squares[i]
                cur ^= low
            else:
                cur |= low
        self._mul_cache[key] = (cur, sign)
        return cur, sign

    def mul_row(self, left_mask: int) -> Dict[int, Tuple[int, int]]:
        """Full left-multiplication row {b: blade_mul(left_mask, b)}.

        Int-keyed lookup for inner loops; the table for one algebra tops
        out at 2^{m+2} rows of 2^{m+2} entries.
        """
        row = self._mul_rows.get(left_mask)
        if row is None:
            bm = self.blade_mul
            row = {b: bm(left_mask, b) for b in range(1 << self.n_gen)}
            self._mul_rows[left_mask] = row
        return row

    def blade_label(self, mask: int) -> str:
        if mask == 0:
            return "1"
        parts = []
        if mask & 1:
            parts.append("eps")
        for j in range(1, self.n_gen):
            if mask >> j & 1:
                parts.append(f"e{j}")
        return "".join(parts)

    def blade_from_label(self, label: str) -> int:
        if label == "1":
            return 0
        mask = 0
        body = label
        if body.startswith("eps"):
            mask |= 1
            body = body[3:]
        for piece in body.split("e"):
            if not piece:
                continue
            j = int(piece)
            if not 1 <= j <= self.m + 1:
                raise ValueError(f"generator e{j} outside Cl(1,{self.m + 1})")
            if mask >> j & 1:
                raise ValueError(f"repeated generator in blade label {label!r}")
            mask |= 1 << j
        return mask

    # -- element constructors ---------------------------------------------

    def scalar(self, value: Scalar) -> "Multivector":
        return Multivector(self, {0: value} if value else {})

    def zero(self) -> "Multivector":
        return Multivector(self, {})

    def one(self) -> "Multivector":
        return self.scalar(1)

    def eps(self) -> "Multivector":
        return Multivector(self, {1: 1})

    def e(self, j: int) -> "Multivector":
        if not 1 <= j <= self.m + 1:
            raise ValueError(f"generator index {j} outside 1..{self.m + 1}")
        return Multivector(self, {1 << j: 1})

    def blade(self, indices: Iterable[int], coeff: Scalar = 1) -> "Multivector":
        """Blade from generator indices; 0 stands for eps, j for e_j."""
        mask = 0
        for j in indices:
            bit = 1 << j
            if not 0 <= j <= self.m + 1 or mask & bit:
                raise ValueError(f"bad blade index sequence {list(indices)!r}")
            mask |= bit
        return Multivector(self, {mask: coeff} if coeff else {})


class Multivector:
    """Sparse element of Cl(1, m+1): blade bitmask -> scalar coefficient.

    Value semantics; every operation returns a fresh instance and zero
    coefficients are never stored.
    """

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: AlgebraContext, terms: Dict[int, Scalar]):
        self.ctx = ctx
        self.terms = terms

    # -- helpers ------------------------------------------------------------

    def _check(self, other: "Multivector"):
        if self.ctx != other.ctx:
            raise AlgebraMismatchError(
                f"mixing Cl(1,{self.ctx.m + 1}) with Cl(1,{other.ctx.m + 1})"
            )

    def is_zero(self) -> bool:
        return not self.terms

    def is_exact(self) -> bool:
        return all(is_exact(v) for v in self.terms.values())

    def scalar_part(self) -> Scalar:
        return self.terms.get(0, 0)

    def grades(self):
        return sorted({mask.bit_count() for mask in self.terms})

    def max_abs(self) -> float:
        if not self.terms:
            return 0.0
        return max(abs(complex(v)) for v in self.terms.values())

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for mask in sorted(self.terms):
            c = self.terms[mask]
            label = self.ctx.blade_label(mask)
            bits.append(f"{c!r}*{label}" if mask else f"{c!r}")
        return " + ".join(bits)

    def __eq__(self, other):
        if isinstance(other, Multivector):
            return self.ctx == other.ctx and self.terms == other.terms
        if isinstance(other, (int, float, complex, Fraction, GaussianRational)):
            if other == 0:
                return not self.terms
            return set(self.terms) == {0} and self.terms[0] == other
        return NotImplemented

    # -- linear structure ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Multivector):
            self._check(other)
            out = dict(self.terms)
            for mask, v in other.terms.items():
                s = out.get(mask, 0) + v
                if s:
                    out[mask] = s
                else:
                    out.pop(mask, None)
            return Multivector(self.ctx, out)
        if isinstance(other, (int, float, complex, Fraction, GaussianRational)):
            return self + self.ctx.scalar(other)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Multivector(self.ctx, {m: -v for m, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Multivector):
            self._check(other)
            blade_mul = self.ctx.blade_mul
            out: Dict[int, Scalar] = {}
            for ma, va in self.terms.items():
                for mb, vb in other.terms.items():
                    mask, sign = blade_mul(ma, mb)
                    v = va * vb if sign > 0 else -(va * vb)
                    s = out.get(mask, 0) + v
                    if s:
                        out[mask] = s
                    else:
                        out.pop(mask, None)
            return Multivector(self.ctx, out)
        return self._scale(other)

    def __rmul__(self, other):
        # only scalars land here; Multivector*Multivector is handled above
        return self._scale(other)

    def _scale(self, value):
        if not isinstance(value, (int, float, complex, Fraction, GaussianRational)):
            return NotImplemented
        if value == 0:
            return Multivector(self.ctx, {})
        out = {}
        for mask, v in self.terms.items():
            s = v * value
            if s:
                out[mask] = s
        return Multivector(self.ctx, out)

    def __truediv__(self, value):
        if isinstance(value, Multivector):
            return NotImplemented
        out = {}
        for mask, v in self.terms.items():
            s = v / value
            if s:
                out[mask] = s
        return Multivector(self.ctx, out)

    # -- involution and split -------------------------------------------------

    def involution(self) -> "Multivector":
        """Main involution: each generator negated, blades scale by (-1)^grade."""
        out = {}
        for mask, v in self.terms.items():
            out[mask] = -v if mask.bit_count() & 1 else v
        return Multivector(self.ctx, out)


def witt_basis(ctx: AlgebraContext) -> Tuple[Multivector, Multivector]:
    """The nilpotent pair (f, fdag) of Cl(1, m+1)."""
    if ctx._f is None:
        half = Fraction(1, 2)
        top = 1 << (ctx.m + 1)
        ctx._f = Multivector(ctx, {top: half, 1: -half})
        ctx._fdag = Multivector(ctx, {top: -half, 1: -half})
    return ctx._f, ctx._fdag


@dataclass(frozen=True)
class SplitForm:
    """Components (f0, f1, f2, f3) of u = f0 + f*f1 + fdag*f2 + f*fdag*f3.

    Each component lives in the subalgebra generated by e_1..e_m.
    """

    f0: Multivector
    f1: Multivector
    f2: Multivector
    f3: Multivector

    def reassemble(self) -> Multivector:
        ctx = self.f0.ctx
        f, fdag = witt_basis(ctx)
        return self.f0 + f * self.f1 + fdag * self.f2 + f * fdag * self.f3


def split(u: Multivector) -> SplitForm:
    """Decompose u over the left Cl(1,1) basis {1, f, fdag, f fdag}.

    Writes each blade as eps^a * B * e_{m+1}^b with B in the e_1..e_m
    subalgebra, moves e_{m+1} left past B (sign (-1)^{grade(B)*b}) and
    rewrites eps^a e_{m+1}^b through the Witt pair:

        eps = -(f + fdag)    e_{m+1} = f - fdag    eps e_{m+1} = 2 f fdag - 1
    """
    ctx = u.ctx
    top_bit = 1 << (ctx.m + 1)
    parts: Tuple[Dict[int, Scalar], ...] = ({}, {}, {}, {})

    def put(which: int, mask: int, v: Scalar):
        d = parts[which]
        s = d.get(mask, 0) + v
        if s:
            d[mask] = s
        else:
            d.pop(mask, None)

    for mask, v in u.terms.items():
        has_eps = mask & 1
        has_top = mask & top_bit
        body = mask & ~(top_bit | 1)
        if has_top and body.bit_count() & 1:
            v = -v
        if not has_eps and not has_top:
            put(0, body, v)
        elif has_eps and not has_top:
            # eps = -(f + fdag)
            put(1, body, -v)
            put(2, body, -v)
        elif has_top and not has_eps:
            # e_{m+1} = f - fdag
            put(1, body, v)
            put(2, body, -v)
        else:
            # eps e_{m+1} = 2 f fdag - 1
            put(3, body, 2 * v)
            put(0, body, -v)

    return SplitForm(*(Multivector(ctx, d) for d in parts))
