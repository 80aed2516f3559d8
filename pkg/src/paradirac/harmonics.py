"""Spherical harmonics and spherical monogenics by exact linear algebra.

Degree-k harmonics are found as the exact rational nullspace of the
Laplacian restricted to degree-k scalar monomials. Each harmonic h then
refines into monogenic pieces through

    h = M_k + x * Mtil_{k-1},   Mtil_{k-1} = -d_x h / (m + 2k - 2),

both pieces annihilated by the Dirac operator. Basis polynomials are
emitted with integer coefficients so downstream exact sweeps stay in
int arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb, gcd, lcm
from typing import List, Sequence, Tuple

from .algebra import AlgebraContext, Multivector
from .poly import CliffordPoly, vector_variable
from .scalars import GaussianRational


@dataclass(frozen=True)
class HarmonicPoly:
    """Homogeneous degree-k polynomial with laplacian(poly) = 0 exactly."""

    poly: CliffordPoly
    degree: int

    def __post_init__(self):
        if not self.poly.is_zero():
            if not self.poly.is_homogeneous() or self.poly.degree() != self.degree:
                raise ValueError(f"not homogeneous of degree {self.degree}")
            if not self.poly.laplacian().is_zero():
                raise ValueError("polynomial is not harmonic")


@dataclass(frozen=True)
class MonogenicPoly:
    """Homogeneous degree-k polynomial with dirac(poly) = 0 exactly."""

    poly: CliffordPoly
    degree: int

    def __post_init__(self):
        if not self.poly.is_zero():
            if not self.poly.is_homogeneous() or self.poly.degree() != self.degree:
                raise ValueError(f"not homogeneous of degree {self.degree}")
            if not self.poly.dirac().is_zero():
                raise ValueError("polynomial is not monogenic")


def harmonic_dimension(m: int, k: int) -> int:
    """dim of degree-k harmonics in m variables:
    C(k+m-1, m-1) - C(k+m-3, m-1)."""
    if k < 0:
        return 0
    return comb(k + m - 1, m - 1) - (comb(k + m - 3, m - 1) if k >= 2 else 0)


def monomials_of_degree(m: int, k: int) -> List[Tuple[int, ...]]:
    """All exponent tuples of total degree k in m variables, sorted."""
    out = []
    for combo in combinations_with_replacement(range(m), k):
        exps = [0] * m
        for i in combo:
            exps[i] += 1
        out.append(tuple(exps))
    out.sort()
    return out


def rational_nullspace(rows: Sequence[Sequence[Fraction]], n_cols: int) -> List[List[Fraction]]:
    """Nullspace basis of a rational matrix by Gaussian elimination.

    Returns one vector per free column, each with a 1 in its free slot.
    """
    mat = [list(map(Fraction, row)) for row in rows]
    n_rows = len(mat)
    pivot_of_col = {}
    piv_r = 0
    for col in range(n_cols):
        sel = None
        for r in range(piv_r, n_rows):
            if mat[r][col]:
                sel = r
                break
        if sel is None:
            continue
        mat[piv_r], mat[sel] = mat[sel], mat[piv_r]
        inv = 1 / mat[piv_r][col]
        mat[piv_r] = [v * inv for v in mat[piv_r]]
        for r in range(n_rows):
            if r != piv_r and mat[r][col]:
                f = mat[r][col]
                row_p = mat[piv_r]
                mat[r] = [v - f * w for v, w in zip(mat[r], row_p)]
        pivot_of_col[col] = piv_r
        piv_r += 1

    basis = []
    free_cols = [c for c in range(n_cols) if c not in pivot_of_col]
    for fc in free_cols:
        vec = [Fraction(0)] * n_cols
        vec[fc] = Fraction(1)
        for col, r in pivot_of_col.items():
            vec[col] = -mat[r][fc]
        basis.append(vec)
    return basis


def _integerized(values: Sequence[Fraction]) -> List[int]:
    denom = lcm(*(v.denominator for v in values)) if values else 1
    return [int(v * denom) for v in values]


def harmonic_basis(ctx: AlgebraContext, k: int) -> List[HarmonicPoly]:
    """Integer-coefficient basis of the degree-k scalar harmonics."""
    if k < 0:
        raise ValueError("degree must be >= 0")
    monos = monomials_of_degree(ctx.m, k)
    if k < 2:
        return [
            HarmonicPoly(CliffordPoly.monomial(ctx, exps, 1), k)
            for exps in monos
        ]
    # rows: one equation per degree-(k-2) monomial, columns over degree-k monomials
    lower = {exps: i for i, exps in enumerate(monomials_of_degree(ctx.m, k - 2))}
    rows = [[Fraction(0)] * len(monos) for _ in lower]
    for col, exps in enumerate(monos):
        for i, e in enumerate(exps):
            if e < 2:
                continue
            dropped = exps[:i] + (e - 2,) + exps[i + 1:]
            rows[lower[dropped]][col] += e * (e - 1)
    out = []
    for vec in rational_nullspace(rows, len(monos)):
        ints = _integerized(vec)
        terms = {
            exps: ctx.scalar(c)
            for exps, c in zip(monos, ints) if c
        }
        out.append(HarmonicPoly(CliffordPoly(ctx, terms), k))
    return out


def monogenic_decompose(h: HarmonicPoly) -> Tuple[MonogenicPoly, MonogenicPoly]:
    """Split a harmonic as h = M_k + x * Mtil_{k-1}, both monogenic.

    For k = 0 the tail is zero. The divisor m + 2k - 2 is nonzero for
    every reachable (m >= 1, k >= 1) combination.
    """
    ctx = h.poly.ctx
    k = h.degree
    if k == 0:
        return (
            MonogenicPoly(h.poly, 0),
            MonogenicPoly(CliffordPoly.zero(ctx), 0),
        )
    divisor = ctx.m + 2 * k - 2
    assert divisor != 0
    mtil = h.poly.dirac().scale(Fraction(-1, divisor))
    mk = h.poly - vector_variable(ctx) * mtil
    return MonogenicPoly(mk, k), MonogenicPoly(mtil, k - 1)


def integer_rescale(p: CliffordPoly) -> CliffordPoly:
    """Smallest positive rational multiple of p with integer coefficients.

    Emits plain int coefficients (int arithmetic is far cheaper than
    Fraction in the verification sweeps).  Leaves float polynomials
    untouched.
    """
    denoms = []
    for mv in p.terms.values():
        for v in mv.terms.values():
            if isinstance(v, int):
                denoms.append(1)
            elif isinstance(v, Fraction):
                denoms.append(v.denominator)
            elif isinstance(v, GaussianRational):
                denoms.append(lcm(v.re.denominator, v.im.denominator))
            else:
                return p
    if not denoms:
        return p
    scale = lcm(*denoms)

    def as_parts(v):
        if isinstance(v, GaussianRational):
            return int(v.re * scale), int(v.im * scale)
        return int(v * scale), 0

    scaled = {exps: {mask: as_parts(v) for mask, v in mv.terms.items()}
              for exps, mv in p.terms.items()}
    g = gcd(*(part for row in scaled.values()
              for pair in row.values() for part in pair))
    g = g or 1

    def as_int(re, im):
        return int(re // g) if im == 0 else GaussianRational(re // g, im // g)

    out = {exps: Multivector(p.ctx, {mask: as_int(re, im)
                                     for mask, (re, im) in row.items()})
           for exps, row in scaled.items()}
    return CliffordPoly(p.ctx, out)


def _coeff_vector(p: CliffordPoly, columns: List[Tuple[Tuple[int, ...], int]]) -> List[Fraction]:
    index = {key: i for i, key in enumerate(columns)}
    vec = [Fraction(0)] * len(columns)
    for exps, mv in p.terms.items():
        for mask, v in mv.terms.items():
            vec[index[(exps, mask)]] = Fraction(v)
    return vec


def monogenic_basis(ctx: AlgebraContext, k: int) -> List[MonogenicPoly]:
    """Linearly independent spanning set of degree-k spherical monogenics.

    Decomposes every degree-k harmonic and keeps the monogenic heads that
    are independent over the rationals (rank test by incremental
    elimination on vectorized coefficients).
    """
    if k == 0:
        return [MonogenicPoly(CliffordPoly.constant(ctx, 1), 0)]
    heads = []
    for h in harmonic_basis(ctx, k):
        mk, _ = monogenic_decompose(h)
        if not mk.poly.is_zero():
            heads.append(integer_rescale(mk.poly))
    columns = sorted({
        (exps, mask)
        for p in heads
        for exps, mv in p.terms.items()
        for mask in mv.terms
    })
    kept: List[MonogenicPoly] = []
    reduced: List[Tuple[int, List[Fraction]]] = []  # (pivot index, normalized row)
    for p in heads:
        vec = _coeff_vector(p, columns)
        for piv, row in reduced:
            if vec[piv]:
                f = vec[piv]
                vec = [a - f * b for a, b in zip(vec, row)]
        piv = next((i for i, v in enumerate(vec) if v), None)
        if piv is None:
            continue  # dependent on earlier heads
        inv = 1 / vec[piv]
        reduced.append((piv, [v * inv for v in vec]))
        kept.append(MonogenicPoly(p, k))
    return kept
