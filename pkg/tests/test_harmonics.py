from fractions import Fraction

import pytest

from paradirac.algebra import AlgebraContext
from paradirac.harmonics import (HarmonicPoly, harmonic_basis,
                                 harmonic_dimension, integer_rescale,
                                 monogenic_basis, monogenic_decompose)
from paradirac.poly import CliffordPoly, vector_variable

FROZEN_DIMS = {
    2: [1, 2, 2, 2, 2, 2],
    3: [1, 3, 5, 7, 9, 11],
    4: [1, 4, 9, 16, 25, 36],
    5: [1, 5, 14, 30, 55, 91],
}


@pytest.mark.parametrize("m", sorted(FROZEN_DIMS))
def test_harmonic_dimension_frozen(m):
    assert [harmonic_dimension(m, k) for k in range(6)] == FROZEN_DIMS[m]


def test_harmonic_basis_properties():
    for m in (2, 3):
        ctx = AlgebraContext(m)
        for k in range(4):
            basis = harmonic_basis(ctx, k)
            assert len(basis) == harmonic_dimension(m, k)
            for h in basis:
                assert h.degree == k
                assert h.poly.laplacian().is_zero()
                if not h.poly.is_zero():
                    assert h.poly.is_homogeneous()


def test_monogenic_decompose_oracle():
    # h = x1^2 - x2^2 in two variables splits as
    #   M2   = (x1^2 - x2^2)/2 - e1 e2 x1 x2
    #   Mtil = -(e1 x1 - e2 x2)/2
    ctx = AlgebraContext(2)
    h = HarmonicPoly(CliffordPoly(ctx, {(2, 0): ctx.one(),
                                        (0, 2): -ctx.one()}), 2)
    mk, mtil = monogenic_decompose(h)
    half = Fraction(1, 2)
    assert mk.poly == CliffordPoly(ctx, {
        (2, 0): ctx.scalar(half),
        (0, 2): ctx.scalar(-half),
        (1, 1): -(ctx.e(1) * ctx.e(2)),
    })
    assert mtil.poly == CliffordPoly(ctx, {
        (1, 0): ctx.e(1) * -half,
        (0, 1): ctx.e(2) * half,
    })


def test_decompose_reassembles():
    for m in (2, 3):
        ctx = AlgebraContext(m)
        x = vector_variable(ctx)
        for k in range(1, 4):
            for h in harmonic_basis(ctx, k):
                mk, mtil = monogenic_decompose(h)
                assert mk.poly + x * mtil.poly == h.poly
                assert mk.poly.dirac().is_zero()
                assert mtil.poly.dirac().is_zero()


def test_monogenic_basis_counts_and_coefficients():
    for m in (2, 3, 4):
        ctx = AlgebraContext(m)
        for k in range(4):
            basis = monogenic_basis(ctx, k)
            assert len(basis) == harmonic_dimension(m, k)
            for M in basis:
                assert M.poly.dirac().is_zero()
                # rescaled to integer coefficients for cheap arithmetic
                for mv in M.poly.terms.values():
                    for v in mv.terms.values():
                        assert isinstance(v, int) or (
                            hasattr(v, "re") and isinstance(v.re, Fraction)
                            and v.re.denominator == 1)


def test_integer_rescale_is_canonical():
    ctx = AlgebraContext(2)
    p = (CliffordPoly.monomial(ctx, (1, 0), Fraction(2, 3))
         + CliffordPoly.monomial(ctx, (0, 1), Fraction(4, 3)))
    q = integer_rescale(p)
    assert q == CliffordPoly.monomial(ctx, (1, 0), 1) \
        + CliffordPoly.monomial(ctx, (0, 1), 2)
    # a common integer factor is divided out too
    r = integer_rescale(p.scale(6))
    assert r == q
    # float polynomials pass through untouched
    fp = CliffordPoly.monomial(ctx, (1, 0), 0.5)
    assert integer_rescale(fp) == fp


def test_degree_one_monogenic_oracle():
    # the m = 2 degree-1 space is spanned by x1 - e1e2 x2 and its partner
    ctx = AlgebraContext(2)
    span = monogenic_basis(ctx, 1)
    cand = CliffordPoly(ctx, {(1, 0): ctx.one(),
                              (0, 1): -(ctx.e(1) * ctx.e(2))})
    assert cand.dirac().is_zero()
    assert len(span) == 2


def test_harmonic_poly_validation():
    ctx = AlgebraContext(2)
    bad = CliffordPoly.monomial(ctx, (2, 0), 1)       # laplacian is 2
    with pytest.raises(ValueError):
        HarmonicPoly(bad, 2)
    with pytest.raises(ValueError):
        HarmonicPoly(CliffordPoly.monomial(ctx, (1, 1), 1), 3)
