from fractions import Fraction

import pytest

from paradirac.algebra import AlgebraContext, split, witt_basis
from paradirac.poly import CliffordPoly, rho_squared
from paradirac.timefn import (SpaceTimeFunction, TimeFunction, apply_0F1,
                              assemble_split, heat_residual, parabolic_dirac,
                              pochhammer)


def test_pochhammer_values():
    assert pochhammer(3, 0) == 1
    assert pochhammer(1, 4) == 24
    assert pochhammer(Fraction(1, 2), 2) == Fraction(3, 4)
    assert pochhammer(5, 3) == 5 * 6 * 7


def test_time_polynomial_and_derivative():
    ctx = AlgebraContext(2)
    a = TimeFunction.polynomial(ctx, [1, 0, 3])        # 1 + 3 t^2
    assert a.d_dt() == TimeFunction.term(ctx, 6, n=1)
    assert a.evaluate(2) == 1 + 12


def test_exponential_derivative():
    ctx = AlgebraContext(2)
    lam = Fraction(-2)
    a = TimeFunction.term(ctx, 1, n=1, lam=lam)        # t e^{-2t}
    da = a.d_dt()
    expect = (TimeFunction.term(ctx, 1, n=0, lam=lam)
              + TimeFunction.term(ctx, lam, n=1, lam=lam))
    assert da == expect
    assert not a.is_polynomial()


def test_time_product_merges_lambda():
    ctx = AlgebraContext(2)
    u = TimeFunction.term(ctx, 2, n=1, lam=1)
    v = TimeFunction.term(ctx, 3, n=2, lam=-1)
    # t e^t * t^2 e^{-t} = t^3, exponent keys must collapse
    assert u * v == TimeFunction.term(ctx, 6, n=3)


def test_spacetime_partial_and_dirac():
    ctx = AlgebraContext(2)
    p = CliffordPoly.monomial(ctx, (2, 0), 1)
    F = SpaceTimeFunction.from_poly(p, TimeFunction.polynomial(ctx, [0, 1]))
    dF = F.partial(0)
    assert dF == SpaceTimeFunction.from_poly(
        CliffordPoly.monomial(ctx, (1, 0), 2),
        TimeFunction.polynomial(ctx, [0, 1]))
    assert F.d_dt() == SpaceTimeFunction.from_poly(p)


def test_heat_polynomial_is_caloric():
    # t + rho^2 / (2m) solves the heat equation for every m
    for m in (1, 2, 3, 4):
        ctx = AlgebraContext(m)
        F = (SpaceTimeFunction.from_poly(rho_squared(ctx)).scale(Fraction(1, 2 * m))
             + SpaceTimeFunction.from_poly(
                 CliffordPoly.constant(ctx, 1),
                 TimeFunction.polynomial(ctx, [0, 1])))
        assert heat_residual(F).is_zero()


def test_parabolic_dirac_of_one():
    # D(1) = fdag: the operator has a zeroth-order part
    ctx = AlgebraContext(2)
    _, fdag = witt_basis(ctx)
    F = SpaceTimeFunction.from_poly(CliffordPoly.constant(ctx, 1))
    R = parabolic_dirac(F)
    assert R == SpaceTimeFunction.from_poly(CliffordPoly.zero(ctx) + CliffordPoly(
        ctx, {(0, 0): fdag}))


def test_apply_0F1_first_terms():
    # gamma = 1, a = t: body is a(t) + rho^2 a'(t)/4 + ...
    ctx = AlgebraContext(2)
    base = CliffordPoly.constant(ctx, 1)
    a = TimeFunction.polynomial(ctx, [0, 1])
    F = apply_0F1(1, base, a, L=6)
    expect = (SpaceTimeFunction.from_poly(base, a)
              + SpaceTimeFunction.from_poly(rho_squared(ctx)).scale(Fraction(1, 4)))
    assert F == expect


def test_apply_0F1_caloric():
    # each 0F1 lift of a polynomial profile solves (Lap - d_dt) F = 0
    ctx = AlgebraContext(3)
    base = CliffordPoly.constant(ctx, 1)
    for coeffs in ([1], [0, 1], [1, -2, 3]):
        a = TimeFunction.polynomial(ctx, coeffs)
        F = apply_0F1(Fraction(3, 2), base, a, L=12)
        assert heat_residual(F).is_zero()


def test_apply_0F1_exponential_profile_truncation():
    # e^{lam t} profile never terminates; residual must sit at the
    # truncation frontier only
    ctx = AlgebraContext(2)
    base = CliffordPoly.constant(ctx, 1)
    a = TimeFunction.term(ctx, 1, n=0, lam=Fraction(-1))
    F = apply_0F1(1, base, a, L=5)
    R = heat_residual(F)
    assert not R.is_zero()
    assert set(R.spatial_degrees()) == {2 * 5}


def test_split_assemble_roundtrip():
    ctx = AlgebraContext(2)
    f, fdag = witt_basis(ctx)
    F = SpaceTimeFunction.from_poly(
        CliffordPoly.monomial(ctx, (1, 1), 1),
        TimeFunction.polynomial(ctx, [1, 2]))
    F = F + SpaceTimeFunction.from_poly(CliffordPoly(ctx, {(2, 0): f * fdag}))
    f0, f1, f2, f3 = F.split()
    assert assemble_split(f0, f1, f2, f3) == F


def test_evaluate_spacetime():
    ctx = AlgebraContext(2)
    F = SpaceTimeFunction.from_poly(
        CliffordPoly.monomial(ctx, (1, 0), 1),
        TimeFunction.polynomial(ctx, [0, 0, 1]))
    v = F.evaluate([Fraction(2), 0], t=Fraction(3))
    assert v == ctx.scalar(18)


def test_mul_time_distributes():
    ctx = AlgebraContext(2)
    F = SpaceTimeFunction.from_poly(
        CliffordPoly.monomial(ctx, (1, 0), 1),
        TimeFunction.polynomial(ctx, [1, 1]))
    tf = TimeFunction.polynomial(ctx, [0, 1])
    G = F.mul_time(tf)
    pt, tv = [Fraction(1, 2), Fraction(1, 3)], Fraction(2)
    assert G.evaluate(pt, tv) == F.evaluate(pt, tv) * tf.evaluate(tv).scalar_part()