from fractions import Fraction

import pytest

from paradirac.algebra import AlgebraContext, witt_basis
from paradirac.builders import (build_generalized, build_helmholtz,
                                build_parabolic_closed,
                                build_parabolic_recurrence,
                                parabolic_from_generalized)
from paradirac.harmonics import harmonic_basis, monogenic_basis
from paradirac.poly import CliffordPoly, rho_squared, vector_variable
from paradirac.scalars import GaussianRational
from paradirac.timefn import (SpaceTimeFunction, TimeFunction,
                              heat_residual, parabolic_dirac)
from paradirac.zeta import ZetaElement


def t_profile(ctx):
    return TimeFunction.polynomial(ctx, [0, 1])


def const_head(ctx):
    return monogenic_basis(ctx, 0)[0]


def test_closed_form_frozen_oracle():
    # m = 2, k = 0, a(t) = t:
    #   F0 = t + rho^2/4, F1 = -x/2, F2 = -x (t/2 + rho^2/16), F3 = 0
    ctx = AlgebraContext(2)
    sol = build_parabolic_closed(const_head(ctx), t_profile(ctx))
    assert sol.exact
    f0, f1, f2, f3 = sol.body.split()

    x = vector_variable(ctx)
    rho2 = rho_squared(ctx)
    tf = t_profile(ctx)
    q = Fraction(1, 4)
    assert f0 == (SpaceTimeFunction.from_poly(CliffordPoly.constant(ctx, 1), tf)
                  + SpaceTimeFunction.from_poly(rho2.scale(q)))
    assert f1 == SpaceTimeFunction.from_poly(x.scale(Fraction(-1, 2)))
    assert f2 == (SpaceTimeFunction.from_poly(x.scale(Fraction(-1, 2)), tf)
                  + SpaceTimeFunction.from_poly((rho2 * x).scale(-Fraction(1, 16))))
    assert f3.is_zero()
    assert parabolic_dirac(sol.body).is_zero()


def test_closed_form_static_profile():
    # a = 1 kills the derivative block: F = M + x fdag M / (2k+m)
    ctx = AlgebraContext(3)
    M = const_head(ctx)
    sol = build_parabolic_closed(M, TimeFunction.polynomial(ctx, [1]))
    _, fdag = witt_basis(ctx)
    x = vector_variable(ctx)
    expect = SpaceTimeFunction.from_poly(
        M.poly + (x * M.poly.lmul(fdag)).scale(Fraction(1, 3)))
    assert sol.body == expect
    assert parabolic_dirac(sol.body).is_zero()


@pytest.mark.parametrize("m,k", [(2, 0), (2, 1), (3, 0), (3, 2)])
def test_closed_is_null_solution(m, k):
    ctx = AlgebraContext(m)
    a = TimeFunction.polynomial(ctx, [1, -2, 1])
    for M in monogenic_basis(ctx, k):
        sol = build_parabolic_closed(M, a)
        assert sol.exact
        assert parabolic_dirac(sol.body).is_zero()


def test_recurrence_matches_closed():
    # closed form == recurrence seeded with a0 = a, b2 = -a/(2k+m)
    for m, k in ((2, 0), (2, 1), (3, 1)):
        ctx = AlgebraContext(m)
        a = TimeFunction.polynomial(ctx, [2, 0, -3])
        for M in monogenic_basis(ctx, k):
            closed = build_parabolic_closed(M, a)
            rec = build_parabolic_recurrence(
                M, {"a0": a, "b2": a.scale(Fraction(-1, 2 * k + m))})
            assert rec.body == closed.body
            assert rec.exact


def test_recurrence_single_seed_oracle():
    # a0 = t alone gives F2 = 0 and F3 = -F0 = -(t + rho^2/4)
    ctx = AlgebraContext(2)
    sol = build_parabolic_recurrence(const_head(ctx), {"a0": t_profile(ctx)})
    f0, f1, f2, f3 = sol.body.split()
    assert f2.is_zero()
    assert f3 == -f0
    assert parabolic_dirac(sol.body).is_zero()


def test_recurrence_rejects_unknown_seed():
    ctx = AlgebraContext(2)
    with pytest.raises(ValueError):
        build_parabolic_recurrence(const_head(ctx), {"c0": t_profile(ctx)})


def test_polynomial_profile_terminates():
    # degree-1 profile dies after two derivatives; L has no effect past that
    ctx = AlgebraContext(2)
    M = const_head(ctx)
    a = t_profile(ctx)
    assert build_parabolic_closed(M, a, L=2).body \
        == build_parabolic_closed(M, a, L=50).body


def test_exponential_profile_not_exact():
    ctx = AlgebraContext(2)
    a = TimeFunction.term(ctx, 1, n=0, lam=Fraction(-1))
    sol = build_parabolic_closed(const_head(ctx), a, L=8)
    assert not sol.exact
    R = parabolic_dirac(sol.body)
    assert not R.is_zero()
    # truncation tail sits at the series frontier only
    assert min(R.spatial_degrees()) >= 2 * 8


def test_head_type_is_enforced():
    ctx = AlgebraContext(2)
    with pytest.raises(TypeError):
        build_parabolic_closed(CliffordPoly.constant(ctx, 1), t_profile(ctx))


# -- helmholtz ----------------------------------------------------------------


def test_helmholtz_residual_oracle():
    # (Lap + zeta* zeta) g = c_L rho^{2L} zeta* zeta H with
    # c_L = (-1/4)^L / (L! (g)_L); everything else telescopes away
    ctx = AlgebraContext(2)
    z = ZetaElement(1, 0, 0, 1)
    L, k = 3, 1
    H = harmonic_basis(ctx, k)[0]
    sol = build_helmholtz(H, z, L=L)
    zz = z.star_zeta().to_multivector(ctx)
    R = sol.body.laplacian() + sol.body.lmul(zz)

    gamma = Fraction(2 * k + ctx.m, 2)
    c = Fraction(-1, 4) ** L
    for n in range(1, L + 1):
        c /= n * (gamma + n - 1)
    rho2 = rho_squared(ctx)
    P = H.poly
    for _ in range(L):
        P = rho2 * P
    expect = SpaceTimeFunction.from_poly(P.lmul(zz)).scale(c)
    assert R == expect


def test_helmholtz_multi_head():
    ctx = AlgebraContext(2)
    z = ZetaElement(0, 1, 1, 0)
    heads = [harmonic_basis(ctx, 0)[0], harmonic_basis(ctx, 2)[0]]
    sol = build_helmholtz(heads, z, L=4)
    assert sol.k == (0, 2)
    both = build_helmholtz(heads[0], z, L=4).body \
        + build_helmholtz(heads[1], z, L=4).body
    assert sol.body == both


def test_helmholtz_radial_backends_agree():
    ctx = AlgebraContext(2)
    z = ZetaElement(0.5, -0.25, 1.0, 0.75)
    H = harmonic_basis(ctx, 1)[0]
    direct = build_helmholtz(H, z, L=6, radial="direct")
    spectral = build_helmholtz(H, z, L=6, radial="sylvester")
    diff = direct.body - spectral.body
    assert diff.max_abs() <= 1e-10 * max(1.0, direct.body.max_abs())


def test_helmholtz_rejects_unknown_radial():
    ctx = AlgebraContext(2)
    with pytest.raises(ValueError):
        build_helmholtz(harmonic_basis(ctx, 0)[0], ZetaElement(1, 0, 0, 1),
                        L=2, radial="cayley")


# -- generalized operator -------------------------------------------------------


def gen_operator(sol):
    zmv = sol.zeta.to_multivector(sol.ctx)
    return sol.body.dirac() + sol.body.lmul(zmv)


def test_generalized_three_forms_agree():
    ctx = AlgebraContext(2)
    z = ZetaElement(1, Fraction(1, 2), -1, 2)      # det = 2 + 1/2, invertible
    for k in (0, 1):
        M = monogenic_basis(ctx, k)[0]
        mono = build_generalized(M, z, L=3, form="monogenic")
        fact = build_generalized(M, z, L=3, form="factored")
        inv = build_generalized(M, z, L=3, form="invertible")
        assert mono.body == fact.body
        assert mono.body == inv.body


def test_generalized_residual_is_zeta_times_tail():
    # (d_x + zeta) g_L = zeta B_L, supported in degree 2L + k + 1 only
    ctx = AlgebraContext(2)
    z = ZetaElement(1, 0, 0, 1)
    L, k = 4, 0
    sol = build_generalized(monogenic_basis(ctx, k)[0], z, L=L)
    R = gen_operator(sol)
    assert set(R.spatial_degrees()) == {2 * L + k + 1}


def test_generalized_invertible_requires_invertible():
    ctx = AlgebraContext(2)
    M = const_head(ctx)
    with pytest.raises(Exception):
        build_generalized(M, ZetaElement(1, 2, 2, 4), L=3, form="invertible")


def test_generalized_zero_zeta_collapses():
    # zeta = 0 leaves the bare monogenic head (plus the x-block with
    # weight zero): g = M for every truncation
    ctx = AlgebraContext(2)
    M = monogenic_basis(ctx, 1)[0]
    sol = build_generalized(M, ZetaElement.zero(), L=5)
    assert sol.body == SpaceTimeFunction.from_poly(M.poly)
    assert gen_operator(sol).is_zero()


def test_parabolic_recovery_exact():
    # zeta = (0, lam, 1, 0) with the e^{lam t} carrier reproduces the
    # parabolic solution, coefficient for coefficient
    ctx = AlgebraContext(2)
    for lam in (-1, -2):
        for k in (0, 1):
            M = monogenic_basis(ctx, k)[0]
            via_gen = parabolic_from_generalized(M, lam, L=9)
            a = TimeFunction.term(ctx, 1, n=0, lam=lam)
            direct = build_parabolic_closed(M, a, L=9)
            assert via_gen.body == direct.body
            assert via_gen.extra["lambda"] == lam


def test_parabolic_recovery_gaussian_rational():
    ctx = AlgebraContext(2)
    lam = GaussianRational(Fraction(1, 2), Fraction(1, 2))
    M = const_head(ctx)
    via_gen = parabolic_from_generalized(M, lam, L=7)
    a = TimeFunction.term(ctx, 1, n=0, lam=lam)
    direct = build_parabolic_closed(M, a, L=7)
    assert via_gen.body == direct.body
