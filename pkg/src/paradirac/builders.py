"""Null-solution constructions for d_x + f d_t + fdag and d_x + zeta.

Parabolic solutions F = F0 + f F1 + fdag F2 + f fdag F3 built from a
monogenic head M_k of degree k, either by the first-order coefficient
recurrence (four seed time-profiles a0, b0, a2, b2) or from the 0F1
closed form driven by a single profile a(t).  Generalized solutions for
d_x + zeta come in three equivalent shapes: the direct two-block series
(monogenic), the factored form (zeta* - d_x) applied to one series, and
the invertible form (1 - zeta^-1 d_x) applied to the other.  The
Helmholtz-side builder sums radial Cl(1,1) weights against rho^{2n} H_k.

All series are truncated at the requested order L; the parabolic builds
terminate on their own when every seed profile is a polynomial in t, in
which case the result is an exact null-solution (flagged exact when the
coefficient arithmetic is exact too).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .algebra import AlgebraContext, Multivector, witt_basis
from .harmonics import HarmonicPoly, MonogenicPoly
from .poly import CliffordPoly, rho_squared, vector_variable
from .timefn import SpaceTimeFunction, TimeFunction, apply_0F1, assemble_split
from .zeta import NotInvertibleError, ZetaElement

PARABOLIC_MODES = ("parabolic-recurrence", "parabolic-closed")
GENERALIZED_MODES = ("gen-monogenic", "gen-factored", "gen-invertible")
ALL_MODES = PARABOLIC_MODES + ("helmholtz",) + GENERALIZED_MODES


@dataclass
class SeriesSolution:
    """A built solution plus the metadata needed to verify and serialize it."""

    body: SpaceTimeFunction
    mode: str
    m: int
    k: Union[int, Tuple[int, ...]]
    L: int
    exact: bool
    zeta: Optional[ZetaElement] = None
    extra: Dict[str, object] = field(default_factory=dict)

    @property
    def ctx(self) -> AlgebraContext:
        return self.body.ctx


def _as_list(heads, kind) -> list:
    items = list(heads) if isinstance(heads, (list, tuple)) else [heads]
    if not items:
        raise ValueError("need at least one head polynomial")
    for h in items:
        if not isinstance(h, kind):
            raise TypeError(f"expected {kind.__name__}, got {type(h).__name__}")
    ctx = items[0].poly.ctx
    if any(h.poly.ctx is not ctx for h in items):
        raise ValueError("all heads must share one algebra context")
    return items


def build_parabolic_closed(M: MonogenicPoly, a: TimeFunction,
                           L: int = 12) -> SeriesSolution:
    """F = 0F1(g)[M]a + 0F1(g+1)[x fdag M / (2k+m)]a + 0F1(g+1)[x f M / (2k+m)]a'.

    g = k + m/2.  The fdag block and the f block share the series order
    but the f block is driven by a'(t); together they reproduce the
    recurrence solution seeded with a0 = a, b2 = -a/(2k+m).
    """
    (M,) = _as_list(M, MonogenicPoly)
    ctx = M.poly.ctx
    k = M.degree
    gamma = Fraction(2 * k + ctx.m, 2)
    f, fdag = witt_basis(ctx)
    x = vector_variable(ctx)
    scale = Fraction(1, 2 * k + ctx.m)
    head_dag = (x * M.poly.lmul(fdag)).scale(scale)
    head_f = (x * M.poly.lmul(f)).scale(scale)
    body = (apply_0F1(gamma, M.poly, a, L)
            + apply_0F1(gamma + 1, head_dag, a, L)
            + apply_0F1(gamma + 1, head_f, a.d_dt(), L))
    exact = a.is_polynomial() and a.is_exact() and M.poly.is_exact()
    return SeriesSolution(body=body, mode="parabolic-closed", m=ctx.m, k=k,
                          L=L, exact=exact)


def build_parabolic_recurrence(M: MonogenicPoly,
                               seeds: Dict[str, Optional[TimeFunction]],
                               L: int = 12) -> SeriesSolution:
    """Iterate the coefficient recurrence from four seed profiles.

    seeds maps "a0", "b0", "a2", "b2" to time profiles (missing or None
    means zero).  Writing g = k + m/2 and P_l = rho^{2l} M, Q_l = rho^{2l} x M:

        F0 = sum P_l a0_l + Q_l b0_l
        F1 = sum P_l 2(l+g) b0_l - Q_l 2(l+1) a0_{l+1}
        F2 = sum P_l a2_l + Q_l b2_l
        F3 = sum -P_l (2(l+g) b2_l + a0_l) + Q_l (2(l+1) a2_{l+1} - b0_l)

    with a_{l+1} = a_l' / (4(l+1)(l+g)) and b_{l+1} = b_l' / (4(l+1)(l+g+1)).
    Polynomial seeds terminate the sum on their own; otherwise it stops at L.
    """
    (M,) = _as_list(M, MonogenicPoly)
    ctx = M.poly.ctx
    k = M.degree
    gamma = Fraction(2 * k + ctx.m, 2)

    unknown = set(seeds) - {"a0", "b0", "a2", "b2"}
    if unknown:
        raise ValueError(f"unknown seed keys: {sorted(unknown)}")
    zero_tf = TimeFunction.zero(ctx)

    def seed(name: str) -> TimeFunction:
        tf = seeds.get(name)
        if tf is None:
            return zero_tf
        if tf.ctx is not ctx:
            raise ValueError("seed profile context mismatch")
        return tf

    a0, b0, a2, b2 = seed("a0"), seed("b0"), seed("a2"), seed("b2")
    polynomial = all(tf.is_polynomial() for tf in (a0, b0, a2, b2))
    if polynomial:
        stop = max(tf.max_n() for tf in (a0, b0, a2, b2))
        stop = max(stop, 0)
    else:
        stop = L

    rho2 = rho_squared(ctx)
    x = vector_variable(ctx)
    P = M.poly
    Q = x * M.poly
    F0 = F1 = F2 = F3 = SpaceTimeFunction(ctx, {})
    for l in range(stop + 1):
        two_lg = 2 * l + 2 * k + ctx.m          # 2(l + g), an integer
        div_a = 4 * (l + 1) * (gamma + l)
        div_b = 4 * (l + 1) * (gamma + 1 + l)
        a0_next = a0.d_dt().scale(1 / div_a) if not a0.is_zero() else zero_tf
        a2_next = a2.d_dt().scale(1 / div_a) if not a2.is_zero() else zero_tf

        F0 = F0 + SpaceTimeFunction.from_poly(P, a0) \
                + SpaceTimeFunction.from_poly(Q, b0)
        F1 = F1 + SpaceTimeFunction.from_poly(P, b0.scale(two_lg)) \
                + SpaceTimeFunction.from_poly(Q, a0_next.scale(-2 * (l + 1)))
        F2 = F2 + SpaceTimeFunction.from_poly(P, a2) \
                + SpaceTimeFunction.from_poly(Q, b2)
        F3 = F3 + SpaceTimeFunction.from_poly(
                    P, b2.scale(-two_lg) - a0) \
                + SpaceTimeFunction.from_poly(
                    Q, a2_next.scale(2 * (l + 1)) - b0)

        a0, a2 = a0_next, a2_next
        b0 = b0.d_dt().scale(1 / div_b) if not b0.is_zero() else zero_tf
        b2 = b2.d_dt().scale(1 / div_b) if not b2.is_zero() else zero_tf
        P = rho2 * P
        Q = rho2 * Q

    body = assemble_split(F0, F1, F2, F3)
    exact = polynomial and M.poly.is_exact() and all(
        seed(n).is_exact() for n in ("a0", "b0", "a2", "b2"))
    return SeriesSolution(body=body, mode="parabolic-recurrence", m=ctx.m,
                          k=k, L=stop, exact=exact)


def _radial_weights(z: ZetaElement, gamma: Fraction, L: int,
                    radial: str) -> List[ZetaElement]:
    """Cl(1,1) coefficients w_n = (-1/4 zeta* zeta)^n / (n! (gamma)_n)."""
    if radial == "direct":
        w = ZetaElement.identity()
        out = [w]
        sz = z.star_zeta()
        for n in range(L):
            w = (w * sz).scale(Fraction(-1, 4) / ((n + 1) * (gamma + n)))
            out.append(w)
        return out
    if radial == "sylvester":
        from .zeta import PowerSeries, sylvester_eval

        out = []
        coeff = 1.0
        for n in range(L + 1):
            if n:
                coeff *= -0.25 / (n * float(gamma + n - 1))
            psi = PowerSeries([0.0] * n + [coeff])
            out.append(sylvester_eval(psi, z))
        return out
    raise ValueError(f"unknown radial evaluation {radial!r}")


def build_helmholtz(H, z: ZetaElement, L: int = 12,
                    radial: str = "direct") -> SeriesSolution:
    """g = sum_{n<=L} (-1/4 zeta* zeta)^n rho^{2n} H_k / (n! (g)_n) per head.

    Solves (Laplacian + zeta* zeta) g = 0 up to the truncation tail; the
    heads are harmonic, not necessarily monogenic.  radial chooses how the
    Cl(1,1) weights are computed ("direct" exact powers, "sylvester" the
    spectral formula; they agree to rounding).
    """
    heads = _as_list(H, HarmonicPoly)
    ctx = heads[0].poly.ctx
    rho2 = rho_squared(ctx)
    total = CliffordPoly.zero(ctx)
    for h in heads:
        gamma = Fraction(2 * h.degree + ctx.m, 2)
        weights = _radial_weights(z, gamma, L, radial)
        P = h.poly
        for n in range(L + 1):
            w = weights[n]
            if not w.is_zero():
                total = total + P.lmul(w.to_multivector(ctx))
            if n < L:
                P = rho2 * P
    degrees = tuple(h.degree for h in heads)
    body = SpaceTimeFunction.from_poly(total)
    return SeriesSolution(body=body, mode="helmholtz", m=ctx.m,
                          k=degrees if len(degrees) > 1 else degrees[0],
                          L=L, exact=False, zeta=z, extra={"radial": radial})


def _gen_blocks(M: MonogenicPoly, z: ZetaElement,
                L: int) -> Tuple[CliffordPoly, CliffordPoly]:
    """The two series blocks of the generalized solution for one head.

    A-block: sum_n (-1/4 zeta* zeta)^n rho^{2n} M / (n! (g)_n)
    B-block: sum_n (-1/4 zeta* zeta)^n rho^{2n} x zeta M / (n! (g+1)_n (m+2k))
    """
    ctx = M.poly.ctx
    k = M.degree
    gamma = Fraction(2 * k + ctx.m, 2)
    rho2 = rho_squared(ctx)
    x = vector_variable(ctx)
    sz = z.star_zeta()

    a_total = CliffordPoly.zero(ctx)
    P = M.poly
    w = ZetaElement.identity()
    for n in range(L + 1):
        a_total = a_total + P.lmul(w.to_multivector(ctx))
        if n < L:
            w = (w * sz).scale(Fraction(-1, 4) / ((n + 1) * (gamma + n)))
            P = rho2 * P

    b_total = CliffordPoly.zero(ctx)
    Q = (x * M.poly.lmul(z.to_multivector(ctx))).scale(
        Fraction(1, 2 * k + ctx.m))
    v = ZetaElement.identity()
    for n in range(L + 1):
        b_total = b_total + Q.lmul(v.to_multivector(ctx))
        if n < L:
            v = (v * sz).scale(Fraction(-1, 4) / ((n + 1) * (gamma + 1 + n)))
            Q = rho2 * Q
    return a_total, b_total


def build_generalized(M, z: ZetaElement, L: int = 12,
                      form: str = "monogenic") -> SeriesSolution:
    """Null-solution of d_x + zeta from monogenic heads, three equivalent forms.

    monogenic   A-block + B-block summed directly.
    factored    (zeta* - d_x) applied to the B-side series built from
                zeta zeta* radial weights; identical term-by-term.
    invertible  (1 - zeta^-1 d_x) applied to the A-block carried one
                order further, then cut back to spatial degree 2L+k+1.
                Requires det(zeta) != 0.

    Every form truncates to A_L + B_L at the top, so the residual of
    (d_x + zeta) is exactly zeta B_L.
    """
    heads = _as_list(M, MonogenicPoly)
    if form not in ("monogenic", "factored", "invertible"):
        raise ValueError(f"unknown generalized form {form!r}")
    ctx = heads[0].poly.ctx
    total = CliffordPoly.zero(ctx)
    for head in heads:
        k = head.degree
        gamma = Fraction(2 * k + ctx.m, 2)
        if form == "monogenic":
            a_blk, b_blk = _gen_blocks(head, z, L)
            g = a_blk + b_blk
        elif form == "factored":
            rho2 = rho_squared(ctx)
            x = vector_variable(ctx)
            zs = z.zeta_star()          # starred radial weights here
            inner = CliffordPoly.zero(ctx)
            Q = (x * head.poly).scale(Fraction(1, 2 * k + ctx.m))
            v = ZetaElement.identity()
            for n in range(L + 1):
                inner = inner + Q.lmul(v.to_multivector(ctx))
                if n < L:
                    v = (v * zs).scale(
                        Fraction(-1, 4) / ((n + 1) * (gamma + 1 + n)))
                    Q = rho2 * Q
            g = inner.lmul(z.involution().to_multivector(ctx)) - inner.dirac()
        else:
            if not z.is_invertible():
                raise NotInvertibleError(
                    "invertible form needs det(zeta) != 0")
            rho2 = rho_squared(ctx)
            inner = CliffordPoly.zero(ctx)
            P = head.poly
            w = ZetaElement.identity()
            for n in range(L + 2):      # one extra order, trimmed below
                inner = inner + P.lmul(w.to_multivector(ctx))
                if n < L + 1:
                    w = (w * z.star_zeta()).scale(
                        Fraction(-1, 4) / ((n + 1) * (gamma + n)))
                    P = rho2 * P
            zinv = z.invert().to_multivector(ctx)
            g = inner - inner.dirac().lmul(zinv)
            g = g.truncate_degree(2 * L + k + 1)
        total = total + g
    degrees = tuple(h.degree for h in heads)
    body = SpaceTimeFunction.from_poly(total)
    return SeriesSolution(body=body, mode=f"gen-{form}", m=ctx.m,
                          k=degrees if len(degrees) > 1 else degrees[0],
                          L=L, exact=False, zeta=z)


def parabolic_from_generalized(M: MonogenicPoly, lam: Union[int, float, complex],
                               L: int = 12) -> SeriesSolution:
    """Recover a parabolic null-solution from the generalized machinery.

    For a pure exponential profile exp(lam t), the substitution
    zeta = lam f + fdag turns d_x + f d_t + fdag acting on exp(lam t) g
    into exp(lam t) (d_x + zeta) g.  Builds the generalized monogenic
    series for that zeta and multiplies the exponential back on.
    """
    (M,) = _as_list(M, MonogenicPoly)
    ctx = M.poly.ctx
    z = ZetaElement(0, lam, 1, 0)
    gen = build_generalized(M, z, L, form="monogenic")
    profile = TimeFunction.term(ctx, 1, n=0, lam=lam)
    body = gen.body.mul_time(profile)
    exact = False
    return SeriesSolution(body=body, mode="parabolic-closed", m=ctx.m,
                          k=M.degree, L=L, exact=exact, zeta=z,
                          extra={"lambda": lam, "via": "generalized"})
