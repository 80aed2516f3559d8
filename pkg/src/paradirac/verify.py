"""Exact and numeric verification of built solutions.

Three layers: operator identities (the parabolic operator squares to
-Laplacian + d_t), component conditions on the split form (F1 = -d_x F0,
F3 = d_x F2 - F0, and the heat condition on F0 and F2, which together
are equivalent to D F = 0), and residual measurement.  Exact builds get
a symbolic residual that must vanish identically; truncated builds get
the residual's support degrees plus an empirical convergence order from
sup-norms sampled over spheres of shrinking radius.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .algebra import AlgebraContext, Multivector
from .builders import SeriesSolution
from .poly import CliffordPoly
from .timefn import (SpaceTimeFunction, assemble_split, heat_residual,
                     parabolic_dirac)

# sup-norms below this are treated as zero when estimating orders
UNDERFLOW_GUARD = 1e-14
# relative weight under which a symbolic coefficient counts as roundoff junk
JUNK_REL = 1e-12
# float builds cancel body-sized coefficients, so their residuals carry
# junk at eps * |body| regardless of how small the true tail is
NOISE_REL = 1e-13

T_SAMPLES = (0.0, 0.5)


@dataclass
class CheckReport:
    """Boolean outcome of a structural check plus per-condition detail."""

    name: str
    passed: bool
    detail: Dict[str, object] = field(default_factory=dict)


@dataclass
class ResidualReport:
    mode: str
    exact_zero: bool
    residual_poly: Optional[SpaceTimeFunction] = None
    sup_norm_by_radius: List[Tuple[float, float]] = field(default_factory=list)
    estimated_order: Optional[float] = None
    expected_order: Optional[float] = None
    support_degrees: Optional[Tuple[int, ...]] = None
    passed: bool = False
    seed: Optional[int] = None


# -- operator identities -----------------------------------------------------


def check_factorization(ctx: AlgebraContext,
                        samples: Sequence[SpaceTimeFunction]) -> CheckReport:
    """(d_x + f d_t + fdag)^2 F == (-Laplacian + d_t) F on every sample."""
    failures = 0
    for F in samples:
        left = parabolic_dirac(parabolic_dirac(F))
        right = -heat_residual(F)          # -(Lap F - d_t F)
        if not (left - right).is_zero():
            failures += 1
    return CheckReport(name="factorization", passed=failures == 0,
                       detail={"samples": len(samples), "failures": failures})


def random_spacetime_poly(ctx: AlgebraContext, rng: random.Random,
                          space_degree: int = 3, time_degree: int = 2,
                          n_terms: int = 6) -> SpaceTimeFunction:
    """Random integer-coefficient polynomial in x and t, all blades allowed."""
    terms = {}
    n_blades = 1 << (ctx.m + 2)
    for _ in range(n_terms):
        exps = [0] * ctx.m
        for _ in range(rng.randint(0, space_degree)):
            exps[rng.randrange(ctx.m)] += 1
        key = (tuple(exps), rng.randint(0, time_degree), 0)
        mv = Multivector(ctx, {rng.randrange(n_blades): rng.randint(1, 5)
                               * rng.choice((1, -1))})
        prev = terms.get(key)
        terms[key] = mv if prev is None else prev + mv
    return SpaceTimeFunction(ctx, {k: v for k, v in terms.items()
                                   if not v.is_zero()})


# -- component conditions ------------------------------------------------------


def check_component_conditions(F: Union[SeriesSolution, SpaceTimeFunction],
                               tol: float = 0.0) -> CheckReport:
    """Split-form conditions equivalent to D F = 0, tested both ways.

    cond_f1: F1 = -d_x F0;  cond_f3: F3 = d_x F2 - F0;
    heat_f0 / heat_f2: (Laplacian - d_t) applied to F0 / F2 vanishes.
    The report also computes D F directly and records whether the
    equivalence held (it must, whichever side is true).
    """
    body = F.body if isinstance(F, SeriesSolution) else F

    def negligible(G: SpaceTimeFunction) -> bool:
        return G.is_zero() or (tol > 0 and G.max_abs() <= tol)

    f0, f1, f2, f3 = body.split()
    cond_f1 = negligible(f1 + f0.dirac())
    cond_f3 = negligible(f3 - f2.dirac() + f0)
    heat_f0 = negligible(heat_residual(f0))
    heat_f2 = negligible(heat_residual(f2))
    conditions = cond_f1 and cond_f3 and heat_f0 and heat_f2
    dirac_zero = negligible(parabolic_dirac(body))
    return CheckReport(
        name="component-conditions",
        passed=conditions and dirac_zero,
        detail={"cond_f1": cond_f1, "cond_f3": cond_f3,
                "heat_f0": heat_f0, "heat_f2": heat_f2,
                "dirac_zero": dirac_zero,
                "equivalent": conditions == dirac_zero})


def perturb_component(F: SeriesSolution, slot: int, exps: Sequence[int],
                      coeff: Multivector) -> SeriesSolution:
    """Add coeff * x^exps to split component `slot` (0..3) of a copy of F."""
    parts = list(F.body.split())
    delta = SpaceTimeFunction.from_poly(
        CliffordPoly.monomial(F.ctx, exps, 1).lmul(coeff))
    parts[slot] = parts[slot] + delta
    body = assemble_split(*parts)
    return SeriesSolution(body=body, mode=F.mode, m=F.m, k=F.k, L=F.L,
                          exact=F.exact, zeta=F.zeta,
                          extra=dict(F.extra, mutated_slot=slot))


# -- residual machinery ----------------------------------------------------


def symbolic_residual(F: SeriesSolution,
                      operator: Optional[str] = None) -> SpaceTimeFunction:
    """Apply the operator matching F.mode (or the override) to the body."""
    op = operator or _infer_operator(F.mode)
    body = F.body
    if op == "parabolic":
        return parabolic_dirac(body)
    if op == "generalized":
        if F.zeta is None:
            raise ValueError("generalized residual needs zeta metadata")
        return body.dirac() + body.lmul(F.zeta.to_multivector(F.ctx))
    if op == "helmholtz":
        if F.zeta is None:
            raise ValueError("helmholtz residual needs zeta metadata")
        sz = F.zeta.star_zeta().to_multivector(F.ctx)
        return body.laplacian() + body.lmul(sz)
    raise ValueError(f"unknown operator {op!r}")


def _infer_operator(mode: str) -> str:
    if mode.startswith("parabolic"):
        return "parabolic"
    if mode.startswith("gen-"):
        return "generalized"
    if mode == "helmholtz":
        return "helmholtz"
    raise ValueError(f"cannot infer operator for mode {mode!r}")


def unit_directions(m: int, seed: int = 0,
                    n_random: int = 6) -> List[Tuple[float, ...]]:
    """Axis directions, the diagonal, and seeded gaussian directions."""
    dirs: List[Tuple[float, ...]] = []
    for i in range(m):
        axis = [0.0] * m
        axis[i] = 1.0
        dirs.append(tuple(axis))
        axis = [0.0] * m
        axis[i] = -1.0
        dirs.append(tuple(axis))
    dirs.append(tuple(1.0 / math.sqrt(m) for _ in range(m)))
    rng = random.Random(seed)
    while len(dirs) < 2 * m + 1 + n_random:
        v = [rng.gauss(0.0, 1.0) for _ in range(m)]
        norm = math.sqrt(sum(c * c for c in v))
        if norm > 1e-6:
            dirs.append(tuple(c / norm for c in v))
    return dirs


def estimate_order(sup_by_radius: Sequence[Tuple[float, float]]) -> Optional[float]:
    """Mean log-ratio slope over consecutive radii, skipping underflowed ones."""
    pts = sorted(sup_by_radius, key=lambda rv: -rv[0])
    slopes = []
    for (r1, s1), (r2, s2) in zip(pts, pts[1:]):
        if s1 < UNDERFLOW_GUARD or s2 < UNDERFLOW_GUARD:
            continue
        slopes.append(math.log(s1 / s2) / math.log(r1 / r2))
    if not slopes:
        return None
    return sum(slopes) / len(slopes)


def _junk_threshold(R: SpaceTimeFunction, noise_floor: float) -> float:
    return max(JUNK_REL * R.max_abs(), noise_floor)


def _significant_degrees(R: SpaceTimeFunction,
                         noise_floor: float = 0.0) -> Tuple[int, ...]:
    """Spatial degrees carrying coefficients above roundoff scale."""
    if R.is_zero():
        return ()
    cut = _junk_threshold(R, noise_floor)
    degs = set()
    for key, mv in R.terms.items():
        if mv.max_abs() > cut:
            degs.add(sum(key[0]))
    return tuple(sorted(degs))


def _drop_junk(R: SpaceTimeFunction, noise_floor: float) -> SpaceTimeFunction:
    if R.is_zero() or noise_floor == 0.0:
        return R
    cut = _junk_threshold(R, noise_floor)
    return SpaceTimeFunction(R.ctx, {key: mv for key, mv in R.terms.items()
                                     if mv.max_abs() > cut})


def _expected_order(F: SeriesSolution) -> Optional[float]:
    ks = F.k if isinstance(F.k, tuple) else (F.k,)
    k_min = min(ks)
    op = _infer_operator(F.mode)
    if op == "helmholtz":
        return float(2 * F.L + k_min)
    if op == "generalized":
        return float(2 * F.L + k_min + 1)
    return None


def dirac_residual(F: SeriesSolution, operator: Optional[str] = None,
                   radii: Sequence[float] = (1.0, 0.5, 0.25),
                   seed: int = 0, order_tol: float = 0.2) -> ResidualReport:
    """Residual of the mode's operator applied to F.

    Exact builds: the symbolic residual must be identically zero.
    Truncated builds: the residual must live only at the top spatial
    degrees, and the sup-norm order across radii must match the
    truncation order (2L+k for the Helmholtz side, 2L+k+1 for the
    first-order operator) within order_tol.
    """
    R = symbolic_residual(F, operator)
    report = ResidualReport(mode=F.mode, exact_zero=False, residual_poly=R,
                            seed=seed)
    if F.exact:
        report.exact_zero = R.is_zero()
        report.passed = report.exact_zero
        if not report.exact_zero:
            report.support_degrees = _significant_degrees(R)
        return report

    if R.is_zero():
        report.exact_zero = True
        report.passed = True
        return report

    # a float-coefficient build leaves cancellation junk scaled to the
    # body, which can dwarf a genuinely tiny truncation tail
    noise = 0.0 if F.body.is_exact() else NOISE_REL * F.body.max_abs()
    R_sig = _drop_junk(R, noise)
    if R_sig.is_zero():
        report.exact_zero = False
        report.passed = True          # pure rounding noise, no real tail
        return report

    dirs = unit_directions(F.ctx.m, seed=seed)
    sups: List[Tuple[float, float]] = []
    for r in radii:
        sup = 0.0
        for d in dirs:
            point = tuple(r * c for c in d)
            for t in T_SAMPLES:
                val = R_sig.evaluate(point, t).max_abs()
                if val > sup:
                    sup = val
        sups.append((float(r), sup))
    report.sup_norm_by_radius = sups
    # the underflow guard protects against float noise, which lives at the
    # residual's own coefficient scale; fit slopes on the normalized values
    scale = R_sig.max_abs()
    scaled = [(r, s / scale) for r, s in sups] if scale > 0 else sups
    if len(sups) >= 2:
        report.estimated_order = estimate_order(scaled)

    support = _significant_degrees(R, noise)
    report.support_degrees = support
    expected = _expected_order(F)
    report.expected_order = expected

    if all(s < UNDERFLOW_GUARD for _, s in sups):
        # truncation tail vanished identically up to rounding
        report.passed = True
        return report

    ks = F.k if isinstance(F.k, tuple) else (F.k,)
    if expected is not None:
        tops = {2 * F.L + kk + (0 if _infer_operator(F.mode) == "helmholtz"
                                else 1) for kk in ks}
        support_ok = bool(support) and set(support) <= tops
        order_ok = (report.estimated_order is not None
                    and abs(report.estimated_order - expected) <= order_tol)
        report.passed = support_ok and order_ok
    else:
        # truncated parabolic build: residual allowed only at top degrees
        floor = 2 * F.L + min(ks)
        report.passed = bool(support) and min(support) >= floor
    return report


def cross_check(F_a: SeriesSolution, F_b: SeriesSolution,
                points: Optional[Sequence[Tuple[Sequence[float], float]]] = None,
                tol: float = 0.0) -> bool:
    """Symbolic equality when both sides are exact-coefficient, else
    max pointwise difference <= tol over the given (point, t) samples."""
    if F_a.ctx.m != F_b.ctx.m:
        raise ValueError("solutions live in different dimensions")
    diff = F_a.body - F_b.body
    if tol == 0.0:
        return diff.is_zero()
    if points is None:
        dirs = unit_directions(F_a.ctx.m, seed=1)
        points = [(tuple(0.8 * c for c in d), t) for d in dirs
                  for t in T_SAMPLES]
    worst = 0.0
    for point, t in points:
        val = diff.evaluate(point, t).max_abs()
        if val > worst:
            worst = val
    return worst <= tol
