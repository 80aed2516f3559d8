"""JSON solution files, JSON reports, and CSV point evaluation.

Solution files carry every term of the space-time body as
{exponents, n, lambda, blades}, with each scalar encoded as an [re, im]
pair whose entries are ints, floats, or "p/q" rational strings, so the
exact backend round-trips without loss.  All files carry
"schema_version": 1 at top level.  CSV evaluation tables have a
mandatory header row: coordinates x1..xm, t, then one _re/_im column
pair per blade appearing in the solution.
"""

from __future__ import annotations

import csv
import json
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .algebra import AlgebraContext, Multivector
from .builders import SeriesSolution
from .scalars import GaussianRational, Scalar
from .timefn import SpaceTimeFunction
from .verify import CheckReport, ResidualReport
from .zeta import ZetaElement

SCHEMA_VERSION = 1


# -- scalar encoding ----------------------------------------------------------


def _encode_part(v) -> Union[int, float, str]:
    if isinstance(v, bool):
        raise TypeError("boolean is not a scalar")
    if isinstance(v, int):
        return v
    if isinstance(v, Fraction):
        return int(v) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(v, float):
        return v
    raise TypeError(f"cannot encode scalar part {v!r}")


def encode_scalar(v: Scalar) -> List[Union[int, float, str]]:
    """Any supported scalar -> [re, im] with exact parts as "p/q" strings."""
    if isinstance(v, GaussianRational):
        return [_encode_part(v.re), _encode_part(v.im)]
    if isinstance(v, complex):
        return [v.real, v.imag]
    return [_encode_part(v), 0]


def _decode_part(raw) -> Scalar:
    if isinstance(raw, str):
        return Fraction(raw)
    if isinstance(raw, (int, float)):
        return raw
    raise ValueError(f"bad scalar part {raw!r}")


def decode_scalar(pair) -> Scalar:
    if not (isinstance(pair, (list, tuple)) and len(pair) == 2):
        raise ValueError(f"scalar must be an [re, im] pair, got {pair!r}")
    re, im = (_decode_part(p) for p in pair)
    exact = not (isinstance(re, float) or isinstance(im, float))
    if exact:
        if im == 0:
            return re
        return GaussianRational(re, im)
    if im == 0:
        return float(re)
    return complex(re, im)


# -- solution files ---------------------------------------------------------


def _encode_zeta(z: Optional[ZetaElement]):
    if z is None:
        return None
    return {"a": encode_scalar(z.a), "b": encode_scalar(z.b),
            "c": encode_scalar(z.c), "d": encode_scalar(z.d)}


def _decode_zeta(raw) -> Optional[ZetaElement]:
    if raw is None:
        return None
    return ZetaElement(decode_scalar(raw["a"]), decode_scalar(raw["b"]),
                       decode_scalar(raw["c"]), decode_scalar(raw["d"]))


def _lambda_sort_key(lam) -> Tuple[float, float]:
    c = complex(lam)
    return (c.real, c.imag)


def solution_to_dict(sol: SeriesSolution) -> dict:
    body = sol.body
    term_rows = []
    for (exps, n, lam), mv in body.terms.items():
        blades = [[body.ctx.blade_label(mask), encode_scalar(val)]
                  for mask, val in sorted(mv.terms.items())]
        term_rows.append({"exponents": list(exps), "n": n,
                          "lambda": encode_scalar(lam), "blades": blades})
    term_rows.sort(key=lambda row: (row["exponents"], row["n"],
                                    _lambda_sort_key(decode_scalar(row["lambda"]))))
    extra = {}
    for key, val in sol.extra.items():
        if isinstance(val, (complex, GaussianRational, Fraction)):
            extra[key] = encode_scalar(val)
        else:
            extra[key] = val
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "solution",
        "mode": sol.mode,
        "m": sol.m,
        "k": list(sol.k) if isinstance(sol.k, tuple) else sol.k,
        "L": sol.L,
        "exact": sol.exact,
        "zeta": _encode_zeta(sol.zeta),
        "extra": extra,
        "terms": term_rows,
    }


def solution_from_dict(data: dict) -> SeriesSolution:
    if data.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema_version {data.get('schema_version')!r}")
    if data.get("kind") != "solution":
        raise ValueError(f"not a solution file (kind={data.get('kind')!r})")
    ctx = AlgebraContext(int(data["m"]))
    terms: Dict[tuple, Multivector] = {}
    for row in data["terms"]:
        exps = tuple(int(e) for e in row["exponents"])
        if len(exps) != ctx.m:
            raise ValueError("exponent tuple length does not match m")
        lam = decode_scalar(row["lambda"])
        key = (exps, int(row["n"]), lam)
        coeffs = {ctx.blade_from_label(label): decode_scalar(pair)
                  for label, pair in row["blades"]}
        mv = Multivector(ctx, {m_: v for m_, v in coeffs.items() if v != 0})
        if not mv.is_zero():
            prev = terms.get(key)
            terms[key] = mv if prev is None else prev + mv
    body = SpaceTimeFunction(ctx, terms)
    k = data["k"]
    k = tuple(int(v) for v in k) if isinstance(k, list) else int(k)
    return SeriesSolution(body=body, mode=data["mode"], m=ctx.m, k=k,
                          L=int(data["L"]), exact=bool(data["exact"]),
                          zeta=_decode_zeta(data.get("zeta")),
                          extra=dict(data.get("extra") or {}))


def save_solution(sol: SeriesSolution, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(solution_to_dict(sol), fh, indent=1)
        fh.write("\n")


def load_solution(path: str) -> SeriesSolution:
    with open(path) as fh:
        return solution_from_dict(json.load(fh))


# -- reports -------------------------------------------------------------


def residual_report_to_dict(rep: ResidualReport,
                            max_terms: int = 500) -> dict:
    residual = None
    if rep.residual_poly is not None:
        R = rep.residual_poly
        residual = {"is_zero": R.is_zero(), "n_terms": len(R.terms)}
        if 0 < len(R.terms) <= max_terms:
            rows = []
            for (exps, n, lam), mv in sorted(
                    R.terms.items(),
                    key=lambda kv: (kv[0][0], kv[0][1],
                                    _lambda_sort_key(kv[0][2]))):
                blades = [[R.ctx.blade_label(mask), encode_scalar(val)]
                          for mask, val in sorted(mv.terms.items())]
                rows.append({"exponents": list(exps), "n": n,
                             "lambda": encode_scalar(lam), "blades": blades})
            residual["terms"] = rows
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "residual_report",
        "mode": rep.mode,
        "exact_zero": rep.exact_zero,
        "passed": rep.passed,
        "sup_norm_by_radius": [[r, v] for r, v in rep.sup_norm_by_radius],
        "estimated_order": rep.estimated_order,
        "expected_order": rep.expected_order,
        "support_degrees": list(rep.support_degrees or ()) or None,
        "seed": rep.seed,
        "residual_poly": residual,
    }


def check_report_to_dict(rep: CheckReport) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "check_report",
        "name": rep.name,
        "passed": rep.passed,
        "detail": rep.detail,
    }


def save_report(report_dict: dict, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(report_dict, fh, indent=1)
        fh.write("\n")


# -- CSV point tables ----------------------------------------------------


def read_points_csv(path: str, m: int) -> List[Tuple[Tuple[float, ...], float]]:
    """Rows of x1..xm plus optional t column (default 0).  Header required."""
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None:
            raise ValueError("points file is empty; header row required")
        header = [h.strip() for h in header]
        want = [f"x{i}" for i in range(1, m + 1)]
        if header[: m] != want:
            raise ValueError(f"points header must start with {','.join(want)}")
        has_t = len(header) > m and header[m] == "t"
        points = []
        for row in reader:
            if not row or all(not cell.strip() for cell in row):
                continue
            xs = tuple(float(row[i]) for i in range(m))
            t = float(row[m]) if has_t and len(row) > m else 0.0
            points.append((xs, t))
    return points


def write_eval_csv(sol: SeriesSolution,
                   points: Sequence[Tuple[Sequence[float], float]],
                   path: str) -> List[str]:
    """Evaluate the solution at each point and write one row per point.

    Columns: x1..xm, t, then <blade>_re,<blade>_im for every blade that
    appears in the solution body (sorted canonically).  Returns the header.
    """
    ctx = sol.ctx
    masks = sorted({mask for mv in sol.body.terms.values()
                    for mask in mv.terms})
    if not masks:
        masks = [0]
    labels = [ctx.blade_label(mask) for mask in masks]
    header = [f"x{i}" for i in range(1, ctx.m + 1)] + ["t"]
    for lab in labels:
        header += [f"{lab}_re", f"{lab}_im"]
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for point, t in points:
            mv = sol.body.evaluate(tuple(point), t)
            row = [repr(float(c)) for c in point] + [repr(float(t))]
            for mask in masks:
                val = complex(mv.terms.get(mask, 0))
                row += [repr(val.real), repr(val.imag)]
            writer.writerow(row)
    return header
