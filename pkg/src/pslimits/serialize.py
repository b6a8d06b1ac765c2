"""JSON/CSV serialization of functions, measures and reports.

One convention everywhere: ``+inf``/``-inf`` are encoded as the strings
``"+inf"``/``"-inf"``; everything else is a plain JSON number.  Oracle-backed
functions are serializable only through a registered oracle kind.
"""

from __future__ import annotations

import csv
import json
import math
from typing import Callable

import numpy as np

from .convex import ConvexFn
from .errors import ConfigError
from .extreal import NEG_INF, POS_INF, format_extreal, parse_extreal
from .generator import AtomicMeasure, SeedSpec, build_lf
from .harness import CurveReport, VerificationReport
from .legendre import ConjugateFn

# -- registered oracle kinds ---------------------------------------------------


def _make_quadratic(a: float, b: float) -> Callable:
    return lambda t: a * np.asarray(t, dtype=np.float64) ** 2 + b * np.asarray(t, dtype=np.float64)


def _make_exp(a: float = 1.0) -> Callable:
    return lambda t: np.expm1(a * np.asarray(t, dtype=np.float64))


def _make_power(p: float, c: float = 1.0) -> Callable:
    return lambda t: c * np.abs(np.asarray(t, dtype=np.float64)) ** p


def _make_sqrt_quadratic(a: float, b: float) -> Callable:
    def fn(t):
        t = np.asarray(t, dtype=np.float64)
        return -a * np.sqrt(np.maximum(t, 0.0)) + b * t**2

    return fn


def _make_bernoulli_logmgf(p: float) -> Callable:
    logp, logq = math.log(p), math.log1p(-p)
    return lambda t: np.logaddexp(logq, logp + np.asarray(t, dtype=np.float64))


_ORACLE_KINDS = {
    "quadratic": _make_quadratic,
    "exp": _make_exp,
    "power": _make_power,
    "sqrt_quadratic": _make_sqrt_quadratic,
    "bernoulli_logmgf": _make_bernoulli_logmgf,
}


def oracle_from_spec(spec: dict) -> Callable:
    kind = spec.get("kind")
    params = spec.get("params", {})
    try:
        factory = _ORACLE_KINDS[kind]
    except KeyError:
        raise ConfigError(f"unknown oracle kind {kind!r}") from None
    try:
        return factory(**params)
    except TypeError as exc:
        raise ConfigError(f"bad oracle params for {kind!r}: {exc}") from None


# -- ConvexFn ------------------------------------------------------------------


def convexfn_to_json(f: ConvexFn) -> dict:
    if f.improper:
        return {
            "dom": [format_extreal(f.dom_lo), format_extreal(f.dom_hi)],
            "knots": None,
            "oracle": None,
            "improper": True,
            "improper_hi": format_extreal(f.improper_hi),
        }
    out = {
        "dom": [format_extreal(f.dom_lo), format_extreal(f.dom_hi)],
        "knots": None,
        "oracle": None,
        "improper": False,
    }
    if f.knots_t is not None:
        out["knots"] = [[float(t), float(v)] for t, v in zip(f.knots_t, f.knots_v)]
    if f.ray_left is not None or f.ray_right is not None:
        out["oracle"] = {
            "kind": "affine_rays",
            "params": {"left": f.ray_left, "right": f.ray_right},
        }
    elif f.oracle is not None:
        if f.oracle_spec is None:
            raise ConfigError("oracle-backed function without a registered oracle spec")
        out["oracle"] = f.oracle_spec
    return out


def convexfn_from_json(d: dict) -> ConvexFn:
    try:
        lo = parse_extreal(d["dom"][0])
        hi = parse_extreal(d["dom"][1])
    except (KeyError, IndexError, TypeError) as exc:
        raise ConfigError(f"bad function payload: {exc}") from None
    if d.get("improper"):
        return ConvexFn(
            dom_lo=lo, dom_hi=hi, improper=True, improper_hi=parse_extreal(d["improper_hi"])
        )
    knots = d.get("knots")
    kt = kv = None
    if knots:
        kt = np.array([float(p[0]) for p in knots])
        kv = np.array([float(p[1]) for p in knots])
    spec = d.get("oracle")
    ray_left = ray_right = None
    oracle = None
    oracle_spec = None
    if spec is not None:
        if spec.get("kind") == "affine_rays":
            params = spec.get("params", {})
            ray_left = params.get("left")
            ray_right = params.get("right")
            ray_left = None if ray_left is None else float(ray_left)
            ray_right = None if ray_right is None else float(ray_right)
        elif spec.get("kind") == "chord_composite":
            return build_lf(seedspec_from_json(spec.get("params", {})))
        else:
            oracle = oracle_from_spec(spec)
            oracle_spec = spec
    if kt is None and oracle is None:
        raise ConfigError("function payload needs knots or an oracle")
    return ConvexFn(
        dom_lo=lo,
        dom_hi=hi,
        knots_t=kt,
        knots_v=kv,
        ray_left=ray_left,
        ray_right=ray_right,
        oracle=oracle,
        oracle_spec=oracle_spec,
    )


def seedspec_from_json(d: dict) -> SeedSpec:
    try:
        f = convexfn_from_json(d["f"])
        lam = float(d["lambda"])
        eps = float(d["eps"])
    except KeyError as exc:
        raise ConfigError(f"seed spec missing field {exc}") from None
    return SeedSpec(f=f, lam=lam, eps=eps, depth=int(d.get("depth", 24)))


def seedspec_to_json(seed: SeedSpec) -> dict:
    return {
        "f": convexfn_to_json(seed.f),
        "lambda": seed.lam,
        "eps": seed.eps,
        "depth": seed.depth,
    }


# -- ConjugateFn ---------------------------------------------------------------


def conjugatefn_to_json(c: ConjugateFn) -> dict:
    out = convexfn_to_json(c.inner)
    out["minus_inf_value"] = None if c.minus_inf_value is None else float(c.minus_inf_value)
    out["source_hash"] = c.source_hash
    out["enum"] = [format_extreal(c.enum_lo), format_extreal(c.enum_hi)]
    return out


def conjugatefn_from_json(d: dict) -> ConjugateFn:
    inner = convexfn_from_json(d)
    mv = d.get("minus_inf_value")
    return ConjugateFn(
        inner=inner,
        source_hash=d.get("source_hash", ""),
        enum_lo=parse_extreal(d["enum"][0]),
        enum_hi=parse_extreal(d["enum"][1]),
        minus_inf_value=None if mv is None else float(mv),
    )


# -- atomic measures (CSV) ------------------------------------------------------


def write_measure_csv(mu: AtomicMeasure, path):
    with open(path, "w", newline="") as fh:
        fh.write(f"# n={mu.n_atoms} scale={mu.scale!r}\n")
        w = csv.writer(fh)
        w.writerow(["z", "log_weight"])
        for z, lw in zip(mu.z, mu.log_w):
            w.writerow([repr(float(z)), repr(float(lw))])


def read_measure_csv(path) -> AtomicMeasure:
    with open(path, newline="") as fh:
        header = fh.readline()
        if not header.startswith("#"):
            raise ConfigError("measure CSV must start with the '# n=... scale=...' line")
        fields = dict(tok.split("=", 1) for tok in header[1:].split())
        scale = float(fields["scale"])
        rows = list(csv.reader(fh))
    if not rows or rows[0] != ["z", "log_weight"]:
        raise ConfigError("measure CSV missing the z,log_weight header")
    z = np.array([float(r[0]) for r in rows[1:]])
    lw = np.array([float(r[1]) for r in rows[1:]])
    return AtomicMeasure(z=z, log_w=lw, scale=scale)


# -- reports --------------------------------------------------------------------


def jsonable(obj):
    """Recursive conversion to JSON-encodable values with the inf convention."""
    if obj is None or isinstance(obj, (bool, str, int)):
        return obj
    if isinstance(obj, (float, np.floating)):
        return format_extreal(float(obj))
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, dict):
        return {k: jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [jsonable(v) for v in obj]
    raise ConfigError(f"cannot serialize {type(obj)!r}")


def report_to_json(rep: VerificationReport) -> dict:
    return jsonable(
        {
            "target": rep.target,
            "extrapolated": rep.extrapolated,
            "abs_error": rep.abs_error,
            "passed": rep.passed,
            "tolerance": rep.tolerance,
            "diagnostics": rep.diagnostics,
            "per_n": [
                {
                    "n": p.n,
                    "c_n": p.c_n,
                    "x": p.x,
                    "y": p.y,
                    "empirical": p.empirical,
                    "lstar_x": p.lstar_x,
                }
                for p in rep.per_n
            ],
        }
    )


def report_to_csv(rep: VerificationReport, path):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["n", "c_n", "x", "y", "empirical", "lstar_x"])
        for p in rep.per_n:
            w.writerow(
                [
                    p.n,
                    repr(p.c_n),
                    format_extreal(p.x),
                    format_extreal(p.y),
                    format_extreal(p.empirical),
                    "" if p.lstar_x is None else format_extreal(p.lstar_x),
                ]
            )


def curve_to_json(cur: CurveReport) -> dict:
    return jsonable(
        {
            "lr_plus": cur.lr_plus,
            "lhi": cur.lhi,
            "checks": cur.checks,
            "points": [{"z": z, "t_z": t, "value": v} for z, t, v in cur.points],
        }
    )


def curve_to_csv(cur: CurveReport, path):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["z", "t_z", "value"])
        for z, t, v in cur.points:
            w.writerow([repr(z), repr(t), repr(v)])


def dump_json(payload: dict, path=None) -> str:
    text = json.dumps(payload, indent=2, sort_keys=True)
    if path is not None:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    return text
