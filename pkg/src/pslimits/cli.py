"""Command-line front end.

Subcommands: ``transform`` (conjugate a function), ``classify`` (point
classification and derivative diagnostics), ``generate`` (materialize atomic
measures to CSV), ``verify`` (run a verification scenario), ``curve``
(slope-inversion curve).  Configs are JSON, data outputs CSV, reports JSON;
``+inf``/``-inf`` are encoded as strings throughout.

Exit status: 0 success/pass, 1 verification failure, 2 config or hypothesis
or numeric errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .convex import (
    DEFAULT_TOL,
    classify_point,
    lambda_tilde,
    left_deriv,
    right_deriv,
    right_deriv_limit,
)
from .errors import (
    ConfigError,
    HypothesisViolated,
    NonMonotoneDivergence,
    PSLimitsError,
)
from .extreal import NEG_INF, POS_INF, parse_extreal
from .families import builtin_families
from .generator import (
    SeedSpec,
    appendix_sequence,
    build_lf,
    build_measure,
    conjugate_atoms_sequence,
)
from .harness import Scenario, corollary_curve, verify_theorem
from .legendre import conjugate
from . import serialize as ser

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_ERROR = 2


def _load_config(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None


def _emit(payload: dict, out: str | None, quiet: bool) -> None:
    text = ser.dump_json(payload, out)
    if out is None and not quiet:
        print(text)


def _build_sequence(cfg: dict, depth_override=None):
    fam = cfg.get("family")
    if not isinstance(fam, dict) or "kind" not in fam:
        raise ConfigError("scenario needs a family with a kind")
    kind = fam["kind"]
    if kind == "appendix":
        seed = ser.seedspec_from_json(fam.get("seed", {}))
        if depth_override is not None:
            seed = SeedSpec(f=seed.f, lam=seed.lam, eps=seed.eps, depth=depth_override)
        return appendix_sequence(seed)
    if kind == "conjugate_atoms":
        f = ser.convexfn_from_json(fam.get("function", {}))
        return conjugate_atoms_sequence(f, n_slopes=int(fam.get("n_slopes", 256)))
    return builtin_families(kind, fam.get("params"))


def _build_rule(spec: dict | None, lr: float, default_kind: str):
    spec = spec or {"kind": default_kind}
    kind = spec.get("kind", default_kind)
    if kind == "approach_below":
        if not np.isfinite(lr):
            raise ConfigError("approach_below needs a finite right-derivative limit")
        scale = float(spec.get("scale", 1.0))
        return lambda n: lr - scale / np.sqrt(n)
    if kind == "neg_n":
        return lambda n: -float(n)
    if kind == "const":
        value = parse_extreal(spec.get("value", "+inf"))
        return lambda n: value
    if kind == "offset_above":
        value = float(spec.get("value", 1.0))
        base = lr if np.isfinite(lr) else 0.0
        return lambda n: base + value
    raise ConfigError(f"unknown rule kind {spec.get('kind')!r}")


def _build_scenario(cfg: dict, args) -> Scenario:
    seq = _build_sequence(cfg, depth_override=args.depth)
    L = ser.convexfn_from_json(cfg["L"]) if "L" in cfg else seq.log_mgf_fn
    lam = float(cfg.get("lambda", 0.0))
    lr = right_deriv_limit(L, lam, DEFAULT_TOL)
    x_rule = _build_rule(cfg.get("x_rule"), lr, "approach_below" if np.isfinite(lr) else "neg_n")
    y_rule = _build_rule(cfg.get("y_rule"), lr, "const")
    n_grid = tuple(args.n_grid or cfg.get("n_grid", [100, 1000, 10000, 100000]))
    tol = args.tol if args.tol is not None else float(cfg.get("tol", 0.05))
    return Scenario(
        sequence=seq,
        L=L,
        lam=lam,
        x_rule=x_rule,
        y_rule=y_rule,
        n_grid=n_grid,
        interval_kind=cfg.get("interval", "closed"),
        tol=tol,
        name=cfg.get("name", ""),
    )


def _cmd_transform(cfg: dict, args) -> int:
    f = ser.convexfn_from_json(cfg["function"])
    grid = None
    gspec = cfg.get("slope_grid")
    if isinstance(gspec, list):
        grid = np.asarray(gspec, dtype=np.float64)
    elif isinstance(gspec, dict):
        grid = np.linspace(
            float(gspec["lo"]), float(gspec["hi"]), int(gspec.get("count", 256))
        )
    conj = conjugate(f, slope_grid=grid)
    _emit(ser.conjugatefn_to_json(conj), args.out, args.quiet)
    return EXIT_PASS


def _cmd_classify(cfg: dict, args) -> int:
    f = ser.convexfn_from_json(cfg["function"])
    lam = float(cfg["lambda"])
    case = classify_point(f, lam)
    payload = {
        "case": case.value,
        "lambda_tilde": None if f.improper else lambda_tilde(f, lam),
        "Lr_plus": right_deriv_limit(f, lam),
        "right_deriv_at": right_deriv(f, lam),
        "left_deriv_at": left_deriv(f, lam),
    }
    _emit(ser.jsonable(payload), args.out, args.quiet)
    return EXIT_PASS


def _cmd_generate(cfg: dict, args) -> int:
    seed = ser.seedspec_from_json(cfg["seed"])
    if args.depth is not None:
        seed = SeedSpec(f=seed.f, lam=seed.lam, eps=seed.eps, depth=args.depth)
    ns = [int(n) for n in (args.n_grid or cfg.get("n", [100, 1000]))]
    lf = build_lf(seed)
    conj = conjugate(lf)
    out = Path(args.out or "measures.csv")
    written = []
    for n in ns:
        mu = build_measure(conj, n)
        path = out if len(ns) == 1 else out.with_name(f"{out.stem}_n{n}{out.suffix or '.csv'}")
        ser.write_measure_csv(mu, path)
        written.append(str(path))
    if not args.quiet:
        for p in written:
            print(p)
    return EXIT_PASS


def _cmd_verify(cfg: dict, args) -> int:
    scenario = _build_scenario(cfg.get("scenario", cfg), args)
    enforce = bool(cfg.get("scenario", cfg).get("enforce", True))
    report = verify_theorem(scenario, enforce_hypotheses=enforce)
    payload = ser.report_to_json(report)
    _emit(payload, args.out, args.quiet)
    if args.out:
        ser.report_to_csv(report, Path(args.out).with_suffix(".csv"))
    if not args.quiet:
        print(
            f"verify {scenario.name or scenario.sequence.kind}: "
            f"target={report.target:.6g} extrapolated={report.extrapolated:.6g} "
            f"abs_error={report.abs_error:.3g} tol={report.tolerance:g} "
            f"-> {'PASS' if report.passed else 'FAIL'}",
            file=sys.stderr,
        )
    return EXIT_PASS if report.passed else EXIT_FAIL


def _cmd_curve(cfg: dict, args) -> int:
    f = ser.convexfn_from_json(cfg["function"])
    lam = float(cfg["lambda"])
    eps = float(cfg["eps"])
    zspec = cfg.get("z_grid", {"count": 41})
    if isinstance(zspec, list):
        grid = np.asarray(zspec, dtype=np.float64)
    else:
        count = int(zspec.get("count", 41))
        lo = float(zspec["lo"]) if "lo" in zspec else right_deriv_limit(f, lam)
        hi = float(zspec["hi"]) if "hi" in zspec else left_deriv(f, lam + eps)
        if not (np.isfinite(lo) and np.isfinite(hi)):
            raise ConfigError("curve grid endpoints must be finite; give lo/hi")
        grid = lo + (hi - lo) * np.arange(count) / (count + 1)
    cur = corollary_curve(f, lam, eps, grid)
    _emit(ser.curve_to_json(cur), args.out, args.quiet)
    if args.out:
        ser.curve_to_csv(cur, Path(args.out).with_suffix(".csv"))
    return EXIT_PASS


_COMMANDS = {
    "transform": _cmd_transform,
    "classify": _cmd_classify,
    "generate": _cmd_generate,
    "verify": _cmd_verify,
    "curve": _cmd_curve,
}


def _parse_n_grid(text: str):
    try:
        return [int(tok) for tok in text.split(",") if tok]
    except ValueError:
        raise argparse.ArgumentTypeError("n-grid must be comma-separated integers")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pslimits", description=__doc__)
    p.add_argument("command", choices=sorted(_COMMANDS))
    p.add_argument("--config", required=True, help="path to the JSON run config")
    p.add_argument("--out", default=None, help="output path (JSON; verify/curve add a CSV)")
    p.add_argument("--n-grid", type=_parse_n_grid, default=None, help="e.g. 100,1000,10000")
    p.add_argument("--depth", type=int, default=None, help="chord depth override")
    p.add_argument("--tol", type=float, default=None, help="verification tolerance override")
    p.add_argument("--quiet", action="store_true")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _load_config(args.config)
        return _COMMANDS[args.command](cfg, args)
    except NonMonotoneDivergence as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except HypothesisViolated as exc:
        case = f" [excluded case {exc.excluded_case}]" if exc.excluded_case else ""
        tag = f" ({exc.point_case})" if exc.point_case else ""
        print(f"hypothesis violated{case}{tag}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (ConfigError, KeyError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except PSLimitsError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
