"""Legendre-Fenchel conjugation.

Two routes, kept deliberately distinct so the exact one can serve as an
oracle for the sampled one:

* structural (knots + optional affine rays covering the domain): the
  conjugate is computed exactly by the breakpoint/slope swap -- the
  conjugate of such a function is again of that shape, with knots at the
  piece slopes and slopes at the knot abscissae;
* everything else: a pwl approximation sampled on a slope grid through
  :func:`conjugate_at`, which maximizes ``x*t - f(t)`` by bracketed
  golden-section search on oracle regions (and exactly over knots).

The conjugate's continuity extension at ``-inf`` (value ``-f(0+)``) is
attached whenever the right-derivative limit of the source at 0 is ``-inf``.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import kernels
from .convex import (
    DEFAULT_TOL,
    ConvexFn,
    Tolerances,
    eval_many,
    fn_eval,
    left_deriv,
    right_deriv,
    right_deriv_limit,
    right_limit_value,
)
from .errors import ExtensionUnavailable, ImproperInput, PreconditionViolated
from .extreal import NEG_INF, POS_INF, as_extreal

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class ConjugateFn:
    """A conjugate, stored in the same representation as its source.

    ``enum_lo``/``enum_hi`` delimit the closure of the source's slope range:
    the sub-interval of the conjugate's effective domain that dense
    enumerations cover (the conjugate is affine beyond it, so no supremum is
    attained there).  ``minus_inf_value`` is the continuity extension at
    ``-inf``, present only when the source's right-derivative limit at 0 is
    ``-inf``.
    """

    inner: ConvexFn
    source_hash: str
    enum_lo: float
    enum_hi: float
    minus_inf_value: Optional[float] = None


def structure_key(f: ConvexFn) -> str:
    """Stable identifier of a function's structure (stable across runs for
    serializable instances; id-based for raw oracles)."""
    parts = [repr((f.dom_lo, f.dom_hi, f.ray_left, f.ray_right, f.improper, f.improper_hi))]
    if f.knots_t is not None:
        parts.append(f.knots_t.tobytes().hex())
        parts.append(f.knots_v.tobytes().hex())
    if f.oracle_spec is not None:
        parts.append(repr(sorted(f.oracle_spec.items())))
    elif f.oracle is not None:
        parts.append(repr(f.oracle))
    return hashlib.sha1("|".join(parts).encode()).hexdigest()[:16]


# -- pointwise conjugation ----------------------------------------------------


def _golden_max(phi, lo: float, hi: float, n_grid: int = 33, iters: int = 120) -> float:
    """Max of a concave function on [lo, hi]: coarse grid bracketing, then
    golden-section refinement around the grid argmax."""
    grid = np.linspace(lo, hi, n_grid)
    vals = phi(grid)
    best = float(np.max(vals))
    i = int(np.argmax(vals))
    a = grid[max(i - 1, 0)]
    b = grid[min(i + 1, n_grid - 1)]
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc = float(phi(np.array([c]))[0])
    fd = float(phi(np.array([d]))[0])
    for _ in range(iters):
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = float(phi(np.array([c]))[0])
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = float(phi(np.array([d]))[0])
    return max(best, fc, fd)


def _golden_max_batch(phi, lo: float, hi: float, nx: int, n_grid: int = 33, iters: int = 120):
    """Vectorized :func:`_golden_max` for a batch of concave objectives
    sharing the bracket [lo, hi]; ``phi(ts)`` maps an (nx,) abscissa array to
    the per-objective values at those abscissae."""
    grid = np.linspace(lo, hi, n_grid)
    vals = np.stack([phi(np.full(nx, g)) for g in grid])  # (n_grid, nx)
    best = np.max(vals, axis=0)
    idx = np.argmax(vals, axis=0)
    a = grid[np.maximum(idx - 1, 0)]
    b = grid[np.minimum(idx + 1, n_grid - 1)]
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc = phi(c)
    fd = phi(d)
    for _ in range(iters):
        take = fc >= fd  # keep [a, d] where True, [c, b] where False
        b = np.where(take, d, b)
        a = np.where(take, a, c)
        c_cand = b - _GOLDEN * (b - a)
        d_cand = a + _GOLDEN * (b - a)
        probe = np.where(take, c_cand, d_cand)
        pv = phi(probe)
        c, d = np.where(take, c_cand, d), np.where(take, c, d_cand)
        fc, fd = np.where(take, pv, fd), np.where(take, fc, pv)
    return np.maximum(best, np.maximum(fc, fd))


def _concave_max(f: ConvexFn, x: float, lo: float, hi: float) -> float:
    """sup of t -> x*t - f(t) over [lo, hi] (either end may be infinite)."""

    def phi(ts):
        return x * ts - eval_many(f, ts)

    if lo == hi:
        return float(phi(np.array([lo]))[0])
    if math.isfinite(lo) and math.isfinite(hi):
        return _golden_max(phi, lo, hi)
    # expand a window around a finite anchor until the argmax detaches from
    # any unbounded edge; concavity makes the escape test sound
    if math.isfinite(lo):
        anchor = lo + 1.0
    elif math.isfinite(hi):
        anchor = hi - 1.0
    else:
        anchor = 0.0
    for k in range(0, 62):
        a = max(lo, anchor - 2.0**k)
        b = min(hi, anchor + 2.0**k)
        grid = np.linspace(a, b, 65)
        vals = phi(grid)
        i = int(np.argmax(vals))
        at_open_left = i == 0 and not math.isfinite(lo) and a > lo
        at_open_right = i == 64 and not math.isfinite(hi) and b < hi
        if not (at_open_left or at_open_right):
            return _golden_max(phi, grid[max(i - 1, 0)], grid[min(i + 1, 64)])
    return POS_INF


def conjugate_at(f: ConvexFn, x: float, tol: Tolerances = DEFAULT_TOL) -> float:
    """Conjugate value ``sup_t (x*t - f(t))``.

    ``x = -inf`` is admitted through the continuity extension (value
    ``-f(0+)``) when the source's right-derivative limit at 0 is ``-inf``;
    otherwise :class:`ExtensionUnavailable` is raised.
    """
    if f.improper:
        raise ImproperInput("conjugate of an improper function")
    x = as_extreal(x)
    if x == NEG_INF:
        if right_deriv_limit(f, 0.0, tol) != NEG_INF:
            raise ExtensionUnavailable(
                "continuity extension needs a -inf right-derivative limit at 0"
            )
        return -right_limit_value(f, 0.0, tol)
    if x == POS_INF:
        raise PreconditionViolated("conjugate_at requires x finite or -inf")
    return float(conjugate_at_many(f, np.array([x]), tol)[0])


def conjugate_at_many(f: ConvexFn, xs, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Vectorized conjugate over finite abscissae."""
    if f.improper:
        raise ImproperInput("conjugate of an improper function")
    xs = np.atleast_1d(np.asarray(xs, dtype=np.float64))
    out = np.full(xs.shape, NEG_INF)
    kt, kv = f.knots_t, f.knots_v
    if kt is not None:
        out = np.maximum(out, kernels.pwl_conj_sup(kt, kv, xs))
        if f.ray_left is not None:
            below = xs < f.ray_left
            if below.any():
                if f.dom_lo == NEG_INF:
                    out[below] = POS_INF
                else:
                    v_lo = fn_eval(f, f.dom_lo)
                    out[below] = np.maximum(out[below], xs[below] * f.dom_lo - v_lo)
        if f.ray_right is not None:
            above = xs > f.ray_right
            if above.any():
                if f.dom_hi == POS_INF:
                    out[above] = POS_INF
                else:
                    v_hi = fn_eval(f, f.dom_hi)
                    out[above] = np.maximum(out[above], xs[above] * f.dom_hi - v_hi)
    # oracle-covered regions
    regions = []
    if f.oracle is not None:
        if kt is None:
            regions.append((f.dom_lo, f.dom_hi))
        else:
            if f.ray_left is None and f.dom_lo < kt[0]:
                regions.append((f.dom_lo, kt[0]))
            if f.ray_right is None and f.dom_hi > kt[-1]:
                regions.append((kt[-1], f.dom_hi))
    for lo, hi in regions:
        if math.isfinite(lo) and math.isfinite(hi):

            def phi(ts):
                return xs * ts - eval_many(f, ts)

            reg = _golden_max_batch(phi, lo, hi, xs.size)
            out = np.maximum(out, reg)
        else:
            for i, x in enumerate(xs):
                out[i] = max(out[i], _concave_max(f, float(x), lo, hi))
    return out


# -- whole-function conjugation ----------------------------------------------


def _merge_collinear(kt: np.ndarray, kv: np.ndarray):
    """Drop interior knots whose adjacent piece slopes coincide exactly."""
    if kt.size <= 2:
        return kt, kv
    slopes = np.diff(kv) / np.diff(kt)
    keep = np.ones(kt.size, dtype=bool)
    keep[1:-1] = slopes[1:] != slopes[:-1]
    return kt[keep], kv[keep]


def _conjugate_structural(f: ConvexFn) -> ConvexFn:
    kt, kv = _merge_collinear(f.knots_t, f.knots_v)
    if kt.size == 1:
        # point mass in t: the conjugate is globally affine with slope kt[0]
        t0, v0 = float(kt[0]), float(kv[0])
        return ConvexFn(
            dom_lo=NEG_INF,
            dom_hi=POS_INF,
            knots_t=np.array([0.0]),
            knots_v=np.array([-v0]),
            ray_left=t0,
            ray_right=t0,
        )
    slopes = np.diff(kv) / np.diff(kt)
    xs = [float(m) for m in slopes]
    vs = [float(m * t - v) for m, t, v in zip(slopes, kt[:-1], kv[:-1])]
    dom_lo, dom_hi = NEG_INF, POS_INF
    ray_left, ray_right = float(kt[0]), float(kt[-1])
    if f.ray_left is not None:
        a = float(f.ray_left)
        dom_lo = a
        ray_left = None
        if a < xs[0]:
            xs.insert(0, a)
            vs.insert(0, a * float(kt[0]) - float(kv[0]))
    if f.ray_right is not None:
        b = float(f.ray_right)
        dom_hi = b
        ray_right = None
        if b > xs[-1]:
            xs.append(b)
            vs.append(b * float(kt[-1]) - float(kv[-1]))
    return ConvexFn(
        dom_lo=dom_lo,
        dom_hi=dom_hi,
        knots_t=np.array(xs),
        knots_v=np.array(vs),
        ray_left=ray_left,
        ray_right=ray_right,
    )


def _lower_hull(xs: np.ndarray, vs: np.ndarray):
    """Lower convex hull of sampled points; removes maximization noise so
    the sampled conjugate is a valid convex instance."""
    hull = []
    for x, v in zip(xs, vs):
        if not math.isfinite(v):
            continue
        hull.append((x, v))
        while len(hull) >= 3:
            (x1, v1), (x2, v2), (x3, v3) = hull[-3], hull[-2], hull[-1]
            if (v2 - v1) * (x3 - x2) <= (v3 - v2) * (x2 - x1):
                break
            del hull[-2]
    out_x = np.array([p[0] for p in hull])
    out_v = np.array([p[1] for p in hull])
    return out_x, out_v


def _default_slope_grid(f: ConvexFn, n_slopes: int, window: float, tol: Tolerances):
    """[slope at dom_lo+, slope at dom_hi-] clipped to finite values: infinite
    endpoint slopes are replaced by the slope at a resolution-limited offset,
    infinite domain endpoints by the slope at +-window."""
    span = f.dom_hi - f.dom_lo
    w = min(1.0, span if math.isfinite(span) else 1.0) * 2.0**-20
    if f.dom_lo == NEG_INF:
        s_lo = right_deriv(f, -window, tol)
    else:
        s_lo = right_deriv_limit(f, f.dom_lo, tol)
        if s_lo == NEG_INF:
            s_lo = right_deriv(f, f.dom_lo + w, tol)
    if f.dom_hi == POS_INF:
        s_hi = left_deriv(f, window, tol)
    else:
        s_hi = left_deriv(f, f.dom_hi, tol)
        if s_hi == POS_INF:
            s_hi = left_deriv(f, f.dom_hi - w, tol)
    return float(s_lo), float(s_hi)


def conjugate(
    f: ConvexFn,
    slope_grid=None,
    n_slopes: int = 256,
    window: float = 8.0,
    tol: Tolerances = DEFAULT_TOL,
) -> ConjugateFn:
    """Full conjugate: exact for structural (knots+rays) sources, a sampled
    pwl approximation on a slope grid otherwise.

    ``slope_grid`` overrides the sampling abscissae for non-structural
    sources; the default is ``n_slopes`` uniform slopes spanning the clipped
    slope range (see :func:`_default_slope_grid`).
    """
    if f.improper:
        raise ImproperInput("conjugate of an improper function")
    src = structure_key(f)
    d0 = right_deriv_limit(f, 0.0, tol) if f.dom_lo <= 0.0 <= f.dom_hi else None
    minus_inf = None
    if d0 == NEG_INF:
        minus_inf = -right_limit_value(f, 0.0, tol)
    if f.is_structural():
        inner = _conjugate_structural(f)
        return ConjugateFn(
            inner=inner,
            source_hash=src,
            enum_lo=float(inner.knots_t[0]),
            enum_hi=float(inner.knots_t[-1]),
            minus_inf_value=minus_inf,
        )
    # sampled route
    if slope_grid is None:
        s_lo, s_hi = _default_slope_grid(f, n_slopes, window, tol)
        if not (s_hi > s_lo):
            grid = np.array([s_lo])
        else:
            grid = np.linspace(s_lo, s_hi, n_slopes)
    else:
        grid = np.sort(np.asarray(slope_grid, dtype=np.float64))
    vals = conjugate_at_many(f, grid, tol)
    gx, gv = _lower_hull(grid, vals)
    if gx.size == 0:
        raise PreconditionViolated("conjugate sampling produced no finite values")
    ray_left = float(f.dom_lo) if math.isfinite(f.dom_lo) else None
    ray_right = float(f.dom_hi) if math.isfinite(f.dom_hi) else None
    inner = ConvexFn(
        dom_lo=NEG_INF if ray_left is not None else float(gx[0]),
        dom_hi=POS_INF if ray_right is not None else float(gx[-1]),
        knots_t=gx,
        knots_v=gv,
        ray_left=ray_left,
        ray_right=ray_right,
    )
    # true slope range of the source, for dense enumeration (may be infinite)
    enum_lo = right_deriv_limit(f, f.dom_lo, tol) if math.isfinite(f.dom_lo) else NEG_INF
    enum_hi = left_deriv(f, f.dom_hi, tol) if math.isfinite(f.dom_hi) else POS_INF
    return ConjugateFn(
        inner=inner,
        source_hash=src,
        enum_lo=float(enum_lo),
        enum_hi=float(enum_hi),
        minus_inf_value=minus_inf,
    )


def biconjugate_check(f: ConvexFn, grid, slope_grid=None, tol: Tolerances = DEFAULT_TOL) -> dict:
    """Evaluate ``|f - (f*)*|`` on ``grid``; exact-0 on the structural path."""
    c1 = conjugate(f, slope_grid=slope_grid, tol=tol)
    c2 = conjugate(c1.inner, tol=tol)
    grid = np.asarray(grid, dtype=np.float64)
    fv = eval_many(f, grid)
    gv = eval_many(c2.inner, grid)
    dev = np.abs(fv - gv)
    dev[(fv == gv)] = 0.0  # covers matching infinities
    return {
        "grid": grid.tolist(),
        "deviations": dev.tolist(),
        "max_deviation": float(np.max(dev)) if dev.size else 0.0,
    }
