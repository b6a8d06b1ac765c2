"""One-dimensional extended-real convex functions.

A :class:`ConvexFn` stores an effective domain, an optional exact
piecewise-linear (pwl) part given by knots, optional affine rays continuing
the pwl part beyond its first/last knot, and an optional evaluation oracle
for smooth regions.  Values outside the effective domain are ``+inf``;
improper instances (taking ``-inf`` on a ray) are representable but only
interrogated through properness predicates, every other operation rejects
them.

On top of evaluation the module provides the one-sided derivative maps, the
right limit ``sigma(lam+)`` of the right-derivative map, the end point of the
affine run starting at a query point, and the structural classification of a
point into exactly one of six cases (limit point of slope values, affine run
then kink, affine ray, finite value then ``+inf``, all ``+inf``, improper).

All operations are pure; instances are immutable and safe to share across
threads.  Caller-supplied oracles must be deterministic, side-effect free
and vectorized (ndarray -> ndarray).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional

import numpy as np

from . import kernels
from .errors import (
    ImproperInput,
    NoConvergence,
    OracleMissing,
    PreconditionViolated,
)
from .extreal import NEG_INF, POS_INF, as_extreal

_EPS = float(np.finfo(np.float64).eps)


@dataclass(frozen=True)
class Tolerances:
    """Numeric tolerances shared by derivative, classification and solver ops.

    fd_rel          relative stabilization threshold of the finite-difference
                    schedule (h = 2^-10 .. 2^-40)
    affine_pwl      absolute slope-equality tolerance on exact pwl structure
    affine_oracle   slope-equality tolerance on sampled (oracle) structure
    kink_rtol       relative slope-jump threshold separating "slope values
                    accumulate at the limit" from "affine run then kink"
    tilde_snap      affine runs shorter than this count as resolution
                    artifacts and snap to the query point
    bisect_rel      relative width target of bisection searches
    limit_rel       stabilization threshold for right-limits of derivatives
    value_abs       stabilization threshold for right-limits of values
    zero_cont       tolerance on |f(0+) - f(0)| for right-continuity at 0
    """

    fd_rel: float = 1e-8
    affine_pwl: float = 1e-9
    affine_oracle: float = 1e-6
    kink_rtol: float = 1e-4
    tilde_snap: float = 1e-6
    bisect_rel: float = 1e-10
    limit_rel: float = 1e-7
    value_abs: float = 1e-8
    zero_cont: float = 1e-6

    def halved(self) -> "Tolerances":
        return Tolerances(
            fd_rel=self.fd_rel,
            affine_pwl=self.affine_pwl / 2,
            affine_oracle=self.affine_oracle / 2,
            kink_rtol=self.kink_rtol / 2,
            tilde_snap=self.tilde_snap / 2,
            bisect_rel=self.bisect_rel,
            limit_rel=self.limit_rel,
            value_abs=self.value_abs,
            zero_cont=self.zero_cont / 2,
        )


DEFAULT_TOL = Tolerances()


class PointCase(str, Enum):
    I_LIMIT_POINT = "I_limit_point"
    II_AFFINE_THEN_KINK = "II_affine_then_kink"
    III_AFFINE_RAY = "III_affine_ray"
    IV_FINITE_THEN_INFINITE = "IV_finite_then_infinite"
    V_ALL_INFINITE = "V_all_infinite"
    IMPROPER = "IMPROPER"


@dataclass(frozen=True)
class ConvexFn:
    """Extended-real convex function on the line.

    Regions are covered by exactly one mechanism: the knot span by linear
    interpolation, the part of the domain left (right) of the knot span by
    ``ray_left`` (``ray_right``) when set -- an affine continuation anchored
    at the adjacent knot -- and by ``oracle`` otherwise.
    """

    dom_lo: float = NEG_INF
    dom_hi: float = POS_INF
    knots_t: Optional[np.ndarray] = None
    knots_v: Optional[np.ndarray] = None
    ray_left: Optional[float] = None
    ray_right: Optional[float] = None
    oracle: Optional[Callable[[np.ndarray], np.ndarray]] = None
    oracle_spec: Optional[dict] = None
    improper: bool = False
    improper_hi: float = field(default=math.nan)

    def __post_init__(self):
        object.__setattr__(self, "dom_lo", as_extreal(self.dom_lo))
        object.__setattr__(self, "dom_hi", as_extreal(self.dom_hi))
        if self.dom_hi < self.dom_lo:
            raise ValueError("empty effective domain")
        if self.improper:
            if not math.isfinite(self.improper_hi) and self.improper_hi != POS_INF:
                raise ValueError("improper instances need the end of the -inf ray")
            return
        kt, kv = self.knots_t, self.knots_v
        if (kt is None) != (kv is None):
            raise ValueError("knots_t and knots_v must be given together")
        if kt is not None:
            kt = np.ascontiguousarray(kt, dtype=np.float64)
            kv = np.ascontiguousarray(kv, dtype=np.float64)
            if kt.ndim != 1 or kt.shape != kv.shape or kt.size == 0:
                raise ValueError("knots must be matching non-empty 1-d arrays")
            if np.any(~np.isfinite(kt)) or np.any(~np.isfinite(kv)):
                raise ValueError("knots must be finite")
            if np.any(np.diff(kt) <= 0):
                raise ValueError("knot abscissae must be strictly increasing")
            slopes = np.diff(kv) / np.diff(kt)
            if slopes.size and np.any(np.diff(slopes) < -1e-12 * np.maximum(1.0, np.abs(slopes[1:]))):
                raise ValueError("knot slopes must be non-decreasing (convexity)")
            if kt[0] < self.dom_lo or kt[-1] > self.dom_hi:
                raise ValueError("knots outside the effective domain")
            if self.ray_left is not None and slopes.size and self.ray_left > slopes[0] + 1e-9:
                raise ValueError("left ray slope exceeds first piece slope")
            if self.ray_right is not None and slopes.size and self.ray_right < slopes[-1] - 1e-9:
                raise ValueError("right ray slope below last piece slope")
            kt.setflags(write=False)
            kv.setflags(write=False)
            object.__setattr__(self, "knots_t", kt)
            object.__setattr__(self, "knots_v", kv)
        else:
            if self.ray_left is not None or self.ray_right is not None:
                raise ValueError("rays require knots to anchor on")
            if self.oracle is None:
                raise ValueError("need knots or an oracle")

    # -- structure helpers -------------------------------------------------

    @property
    def has_knots(self) -> bool:
        return self.knots_t is not None

    def piece_slopes(self) -> np.ndarray:
        if not self.has_knots or self.knots_t.size < 2:
            return np.empty(0)
        return np.diff(self.knots_v) / np.diff(self.knots_t)

    def is_structural(self) -> bool:
        """True when knots plus rays cover the whole effective domain, so
        every question has an exact answer."""
        if self.improper or not self.has_knots:
            return False
        kt = self.knots_t
        left_ok = (self.dom_lo == kt[0]) or (self.ray_left is not None)
        right_ok = (self.dom_hi == kt[-1]) or (self.ray_right is not None)
        return left_ok and right_ok


def pwl(knots, dom=None) -> ConvexFn:
    """Build an exact piecewise-linear instance from ``[(t, v), ...]``.

    Without ``dom`` the effective domain is the knot span.
    """
    pts = sorted((float(t), float(v)) for t, v in knots)
    kt = np.array([p[0] for p in pts])
    kv = np.array([p[1] for p in pts])
    lo, hi = (kt[0], kt[-1]) if dom is None else (float(dom[0]), float(dom[1]))
    return ConvexFn(dom_lo=lo, dom_hi=hi, knots_t=kt, knots_v=kv)


def from_oracle(fn, dom=(NEG_INF, POS_INF), spec=None) -> ConvexFn:
    return ConvexFn(dom_lo=dom[0], dom_hi=dom[1], oracle=fn, oracle_spec=spec)


def improper_shape(T: float) -> ConvexFn:
    """The improper shape: 0 at 0, ``-inf`` on ]0,T], ``+inf`` elsewhere."""
    return ConvexFn(dom_lo=0.0, dom_hi=float(T), improper=True, improper_hi=float(T))


def is_proper_on_nonneg(f: ConvexFn) -> bool:
    return not f.improper


def _require_proper(f: ConvexFn):
    if f.improper:
        raise ImproperInput("operation rejects improper functions")


# -- evaluation -------------------------------------------------------------


def _improper_value(f: ConvexFn, t: float) -> float:
    if t == 0.0:
        return 0.0
    if 0.0 < t <= f.improper_hi:
        return NEG_INF
    return POS_INF


def eval_many(f: ConvexFn, ts) -> np.ndarray:
    """Vectorized evaluation; ``+inf`` outside the effective domain."""
    ts = np.atleast_1d(np.asarray(ts, dtype=np.float64))
    if f.improper:
        return np.array([_improper_value(f, t) for t in ts])
    out = np.full(ts.shape, POS_INF)
    inside = (ts >= f.dom_lo) & (ts <= f.dom_hi)
    if not inside.any():
        return out
    rem = inside.copy()
    kt, kv = f.knots_t, f.knots_v
    if kt is not None:
        if kt.size >= 2:
            on = rem & (ts >= kt[0]) & (ts <= kt[-1])
            if on.any():
                out[on] = kernels.pwl_eval(kt, kv, ts[on])
                rem &= ~on
        else:
            on = rem & (ts == kt[0])
            out[on] = kv[0]
            rem &= ~on
        if f.ray_left is not None:
            on = rem & (ts < kt[0])
            out[on] = kv[0] + f.ray_left * (ts[on] - kt[0])
            rem &= ~on
        if f.ray_right is not None:
            on = rem & (ts > kt[-1])
            out[on] = kv[-1] + f.ray_right * (ts[on] - kt[-1])
            rem &= ~on
    if rem.any():
        if f.oracle is None:
            raise OracleMissing(
                f"no knots, ray or oracle covering t={ts[rem][0]!r}"
            )
        out[rem] = np.asarray(f.oracle(ts[rem]), dtype=np.float64)
    return out


def fn_eval(f: ConvexFn, t: float) -> float:
    """Scalar evaluation of ``f`` at ``t``."""
    return float(eval_many(f, [as_extreal(t)])[0])


def convexity_defect(f: ConvexFn, ts) -> float:
    """Largest violation of the chord inequality over consecutive sampled
    triples (``<= 0`` means convex on the sample)."""
    ts = np.sort(np.asarray(ts, dtype=np.float64))
    vs = eval_many(f, ts)
    fin = np.isfinite(vs)
    ts, vs = ts[fin], vs[fin]
    if ts.size < 3:
        return 0.0
    t1, t2, t3 = ts[:-2], ts[1:-1], ts[2:]
    v1, v2, v3 = vs[:-2], vs[1:-1], vs[2:]
    w = (t2 - t1) / (t3 - t1)
    chord = v1 + w * (v3 - v1)
    return float(np.max(v2 - chord))


# -- finite differences ------------------------------------------------------

_FD_KMIN, _FD_KMAX = 10, 40


def _fd_schedule(room: float):
    h0 = 2.0 ** (-_FD_KMIN)
    if math.isfinite(room):
        h0 = min(h0, room / 4.0)
    if h0 <= 0.0:
        return []
    n = _FD_KMAX - _FD_KMIN + 1
    return [h0 * 2.0 ** (-i) for i in range(n)]


def _stabilized(qs, scale_hint, rel, noise=0.0):
    if len(qs) < 3:
        return False
    a, b, c = qs[-3], qs[-2], qs[-1]
    tol = max(rel * max(1.0, abs(c), scale_hint), 4.0 * noise)
    return abs(a - b) <= tol and abs(b - c) <= tol


def _fd_one_sided(f: ConvexFn, t: float, ft: float, sign: int, tol: Tolerances) -> float:
    """Forward (sign=+1) or backward (sign=-1) difference quotients over a
    halving h-schedule.  For convex f the quotients are monotone in h, so a
    schedule that keeps moving at its end means the one-sided derivative is
    infinite (of the matching sign)."""
    room = (f.dom_hi - t) if sign > 0 else (t - f.dom_lo)
    qs = []
    last_h = None
    for h in _fd_schedule(room):
        fv = fn_eval(f, t + sign * h)
        if fv == POS_INF:
            continue
        if fv == NEG_INF:
            return NEG_INF if sign > 0 else POS_INF
        q = sign * (fv - ft) / h
        qs.append(q)
        last_h = h
        noise = 2.0 * _EPS * max(1.0, abs(ft), abs(fv)) / h
        if _stabilized(qs, 0.0, tol.fd_rel, noise):
            return qs[-1]
    if not qs:
        # no finite value on that side inside the domain
        return POS_INF if sign > 0 else NEG_INF
    arr = np.array(qs)
    steps = np.diff(arr)
    noise = 2.0 * _EPS * max(1.0, abs(ft)) / last_h
    slack = max(1e-10 * max(1.0, abs(arr[-1])), 4.0 * noise)
    if sign > 0 and np.all(steps <= slack):
        return NEG_INF
    if sign < 0 and np.all(steps >= -slack):
        return POS_INF
    raise NoConvergence(
        f"one-sided difference quotients did not stabilize at t={t} "
        f"(last values {arr[-3:].tolist()})"
    )


# -- one-sided derivatives ---------------------------------------------------


def right_deriv(f: ConvexFn, t: float, tol: Tolerances = DEFAULT_TOL) -> float:
    """Right derivative, with ``+inf`` when f is ``+inf`` on all of ]t,inf[
    and ``-inf`` when f takes ``-inf`` somewhere right of t."""
    t = as_extreal(t)
    if f.improper:
        return NEG_INF if t < f.improper_hi else POS_INF
    if t >= f.dom_hi:
        return POS_INF
    if t < f.dom_lo:
        return NEG_INF
    kt, kv = f.knots_t, f.knots_v
    if kt is not None and kt.size >= 2 and kt[0] <= t < kt[-1]:
        j = int(np.searchsorted(kt, t, side="right")) - 1
        return float((kv[j + 1] - kv[j]) / (kt[j + 1] - kt[j]))
    if kt is not None and t >= kt[-1] and f.ray_right is not None:
        return float(f.ray_right)
    if kt is not None and t < kt[0] and f.ray_left is not None:
        return float(f.ray_left)
    ft = fn_eval(f, t)
    if ft == POS_INF:
        # +inf at a domain edge with finite values immediately to the right
        return NEG_INF
    return _fd_one_sided(f, t, ft, +1, tol)


def left_deriv(f: ConvexFn, t: float, tol: Tolerances = DEFAULT_TOL) -> float:
    """Mirror of :func:`right_deriv` with backward differences."""
    t = as_extreal(t)
    if f.improper:
        # -inf values start right of 0
        return NEG_INF if t <= 0.0 or t <= f.improper_hi else POS_INF
    if t <= f.dom_lo:
        return NEG_INF
    if t > f.dom_hi:
        return POS_INF
    kt, kv = f.knots_t, f.knots_v
    if kt is not None and kt.size >= 2 and kt[0] < t <= kt[-1]:
        j = int(np.searchsorted(kt, t, side="left")) - 1
        return float((kv[j + 1] - kv[j]) / (kt[j + 1] - kt[j]))
    if kt is not None and t <= kt[0] and f.ray_left is not None:
        return float(f.ray_left)
    if kt is not None and t > kt[-1] and f.ray_right is not None:
        return float(f.ray_right)
    ft = fn_eval(f, t)
    if ft == POS_INF:
        return POS_INF
    return _fd_one_sided(f, t, ft, -1, tol)


def _limit_schedule(f: ConvexFn, lam: float):
    room = f.dom_hi - lam
    span = 1.0 if not math.isfinite(room) else room / 2.0
    return [span * 2.0 ** (-j) for j in range(2, 48)]


def right_deriv_limit(f: ConvexFn, lam: float, tol: Tolerances = DEFAULT_TOL) -> float:
    """Right limit of the right-derivative map at ``lam``.

    Exact on pwl structure (the slope of the piece immediately right of
    ``lam``); a stabilized limit of sampled right derivatives otherwise.
    Distinct from ``right_deriv(f, lam)`` only at a point where lower
    semicontinuity fails (possible at 0).
    """
    lam = as_extreal(lam)
    if f.improper:
        return NEG_INF if lam < f.improper_hi else POS_INF
    if lam >= f.dom_hi:
        return POS_INF
    if lam < f.dom_lo:
        return NEG_INF
    kt = f.knots_t
    covered_exact = kt is not None and (
        (kt.size >= 2 and kt[0] <= lam < kt[-1])
        or (lam >= kt[-1] and f.ray_right is not None)
        or (lam < kt[0] and f.ray_left is not None)
    )
    if covered_exact:
        return right_deriv(f, lam, tol)
    qs = []
    for d in _limit_schedule(f, lam):
        q = right_deriv(f, lam + d, tol)
        if q == POS_INF:
            continue
        if q == NEG_INF:
            return NEG_INF
        qs.append(q)
        if _stabilized(qs, 0.0, tol.limit_rel):
            return qs[-1]
    if not qs:
        return POS_INF
    arr = np.array(qs)
    slack = 1e-10 * max(1.0, abs(arr[-1]))
    if np.all(np.diff(arr) <= slack):
        return NEG_INF
    raise NoConvergence(f"right-derivative limit did not stabilize at lam={lam}")


def right_limit_value(f: ConvexFn, lam: float, tol: Tolerances = DEFAULT_TOL) -> float:
    """f(lam+), the right limit of the values; ``+inf`` when no right
    neighborhood meets the effective domain."""
    lam = as_extreal(lam)
    _require_proper(f)
    if lam >= f.dom_hi:
        return POS_INF
    if lam < f.dom_lo:
        # a right neighborhood of lam still sits left of the domain
        return POS_INF
    kt = f.knots_t
    if kt is not None and (
        (kt.size >= 2 and kt[0] <= lam < kt[-1])
        or (lam >= kt[-1] and f.ray_right is not None)
        or (lam < kt[0] and f.ray_left is not None)
    ):
        # pwl parts are continuous: the right limit equals the value
        return fn_eval(f, lam)
    vs = []
    for d in _limit_schedule(f, lam):
        v = fn_eval(f, lam + d)
        if v == POS_INF:
            continue
        vs.append(v)
        if len(vs) >= 3:
            a, b, c = vs[-3], vs[-2], vs[-1]
            if abs(a - b) <= tol.value_abs * max(1.0, abs(c)) and abs(b - c) <= tol.value_abs * max(
                1.0, abs(c)
            ):
                return vs[-1]
    if vs:
        return vs[-1]
    return POS_INF


# -- affine runs and classification ------------------------------------------


def _affine_run_end_structural(f: ConvexFn, lam: float, sigma_inf: float, tol: Tolerances) -> float:
    """Exact end of the affine run right of ``lam`` on knots+rays structure."""
    kt = f.knots_t
    slopes = f.piece_slopes()
    segments = []  # (segment end, slope), ordered left to right
    if f.ray_left is not None:
        segments.append((kt[0], f.ray_left))
    for j in range(slopes.size):
        segments.append((kt[j + 1], slopes[j]))
    if f.ray_right is not None:
        segments.append((f.dom_hi, f.ray_right))
    end = lam
    for seg_end, m in segments:
        if seg_end <= lam:
            continue
        if abs(m - sigma_inf) <= tol.affine_pwl:
            end = seg_end
        else:
            break
    return end


def _affine_run_end_sampled(f: ConvexFn, lam: float, sigma_inf: float, tol: Tolerances) -> float:
    """Sampled end of the affine run: geometric probing plus bisection."""
    room = f.dom_hi - lam
    base = 1.0 if not math.isfinite(room) else room
    tol_aff = tol.affine_oracle * max(1.0, abs(sigma_inf))

    def slope_matches(d):
        s = right_deriv(f, lam + d, tol)
        return s <= sigma_inf + tol_aff

    # grow the probe (d ascending) until the slope leaves the run or the
    # domain ends
    good = None
    bad = None
    for k in range(46, -40, -1):
        d = base * 2.0 ** (-k)
        if math.isfinite(room) and d >= room:
            d = room * (1.0 - 2.0 ** -20)
            if slope_matches(d):
                return f.dom_hi
            bad = d
            break
        if slope_matches(d):
            good = d
        else:
            bad = d
            break
    if good is None or good <= base * 2.0 ** -17:
        # no run, or one below sampling resolution (tolerance-induced width)
        return lam
    if bad is None:
        # ran out of probes while still affine
        return f.dom_hi if math.isfinite(room) else POS_INF
    # bisect the boundary between good (inside run) and bad (outside)
    width_target = tol.bisect_rel * max(base, 1.0)
    lo, hi = good, bad
    while hi - lo > width_target:
        mid = 0.5 * (lo + hi)
        if slope_matches(mid):
            lo = mid
        else:
            hi = mid
    return lam + lo


def affine_run_end(f: ConvexFn, lam: float, tol: Tolerances = DEFAULT_TOL) -> float:
    """Supremum of t > lam such that f is affine on ]lam, t] (equal slopes
    within tolerance); returns ``lam`` itself when no such t exists."""
    _require_proper(f)
    lam = as_extreal(lam)
    if fn_eval(f, lam) == POS_INF or lam >= f.dom_hi:
        return lam
    sigma_inf = right_deriv_limit(f, lam, tol)
    if sigma_inf == NEG_INF or sigma_inf == POS_INF:
        return lam
    if f.is_structural():
        return _affine_run_end_structural(f, lam, sigma_inf, tol)
    return _affine_run_end_sampled(f, lam, sigma_inf, tol)


def lambda_tilde(f: ConvexFn, lam: float, tol: Tolerances = DEFAULT_TOL) -> float:
    """End point of the affine run starting at ``lam``: sup of t > lam with
    f affine on ]lam, t], snapped back to ``lam`` when the run is below the
    structural resolution.

    Defined for every proper instance (the supremum of an empty extension is
    ``lam`` itself); improper inputs are rejected.
    """
    if f.improper:
        raise ImproperInput("lambda_tilde rejects improper functions")
    end = affine_run_end(f, lam, tol)
    if end == POS_INF:
        return POS_INF
    if end - lam <= tol.tilde_snap:
        return lam
    return end


def classify_point(f: ConvexFn, lam: float, tol: Tolerances = DEFAULT_TOL) -> PointCase:
    """Structural classification of ``f`` at ``lam >= 0``; exactly one tag.

    Tolerance semantics: slope jumps below ``kink_rtol`` (relative to the
    slope scale) count as accumulation of slope values at the limit, so
    chord cascades materialized at finite depth classify like their
    infinite-depth idealization.
    """
    lam = as_extreal(lam)
    if lam < 0:
        raise PreconditionViolated("classification requires lam >= 0")
    if f.improper:
        return PointCase.IMPROPER
    if fn_eval(f, lam) == POS_INF:
        return PointCase.V_ALL_INFINITE
    if lam >= f.dom_hi:
        return PointCase.IV_FINITE_THEN_INFINITE
    sigma_inf = right_deriv_limit(f, lam, tol)
    if sigma_inf == POS_INF:
        return PointCase.IV_FINITE_THEN_INFINITE
    if sigma_inf == NEG_INF:
        # slope values accumulate at -inf
        return PointCase.I_LIMIT_POINT
    run_end = affine_run_end(f, lam, tol)
    if run_end == POS_INF:
        return PointCase.III_AFFINE_RAY
    if run_end >= f.dom_hi:
        if f.dom_hi == POS_INF:
            return PointCase.III_AFFINE_RAY
        # affine up to the domain edge, then +inf: no accumulation from above
        return PointCase.II_AFFINE_THEN_KINK
    sigma_after = right_deriv(f, run_end, tol)
    if sigma_after == POS_INF:
        return PointCase.II_AFFINE_THEN_KINK
    jump = sigma_after - sigma_inf
    if jump <= tol.kink_rtol * max(1.0, abs(sigma_inf)):
        return PointCase.I_LIMIT_POINT
    return PointCase.II_AFFINE_THEN_KINK


def zero_diagnostics(f: ConvexFn, tol: Tolerances = DEFAULT_TOL) -> dict:
    """Diagnostics of the zero point: value, right limit, one-sided
    derivative data, and the lower-semicontinuity/right-continuity flags
    they are equivalent to."""
    _require_proper(f)
    v0 = fn_eval(f, 0.0)
    v0p = right_limit_value(f, 0.0, tol)
    d0 = right_deriv(f, 0.0, tol)
    d0p = right_deriv_limit(f, 0.0, tol)
    right_cont = math.isfinite(v0p) and abs(v0p - v0) <= tol.zero_cont
    lsc = v0p >= v0 - tol.zero_cont
    return {
        "value_at_0": v0,
        "right_limit_value": v0p,
        "right_deriv_at_0": d0,
        "right_deriv_limit_at_0": d0p,
        "right_continuous_at_0": right_cont,
        "lsc_at_0": lsc,
        "deriv_map_right_discontinuous_at_0": (d0 == NEG_INF) and (d0p > NEG_INF),
    }
