"""Constructive pipeline: chord-modified seed functions, dense enumeration
of the conjugate domain, and the atomic measure sequences whose log-moment
generating functions converge to the constructed target.

Given a strictly convex continuous seed ``f`` on ``[0, lam+eps]`` with
``f(0)=0`` and a decreasing chord sequence ``lam_i -> lam``, the target
``L`` agrees with the chord through ``(0,0)`` and ``(lam, f(lam))`` on
``[0, lam]`` and with the chord of ``f`` over ``[lam_{i+1}, lam_i]`` on that
interval; it is ``+inf`` outside ``[0, lam+eps]``.  The cascade is
materialized to a finite ``depth``; the remaining gap ``[lam, lam_depth]``
is closed by one more chord of ``f``, whose deviation from ``f`` is of
order ``(eps * 2^-depth)^2`` -- below double resolution at the default
depth of 24.  The result is exactly piecewise linear, affine on ``[0, lam]``
and on every materialized chord interval, and non-differentiable at ``lam``
and at every materialized ``lam_i``.

The measure for index n places atoms on the first n terms of a fixed dyadic
enumeration of the conjugate's slope span, with log-domain weights
proportional to ``exp(-n * Lstar(z))`` and scale ``c_n = 1/n``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional

import numpy as np

from . import kernels
from .convex import ConvexFn, DEFAULT_TOL, Tolerances, eval_many, fn_eval
from .errors import (
    AllWeightsInfinite,
    BadChordSeq,
    EmptyDomain,
    NotStrictlyConvex,
)
from .extreal import NEG_INF, POS_INF, as_extreal
from .legendre import ConjugateFn, conjugate


@dataclass(frozen=True)
class SeedSpec:
    """Seed data of the chord construction.

    ``chord`` maps i >= 1 to lam_i; the default is ``lam + eps * 2**-i``.
    ``depth`` chords are materialized.
    """

    f: ConvexFn
    lam: float
    eps: float
    depth: int = 24
    chord: Optional[Callable[[int], float]] = None

    def __post_init__(self):
        if self.lam < 0:
            raise ValueError("lam must be nonnegative")
        if self.eps <= 0:
            raise ValueError("eps must be positive")
        if not (1 <= self.depth <= 40):
            raise ValueError("depth must be in [1, 40]")


def chord_points(seed: SeedSpec) -> np.ndarray:
    """Materialized chord abscissae, ascending: [lam_depth, ..., lam_1, lam_0]."""
    lam, eps = seed.lam, seed.eps
    rule = seed.chord or (lambda i: lam + eps * 2.0 ** (-i))
    pts = [rule(i) for i in range(1, seed.depth + 1)]
    lam0 = lam + eps
    for p, q in zip(pts, pts[1:]):
        if not (q < p):
            raise BadChordSeq("chord abscissae must be strictly decreasing")
    if not all(lam < p < lam0 for p in pts):
        raise BadChordSeq("chord abscissae must lie strictly inside ]lam, lam+eps[")
    return np.array(pts[::-1] + [lam0])


def _check_seed(seed: SeedSpec):
    f, lam, eps = seed.f, seed.lam, seed.eps
    hi = lam + eps
    if f.dom_lo > 0.0 or f.dom_hi < hi:
        raise NotStrictlyConvex("seed must be real-valued on [0, lam+eps]")
    if abs(fn_eval(f, 0.0)) > 1e-12:
        raise NotStrictlyConvex("seed must vanish at 0")
    ts = np.linspace(0.0, hi, 257)
    vs = eval_many(f, ts)
    if not np.all(np.isfinite(vs)):
        raise NotStrictlyConvex("seed must be real-valued on [0, lam+eps]")
    second = np.diff(vs, 2)
    if np.any(second <= 0):
        raise NotStrictlyConvex("sampled second differences must be positive")


def build_lf(seed: SeedSpec, tol: Tolerances = DEFAULT_TOL) -> ConvexFn:
    """Materialize the chord-modified target as an exact pwl instance."""
    _check_seed(seed)
    f, lam = seed.f, seed.lam
    cps = chord_points(seed)
    ts = [0.0]
    if lam > 0.0:
        ts.append(lam)
    ts.extend(cps.tolist())
    kt = np.array(ts)
    kv = eval_many(f, kt)
    kv[0] = 0.0
    return ConvexFn(dom_lo=0.0, dom_hi=float(lam + seed.eps), knots_t=kt, knots_v=kv)


# -- dense enumeration ---------------------------------------------------------


def _enum_bounded(lo: float, hi: float, n: int) -> np.ndarray:
    out = [lo, hi]
    m = 1
    while len(out) < n:
        step = (hi - lo) / 2.0**m
        out.extend(lo + j * step for j in range(1, 2**m, 2))
        m += 1
    return np.array(out[:n])


def _enum_half(lo: float, n: int, up: bool) -> np.ndarray:
    """Windowed dyadic rule for [lo, +inf) (up) or (-inf, lo] (mirrored):
    level 0 covers a unit window from the finite end, level m >= 1 emits the
    odd multiples of 2^-m inside a window of width 2^m."""
    sgn = 1.0 if up else -1.0
    out = [lo, lo + sgn * 1.0]
    m = 1
    while len(out) < n:
        width = 2.0**m
        step = 2.0**-m
        j = 1
        while j * step < width and len(out) < n + 2**m:
            out.append(lo + sgn * j * step)
            j += 2
        m += 1
    return np.array(out[:n])


def _enum_real(n: int) -> np.ndarray:
    out = [0.0, 1.0, -1.0]
    m = 1
    while len(out) < n:
        width = 2.0**m
        step = 2.0**-m
        j = 1
        while j * step < width and len(out) < n + 2 ** (m + 1):
            out.append(j * step)
            out.append(-j * step)
            j += 2
        m += 1
    return np.array(out[:n])


def enumerate_dense(conj: ConjugateFn, n: int) -> np.ndarray:
    """First n terms of the fixed dyadic enumeration of the conjugate's
    enumeration domain (dense in it as n grows)."""
    if n < 1:
        raise ValueError("n must be positive")
    lo, hi = conj.enum_lo, conj.enum_hi
    if math.isnan(lo) or math.isnan(hi) or not (lo < hi):
        raise EmptyDomain(f"degenerate enumeration domain [{lo}, {hi}]")
    if math.isfinite(lo) and math.isfinite(hi):
        return _enum_bounded(lo, hi, n)
    if math.isfinite(lo):
        return _enum_half(lo, n, up=True)
    if math.isfinite(hi):
        return _enum_half(hi, n, up=False)
    return _enum_real(n)


# -- atomic measures -----------------------------------------------------------


@dataclass(frozen=True)
class AtomicMeasure:
    """Finite atomic probability measure in log-domain weights.

    Atoms are strictly increasing; log-weights normalize to 0 via logsumexp.
    ``scale`` is the c_n attached to the measure.
    """

    z: np.ndarray
    log_w: np.ndarray
    scale: float

    def __post_init__(self):
        z = np.ascontiguousarray(self.z, dtype=np.float64)
        lw = np.ascontiguousarray(self.log_w, dtype=np.float64)
        if z.shape != lw.shape or z.ndim != 1 or z.size == 0:
            raise ValueError("atoms and weights must be matching 1-d arrays")
        if np.any(np.diff(z) <= 0):
            raise ValueError("atoms must be strictly increasing")
        if self.scale <= 0:
            raise ValueError("scale must be positive")
        z.setflags(write=False)
        lw.setflags(write=False)
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "log_w", lw)

    @property
    def n_atoms(self) -> int:
        return int(self.z.size)


def build_measure(conj: ConjugateFn, n: int) -> AtomicMeasure:
    """Measure with atoms at the first n enumerated points and log weights
    ``-n*Lstar(z_k) - logsumexp_j(-n*Lstar(z_j))``; scale 1/n.

    All arithmetic stays in the log domain; atoms with infinite rate keep
    weight -inf (zero mass).
    """
    zs = enumerate_dense(conj, n)
    lstar = eval_many(conj.inner, zs)
    if np.all(np.isinf(lstar)):
        raise AllWeightsInfinite("every enumerated atom has infinite rate")
    order = np.argsort(zs)
    zs = zs[order]
    scaled = -float(n) * lstar[order]
    lw = kernels.normalized_log_weights(scaled)
    return AtomicMeasure(z=zs, log_w=lw, scale=1.0 / float(n))


def log_mgf(mu: AtomicMeasure, t: float) -> float:
    """scale * log integral of exp(t z / scale) d(mu)."""
    return kernels.log_mgf_atoms(mu.z, mu.log_w, mu.scale, float(t))


def interval_log_prob(mu: AtomicMeasure, x: float, y: float, closed: bool = True) -> float:
    """scale * log mu([x,y]) (closed) or of the open interval; -inf when no
    atom qualifies.  Infinite endpoints admit every atom on that side."""
    x = as_extreal(x)
    y = as_extreal(y)
    if y < x:
        raise ValueError("interval endpoints out of order")
    raw = kernels.interval_logsumexp(mu.z, mu.log_w, x, y, bool(closed))
    return mu.scale * raw if raw != NEG_INF else NEG_INF


# -- measure sequences ---------------------------------------------------------


@dataclass(frozen=True)
class MeasureSequence:
    """Indexed family n -> (mu_n, c_n) with c_n decreasing to 0.

    Exactly one of ``measure`` (atomic generator) or ``log_prob``
    (closed-form evaluator ``(n, x, y, closed) -> log mu_n`` of the interval)
    is set.  ``log_mgf_fn`` is the family's log-moment generating function.
    """

    kind: str
    params: dict
    log_mgf_fn: ConvexFn
    scale_rule: Callable[[int], float] = field(default=lambda n: 1.0 / n)
    measure: Optional[Callable[[int], AtomicMeasure]] = None
    log_prob: Optional[Callable[[int, float, float, bool], float]] = None

    def __post_init__(self):
        if (self.measure is None) == (self.log_prob is None):
            raise ValueError("exactly one of measure/log_prob must be set")

    def scale(self, n: int) -> float:
        c = float(self.scale_rule(n))
        if c <= 0:
            raise ValueError("scales must be positive")
        return c

    def empirical(self, n: int, x: float, y: float, closed: bool) -> float:
        """c_n * log mu_n of the interval."""
        if self.measure is not None:
            return interval_log_prob(self.measure(n), x, y, closed)
        raw = self.log_prob(n, x, y, closed)
        return self.scale(n) * raw if raw != NEG_INF else NEG_INF


def appendix_sequence(seed: SeedSpec, tol: Tolerances = DEFAULT_TOL) -> MeasureSequence:
    """Atomic sequence realizing the chord-modified target of ``seed``."""
    lf = build_lf(seed, tol)
    conj = conjugate(lf, tol=tol)
    gen = lru_cache(maxsize=16)(lambda n: build_measure(conj, n))
    return MeasureSequence(
        kind="appendix",
        params={"lam": seed.lam, "eps": seed.eps, "depth": seed.depth},
        log_mgf_fn=lf,
        measure=gen,
    )


def conjugate_atoms_sequence(
    f: ConvexFn,
    slope_grid=None,
    n_slopes: int = 256,
    tol: Tolerances = DEFAULT_TOL,
) -> MeasureSequence:
    """Custom atomic sequence realizing an arbitrary proper lsc convex
    ``f`` with ``f(0)=0`` through the same weight mechanism, with the
    conjugate sampled when ``f`` is oracle-backed."""
    conj = conjugate(f, slope_grid=slope_grid, n_slopes=n_slopes, tol=tol)
    gen = lru_cache(maxsize=16)(lambda n: build_measure(conj, n))
    return MeasureSequence(
        kind="custom",
        params={"source": conj.source_hash},
        log_mgf_fn=f,
        measure=gen,
    )
