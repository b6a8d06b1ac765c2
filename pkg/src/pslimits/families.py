"""Built-in parametric measure families with exact interval probabilities.

Each family is the law of the empirical mean of n i.i.d. draws, with
``c_n = 1/n``; interval masses are evaluated in closed form (no Monte
Carlo): Gaussian tails through ``log_ndtr``, Bernoulli means through exact
binomial log-sums, point masses trivially.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.special import gammaln, log_ndtr

from .convex import ConvexFn, from_oracle
from .errors import BadParams
from .extreal import NEG_INF, POS_INF
from .generator import MeasureSequence


def _logdiffexp(la: float, lb: float) -> float:
    """log(exp(la) - exp(lb)) for la >= lb."""
    if lb == NEG_INF:
        return la
    if la <= lb:
        return NEG_INF
    return la + math.log1p(-math.exp(lb - la))


def gaussian_interval_logprob(mean: float, sd: float, x: float, y: float) -> float:
    """log P(x <= N(mean, sd^2) <= y), stable in both tails."""
    if y < x:
        return NEG_INF
    a = (x - mean) / sd if x != NEG_INF else NEG_INF
    b = (y - mean) / sd if y != POS_INF else POS_INF
    if a == NEG_INF and b == POS_INF:
        return 0.0
    if a == NEG_INF:
        return float(log_ndtr(b))
    if b == POS_INF:
        return float(log_ndtr(-a))
    # work on the side where the cdf arguments are negative (well conditioned)
    if a + b >= 0.0:
        return _logdiffexp(float(log_ndtr(-a)), float(log_ndtr(-b)))
    return _logdiffexp(float(log_ndtr(b)), float(log_ndtr(a)))


def gaussian_mean(m: float = 0.0, sigma: float = 1.0) -> MeasureSequence:
    """Law of the mean of n draws from N(m, sigma^2); L(t) = m t + sigma^2 t^2 / 2."""
    if sigma <= 0:
        raise BadParams("sigma must be positive")
    L = from_oracle(
        lambda t: m * t + 0.5 * sigma**2 * t**2,
        dom=(NEG_INF, POS_INF),
        spec={"kind": "quadratic", "params": {"a": 0.5 * sigma**2, "b": m}},
    )

    def log_prob(n, x, y, closed):
        # continuous law: open and closed intervals agree
        return gaussian_interval_logprob(m, sigma / math.sqrt(n), x, y)

    return MeasureSequence(
        kind="gaussian_mean", params={"m": m, "sigma": sigma}, log_mgf_fn=L, log_prob=log_prob
    )


def bernoulli_mean(p: float) -> MeasureSequence:
    """Law of the mean of n Bernoulli(p) draws; L(t) = log(1 - p + p e^t)."""
    if not (0.0 < p < 1.0):
        raise BadParams("p must lie strictly inside (0, 1)")
    logp, logq = math.log(p), math.log1p(-p)
    L = from_oracle(
        lambda t: np.logaddexp(logq, logp + t),
        dom=(NEG_INF, POS_INF),
        spec={"kind": "bernoulli_logmgf", "params": {"p": p}},
    )

    def log_prob(n, x, y, closed):
        k = np.arange(n + 1)
        zk = k / n
        if closed:
            sel = (zk >= x) & (zk <= y)
        else:
            sel = (zk > x) & (zk < y)
        if not sel.any():
            return NEG_INF
        ks = k[sel]
        terms = (
            gammaln(n + 1.0)
            - gammaln(ks + 1.0)
            - gammaln(n - ks + 1.0)
            + ks * logp
            + (n - ks) * logq
        )
        m = float(np.max(terms))
        return m + math.log(float(np.sum(np.exp(terms - m))))

    return MeasureSequence(
        kind="bernoulli_mean", params={"p": p}, log_mgf_fn=L, log_prob=log_prob
    )


def point_mass(z: float) -> MeasureSequence:
    """Degenerate family: mu_n = delta_z for every n; L(t) = z t."""
    z = float(z)
    L = from_oracle(
        lambda t: z * t,
        dom=(NEG_INF, POS_INF),
        spec={"kind": "quadratic", "params": {"a": 0.0, "b": z}},
    )

    def log_prob(n, x, y, closed):
        inside = (x <= z <= y) if closed else (x < z < y)
        return 0.0 if inside else NEG_INF

    return MeasureSequence(kind="point_mass", params={"z": z}, log_mgf_fn=L, log_prob=log_prob)


_FAMILIES = {
    "gaussian_mean": gaussian_mean,
    "bernoulli_mean": bernoulli_mean,
    "point_mass": point_mass,
}


def builtin_families(kind: str, params: dict | None = None) -> MeasureSequence:
    """Factory over the built-in family kinds; BadParams on unknown kinds."""
    try:
        factory = _FAMILIES[kind]
    except KeyError:
        raise BadParams(f"unknown family kind {kind!r}") from None
    try:
        return factory(**(params or {}))
    except TypeError as exc:
        raise BadParams(str(exc)) from None
