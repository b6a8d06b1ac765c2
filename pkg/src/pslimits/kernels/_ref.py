"""Pure-numpy reference implementations of the hot kernels."""

import numpy as np
from scipy.special import logsumexp as _scipy_lse


def logsumexp(a):
    a = np.asarray(a, dtype=np.float64)
    if a.size == 0:
        return float("-inf")
    m = np.max(a)
    if not np.isfinite(m):
        # all -inf -> -inf; any +inf -> +inf
        return float(m)
    return float(_scipy_lse(a))


def normalized_log_weights(a):
    """a - logsumexp(a), tolerating -inf entries."""
    a = np.asarray(a, dtype=np.float64)
    return a - logsumexp(a)


def log_mgf_atoms(z, lw, scale, t):
    """scale * logsumexp(t*z/scale + lw)."""
    z = np.asarray(z, dtype=np.float64)
    lw = np.asarray(lw, dtype=np.float64)
    return scale * logsumexp((t / scale) * z + lw)


def interval_logsumexp(z_sorted, lw, lo, hi, closed):
    """logsumexp of lw over atoms with z in [lo,hi] (closed) or ]lo,hi[."""
    z_sorted = np.asarray(z_sorted, dtype=np.float64)
    lw = np.asarray(lw, dtype=np.float64)
    if closed:
        i0 = np.searchsorted(z_sorted, lo, side="left")
        i1 = np.searchsorted(z_sorted, hi, side="right")
    else:
        i0 = np.searchsorted(z_sorted, lo, side="right")
        i1 = np.searchsorted(z_sorted, hi, side="left")
    if i1 <= i0:
        return float("-inf")
    return logsumexp(lw[i0:i1])


def pwl_eval(kt, kv, x):
    """Piecewise-linear interpolation on the knot span (exact at knots).

    Caller guarantees kt[0] <= x <= kt[-1] elementwise.
    """
    kt = np.asarray(kt, dtype=np.float64)
    kv = np.asarray(kv, dtype=np.float64)
    x = np.asarray(x, dtype=np.float64)
    idx = np.searchsorted(kt, x, side="right") - 1
    idx = np.clip(idx, 0, len(kt) - 2)
    t0 = kt[idx]
    out = kv[idx] + (kv[idx + 1] - kv[idx]) / (kt[idx + 1] - t0) * (x - t0)
    # exact knot hits bypass the arithmetic
    at_knot = x == t0
    out = np.where(at_knot, kv[idx], out)
    return out


def pwl_conj_sup(kt, kv, xs):
    """max_j (x * kt[j] - kv[j]) for each x: the conjugate of a pwl function
    whose domain equals its knot span."""
    kt = np.asarray(kt, dtype=np.float64)
    kv = np.asarray(kv, dtype=np.float64)
    xs = np.asarray(xs, dtype=np.float64)
    # modest knot counts: broadcasting is fine at desk scale
    return np.max(np.outer(xs, kt) - kv[None, :], axis=1)
