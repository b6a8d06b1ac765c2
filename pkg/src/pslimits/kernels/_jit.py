"""Numba implementations of the hot kernels (compiled lazily, disk-cached)."""

import numpy as np
from numba import njit


@njit(cache=True)
def logsumexp(a):
    n = a.shape[0]
    if n == 0:
        return -np.inf
    m = -np.inf
    for i in range(n):
        if a[i] > m:
            m = a[i]
    if m == -np.inf or m == np.inf:
        return m
    s = 0.0
    for i in range(n):
        s += np.exp(a[i] - m)
    return m + np.log(s)


@njit(cache=True)
def normalized_log_weights(a):
    lse = logsumexp(a)
    out = np.empty_like(a)
    for i in range(a.shape[0]):
        out[i] = a[i] - lse
    return out


@njit(cache=True)
def log_mgf_atoms(z, lw, scale, t):
    n = z.shape[0]
    buf = np.empty(n)
    r = t / scale
    for i in range(n):
        buf[i] = r * z[i] + lw[i]
    return scale * logsumexp(buf)


@njit(cache=True)
def interval_logsumexp(z_sorted, lw, lo, hi, closed):
    n = z_sorted.shape[0]
    if closed:
        i0 = np.searchsorted(z_sorted, lo, side="left")
        i1 = np.searchsorted(z_sorted, hi, side="right")
    else:
        i0 = np.searchsorted(z_sorted, lo, side="right")
        i1 = np.searchsorted(z_sorted, hi, side="left")
    if i1 <= i0:
        return -np.inf
    m = -np.inf
    for i in range(i0, i1):
        if lw[i] > m:
            m = lw[i]
    if m == -np.inf or m == np.inf:
        return m
    s = 0.0
    for i in range(i0, i1):
        s += np.exp(lw[i] - m)
    return m + np.log(s)


@njit(cache=True)
def pwl_eval(kt, kv, x):
    nk = kt.shape[0]
    out = np.empty(x.shape[0])
    for i in range(x.shape[0]):
        j = np.searchsorted(kt, x[i], side="right") - 1
        if j < 0:
            j = 0
        if j > nk - 2:
            j = nk - 2
        if x[i] == kt[j]:
            out[i] = kv[j]
        else:
            m = (kv[j + 1] - kv[j]) / (kt[j + 1] - kt[j])
            out[i] = kv[j] + m * (x[i] - kt[j])
    return out


@njit(cache=True)
def pwl_conj_sup(kt, kv, xs):
    nk = kt.shape[0]
    out = np.empty(xs.shape[0])
    for i in range(xs.shape[0]):
        best = -np.inf
        for j in range(nk):
            v = xs[i] * kt[j] - kv[j]
            if v > best:
                best = v
        out[i] = best
    return out
