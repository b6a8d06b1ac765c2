"""Hot numeric kernels with a numba fast path and a pure-numpy fallback.

The backend is chosen once at import time: numba when it is importable and
the environment variable ``PSLIMITS_NO_NUMBA`` is unset/empty, pure numpy
otherwise.  Both implementations are kept in lockstep by ``tests/test_kernels``
and compared by ``benchmarks/bench_kernels.py``.
"""

import os

import numpy as np

from . import _ref

if os.environ.get("PSLIMITS_NO_NUMBA", ""):
    _impl = _ref
    BACKEND = "numpy"
else:
    try:
        from . import _jit as _impl

        BACKEND = "numba"
    except ImportError:  # pragma: no cover - exercised only without numba
        _impl = _ref
        BACKEND = "numpy"


def _f64(a):
    return np.ascontiguousarray(a, dtype=np.float64)


def logsumexp(a) -> float:
    return float(_impl.logsumexp(_f64(a)))


def normalized_log_weights(a) -> np.ndarray:
    return np.asarray(_impl.normalized_log_weights(_f64(a)))


def log_mgf_atoms(z, lw, scale, t) -> float:
    return float(_impl.log_mgf_atoms(_f64(z), _f64(lw), float(scale), float(t)))


def interval_logsumexp(z_sorted, lw, lo, hi, closed) -> float:
    return float(
        _impl.interval_logsumexp(_f64(z_sorted), _f64(lw), float(lo), float(hi), bool(closed))
    )


def pwl_eval(kt, kv, x) -> np.ndarray:
    return np.asarray(_impl.pwl_eval(_f64(kt), _f64(kv), _f64(x)))


def pwl_conj_sup(kt, kv, xs) -> np.ndarray:
    return np.asarray(_impl.pwl_conj_sup(_f64(kt), _f64(kv), _f64(xs)))


def warmup() -> str:
    """Trigger compilation of every kernel; returns the active backend name."""
    z = np.array([0.0, 1.0])
    w = np.array([-0.7, -0.7])
    logsumexp(w)
    normalized_log_weights(w)
    log_mgf_atoms(z, w, 0.5, 1.0)
    interval_logsumexp(z, w, 0.0, 1.0, True)
    pwl_eval(z, w, np.array([0.5]))
    pwl_conj_sup(z, w, np.array([0.5]))
    return BACKEND
