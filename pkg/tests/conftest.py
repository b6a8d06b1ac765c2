import numpy as np
import pytest

from pslimits import kernels
from pslimits.convex import ConvexFn, from_oracle
from pslimits.generator import SeedSpec, appendix_sequence


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # compile/caching happens once, outside any timed section
    return kernels.warmup()


@pytest.fixture(scope="session")
def quad_seed():
    return SeedSpec(f=from_oracle(lambda t: t**2, dom=(0.0, 2.0)), lam=1.0, eps=1.0, depth=24)


@pytest.fixture(scope="session")
def quad_sequence(quad_seed):
    return appendix_sequence(quad_seed)


def dyadic_pwl_instances(count, max_knots=12, seed=20240809):
    """Randomized convex pwl instances with dyadic knots/values, so every
    float operation in conjugation is exact."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        nk = int(rng.integers(2, max_knots + 1))
        t0 = float(rng.integers(-16, 16)) / 4.0
        dts = rng.integers(1, 9, size=nk - 1) / 4.0
        kt = t0 + np.concatenate([[0.0], np.cumsum(dts)])
        s0 = float(rng.integers(-16, 16)) / 4.0
        dss = rng.integers(1, 9, size=nk - 2) / 4.0 if nk > 2 else np.array([])
        slopes = s0 + np.concatenate([[0.0], np.cumsum(dss)])
        v0 = float(rng.integers(-8, 9)) / 4.0
        kv = v0 + np.concatenate([[0.0], np.cumsum(slopes * dts)])
        out.append(ConvexFn(dom_lo=kt[0], dom_hi=kt[-1], knots_t=kt, knots_v=kv))
    return out
