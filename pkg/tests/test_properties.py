"""Structural invariants under randomized inputs (dyadic grids keep the
piecewise-linear arithmetic exact, so most assertions are equality-tight)."""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pslimits.convex import ConvexFn, eval_many, left_deriv, right_deriv, right_deriv_limit
from pslimits.errors import ExtRealError
from pslimits.extreal import NEG_INF, POS_INF, ext_add, lambda_slope_product
from pslimits.legendre import biconjugate_check, conjugate_at_many


@st.composite
def dyadic_pwl(draw):
    nk = draw(st.integers(min_value=2, max_value=9))
    t0 = draw(st.integers(min_value=-32, max_value=32))
    dts = draw(st.lists(st.integers(1, 8), min_size=nk - 1, max_size=nk - 1))
    kt = (t0 + np.concatenate([[0], np.cumsum(dts)])) / 4.0
    s0 = draw(st.integers(min_value=-32, max_value=32))
    dss = draw(st.lists(st.integers(0, 8), min_size=nk - 2, max_size=nk - 2))
    slopes = (s0 + np.concatenate([[0], np.cumsum(dss)])) / 4.0
    v0 = draw(st.integers(min_value=-16, max_value=16)) / 4.0
    kv = v0 + np.concatenate([[0.0], np.cumsum(slopes * np.diff(kt))])
    return ConvexFn(dom_lo=kt[0], dom_hi=kt[-1], knots_t=kt, knots_v=kv)


@settings(max_examples=60, deadline=None)
@given(dyadic_pwl())
def test_biconjugate_identity_exact_at_knots(f):
    assert biconjugate_check(f, f.knots_t)["max_deviation"] == 0.0


@settings(max_examples=60, deadline=None)
@given(dyadic_pwl(), st.integers(-64, 64))
def test_young_fenchel_inequality(f, xi):
    x = xi / 8.0
    cv = float(conjugate_at_many(f, np.array([x]))[0])
    vals = eval_many(f, f.knots_t)
    assert np.all(f.knots_t * x <= vals + cv)


@settings(max_examples=40, deadline=None)
@given(dyadic_pwl())
def test_right_derivative_monotone_and_right_continuous(f):
    ts = np.linspace(f.dom_lo, f.dom_hi, 17)[:-1]
    ds = [right_deriv(f, float(t)) for t in ts]
    assert all(a <= b for a, b in zip(ds, ds[1:]))
    for t, d in zip(ts, ds):
        assert right_deriv_limit(f, float(t)) == d


@settings(max_examples=40, deadline=None)
@given(dyadic_pwl())
def test_one_sided_order(f):
    for t in np.linspace(f.dom_lo, f.dom_hi, 9)[1:-1]:
        assert left_deriv(f, float(t)) <= right_deriv(f, float(t))


@settings(max_examples=40, deadline=None)
@given(dyadic_pwl())
def test_chord_inequality(f):
    ts = np.linspace(f.dom_lo, f.dom_hi, 33)
    vs = eval_many(f, ts)
    t1, t2, t3 = ts[:-2], ts[1:-1], ts[2:]
    v1, v2, v3 = vs[:-2], vs[1:-1], vs[2:]
    chord = v1 + (t2 - t1) / (t3 - t1) * (v3 - v1)
    assert np.all(v2 <= chord + 1e-12)


@settings(max_examples=100, deadline=None)
@given(
    st.floats(allow_nan=False, allow_infinity=True),
    st.floats(allow_nan=False, allow_infinity=True),
)
def test_ext_add_total_except_opposite_infinities(a, b):
    opposite = (a == POS_INF and b == NEG_INF) or (a == NEG_INF and b == POS_INF)
    if opposite:
        with pytest.raises(ExtRealError):
            ext_add(a, b)
    else:
        got = ext_add(a, b)
        assert not math.isnan(got)


@settings(max_examples=50, deadline=None)
@given(st.floats(min_value=0.0, max_value=10.0, allow_nan=False))
def test_lambda_slope_product_zero_convention(lam):
    if lam == 0.0:
        assert lambda_slope_product(lam, NEG_INF) == 0.0
    else:
        assert lambda_slope_product(lam, NEG_INF) == NEG_INF
