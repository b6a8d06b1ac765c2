import math

import numpy as np
import pytest

from pslimits.convex import ConvexFn, eval_many, from_oracle, improper_shape, pwl, right_deriv
from pslimits.errors import ExtensionUnavailable, ImproperInput
from pslimits.legendre import (
    biconjugate_check,
    conjugate,
    conjugate_at,
    conjugate_at_many,
)

from conftest import dyadic_pwl_instances

F123 = pwl([(0, 0), (1, 1), (2, 3)])


def grid_sup(f, x, lo, hi, step=1e-4):
    """Independent brute-force oracle: sup of x*t - f(t) on a fine grid."""
    ts = np.arange(lo, hi + step / 2, step)
    return float(np.max(x * ts - eval_many(f, ts)))


class TestConjugateAt:
    @pytest.mark.parametrize("x,expected", [(0.5, 0.0), (1.5, 0.5)])
    def test_pwl_against_grid_oracle(self, x, expected):
        got = conjugate_at(F123, x)
        assert got == expected
        assert abs(got - grid_sup(F123, x, 0.0, 2.0)) <= 1e-4

    def test_quadratic(self):
        f = from_oracle(lambda t: t**2 / 2, dom=(-math.inf, math.inf))
        got = conjugate_at(f, 1.0)
        assert abs(got - 0.5) <= 1e-6
        assert abs(got - grid_sup(f, 1.0, -4.0, 4.0)) <= 1e-6

    def test_point_function(self):
        pt = pwl([(0, 0)])
        assert conjugate_at(pt, 5.0) == 0.0
        assert conjugate_at(pt, -7.0) == 0.0

    def test_improper_rejected(self):
        with pytest.raises(ImproperInput):
            conjugate_at(improper_shape(1.0), 0.5)

    def test_outside_left_of_domain_is_infinite(self):
        # linear left tail: the conjugate blows up left of the tail slope
        f = ConvexFn(
            dom_lo=-math.inf,
            dom_hi=math.inf,
            knots_t=np.array([0.0, 1.0]),
            knots_v=np.array([0.0, 1.0]),
            ray_left=0.0,
            ray_right=2.0,
        )
        assert conjugate_at(f, -0.5) == math.inf
        assert conjugate_at(f, 2.5) == math.inf
        assert conjugate_at(f, 0.5) >= 0.0


class TestMinusInfExtension:
    def setup_method(self):
        self.f = from_oracle(
            lambda t: -np.sqrt(np.maximum(t, 0.0)) + np.asarray(t, float) ** 2, dom=(0, 1)
        )

    def test_extension_value(self):
        # right continuous at 0 with value 0, so the extension is -f(0+) = 0
        assert abs(conjugate_at(self.f, -math.inf)) <= 1e-6

    def test_extension_unavailable_for_finite_slope(self):
        q = from_oracle(lambda t: t**2 / 2, dom=(0, 2))
        with pytest.raises(ExtensionUnavailable):
            conjugate_at(q, -math.inf)

    def test_convergence_along_derivative_values(self):
        # conjugate values at the slopes L'_r(t_i), t_i = 2^-i, approach the
        # extension value (here 0) from above
        vals = []
        for i in range(4, 21, 4):
            t = 2.0**-i
            vals.append(conjugate_at(self.f, right_deriv(self.f, t)))
        assert all(v >= -1e-9 for v in vals)
        assert vals[-1] <= 5e-3
        assert all(a >= b - 1e-12 for a, b in zip(vals, vals[1:]))

    def test_second_identity_when_limit_slope_finite(self):
        # finite case: the conjugate at the limit slope equals the sup over t>0
        q = from_oracle(lambda t: t**2 / 2, dom=(0, math.inf))
        got = conjugate_at(q, 0.0)
        ts = np.linspace(1e-6, 4.0, 40001)
        assert abs(got - float(np.max(0.0 * ts - ts**2 / 2))) <= 1e-6


class TestConjugateWhole:
    def test_pwl_exact_shape(self):
        c = conjugate(F123)
        xs = np.array([0.0, 1.0, 1.5, 2.0, 3.0])
        want = np.array([0.0, 0.0, 0.5, 1.0, 3.0])
        assert np.array_equal(eval_many(c.inner, xs), want)
        # pointwise agreement with conjugate_at
        assert np.allclose(eval_many(c.inner, xs), conjugate_at_many(F123, xs))

    def test_point_function_conjugate_is_zero(self):
        pt = pwl([(0, 0)])
        c = conjugate(pt)
        xs = np.array([-5.0, 0.0, 7.0])
        assert np.allclose(eval_many(c.inner, xs), 0.0)

    def test_slope_knot_duality_counts(self):
        for f in dyadic_pwl_instances(10, seed=3):
            c = conjugate(f)
            n_pieces = f.knots_t.size - 1
            assert c.inner.knots_t.size == n_pieces
            # and the conjugate's pieces correspond to the source's knots
            cc = conjugate(c.inner)
            assert cc.inner.knots_t.size == f.knots_t.size

    def test_sampled_quadratic_chord_error_bound(self):
        f = from_oracle(lambda t: t**2 / 2, dom=(-math.inf, math.inf))
        c = conjugate(f, slope_grid=np.arange(-2.0, 2.0001, 0.25))
        xs = np.linspace(-2.0, 2.0, 401)
        err = np.max(np.abs(eval_many(c.inner, xs) - xs**2 / 2))
        assert err <= 0.25**2 / 8 + 1e-12

    def test_minus_inf_value_attached(self):
        f = from_oracle(
            lambda t: -np.sqrt(np.maximum(t, 0.0)) + np.asarray(t, float) ** 2, dom=(0, 1)
        )
        c = conjugate(f)
        assert c.minus_inf_value is not None
        assert abs(c.minus_inf_value) <= 1e-6
        assert c.enum_lo == -math.inf and abs(c.enum_hi - 1.5) <= 1e-5

    def test_improper_rejected(self):
        with pytest.raises(ImproperInput):
            conjugate(improper_shape(1.0))


class TestBiconjugate:
    def test_pwl_exact(self):
        res = biconjugate_check(F123, [0.0, 1.0, 2.0])
        assert res["max_deviation"] == 0.0

    def test_flat_function(self):
        flat = pwl([(0, 0), (3, 0)])
        assert biconjugate_check(flat, [0.0, 1.5, 3.0])["max_deviation"] == 0.0

    def test_quadratic_with_sampled_conjugate(self):
        f = from_oracle(lambda t: t**2 / 2, dom=(-math.inf, math.inf))
        res = biconjugate_check(f, [-1.0, 0.0, 1.0], slope_grid=np.arange(-2, 2.0001, 0.05))
        assert res["max_deviation"] <= 1e-3

    def test_dyadic_instances_bitwise(self):
        for f in dyadic_pwl_instances(20):
            assert biconjugate_check(f, f.knots_t)["max_deviation"] == 0.0


class TestProperties:
    def test_nonnegative_when_vanishing_at_zero(self):
        f = pwl([(0, 0), (1, 1), (2, 3)])
        xs = np.linspace(-3, 4, 29)
        assert np.all(conjugate_at_many(f, xs) >= 0.0)

    def test_young_fenchel_exact_on_pwl(self):
        for f in dyadic_pwl_instances(10, seed=17):
            xs = np.arange(-4.0, 4.01, 0.5)
            cv = conjugate_at_many(f, xs)
            for t, v in zip(f.knots_t, f.knots_v):
                assert np.all(t * xs <= v + cv)  # exact: cv >= t*x - v by construction
