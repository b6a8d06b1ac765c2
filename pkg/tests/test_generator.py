import math

import numpy as np
import pytest

from pslimits.convex import fn_eval, from_oracle, left_deriv, pwl, right_deriv, right_deriv_limit
from pslimits.errors import AllWeightsInfinite, BadChordSeq, EmptyDomain, NotStrictlyConvex
from pslimits.generator import (
    AtomicMeasure,
    SeedSpec,
    build_lf,
    build_measure,
    chord_points,
    enumerate_dense,
    interval_log_prob,
    log_mgf,
)
from pslimits.legendre import ConjugateFn, conjugate

QUAD = from_oracle(lambda t: np.asarray(t, float) ** 2, dom=(0.0, 2.0))


def conj_with_span(lo, hi):
    """Minimal conjugate wrapper carrying an enumeration span (inner values
    irrelevant for enumeration tests)."""
    return ConjugateFn(
        inner=pwl([(lo if math.isfinite(lo) else 0.0, 0.0)]),
        source_hash="t",
        enum_lo=lo,
        enum_hi=hi,
    )


class TestBuildLf:
    def test_values_on_and_between_chords(self):
        seed = SeedSpec(f=QUAD, lam=1.0, eps=1.0, depth=8)
        lf = build_lf(seed)
        assert fn_eval(lf, 0.5) == 0.5  # chord through (0,0) and (1,1)
        assert fn_eval(lf, 1.25) == 1.5625  # 1.25 is a chord endpoint: f(1.25)
        assert fn_eval(lf, 1.75) == 3.125  # chord of f over [1.5, 2]

    def test_one_sided_derivatives_at_the_kink(self):
        seed = SeedSpec(f=QUAD, lam=1.0, eps=1.0, depth=8)
        lf = build_lf(seed)
        assert left_deriv(lf, 1.0) == 1.0
        rd = right_deriv(lf, 1.0)
        assert rd == (fn_eval(QUAD, 1 + 2.0**-8) - 1.0) / 2.0**-8
        assert abs(rd - 2.0) <= 2.0**-7

    def test_non_differentiable_at_every_materialized_chord_point(self, quad_seed):
        lf = build_lf(quad_seed)
        for lam_i in chord_points(quad_seed)[:-1]:
            assert right_deriv(lf, float(lam_i)) - left_deriv(lf, float(lam_i)) > 0.0

    def test_chord_slopes_converge_to_the_seed_slope(self, quad_seed):
        lf = build_lf(quad_seed)
        target = right_deriv_limit(lf, 1.0)
        gaps = [right_deriv(lf, float(l)) - target for l in chord_points(quad_seed)[:-1]]
        assert all(g > 0 for g in gaps)
        assert all(a >= b - 1e-12 for a, b in zip(gaps[::-1], gaps[::-1][1:]))
        assert gaps[0] <= 2.0**-20  # innermost materialized chord

    def test_convexity_exact_on_chord_regions(self, quad_seed):
        lf = build_lf(quad_seed)
        rng = np.random.default_rng(12)
        ts = np.sort(rng.uniform(0.0, 2.0, size=3000))
        vals = np.interp(ts, lf.knots_t, lf.knots_v)
        t1, t2, t3 = ts[:-2], ts[1:-1], ts[2:]
        v1, v2, v3 = vals[:-2], vals[1:-1], vals[2:]
        chord = v1 + (t2 - t1) / (t3 - t1) * (v3 - v1)
        assert np.max(v2 - chord) <= 1e-12

    def test_rejects_nonconvex_seed(self):
        bad = from_oracle(lambda t: np.sqrt(np.maximum(t, 0.0)), dom=(0, 2))
        with pytest.raises(NotStrictlyConvex):
            build_lf(SeedSpec(f=bad, lam=1.0, eps=1.0))

    def test_rejects_bad_chord_sequence(self):
        seed = SeedSpec(f=QUAD, lam=1.0, eps=1.0, depth=4, chord=lambda i: 1.0 + 0.1 * i)
        with pytest.raises(BadChordSeq):
            build_lf(seed)


class TestEnumeration:
    def test_bounded_levels(self):
        c = conj_with_span(0.0, 1.0)
        assert enumerate_dense(c, 3).tolist() == [0.0, 1.0, 0.5]
        assert enumerate_dense(c, 5).tolist() == [0.0, 1.0, 0.5, 0.25, 0.75]

    def test_right_unbounded_window(self):
        c = conj_with_span(1.0, math.inf)
        assert enumerate_dense(c, 3).tolist() == [1.0, 2.0, 1.5]

    def test_left_unbounded_window(self):
        c = conj_with_span(-math.inf, 1.0)
        got = enumerate_dense(c, 3).tolist()
        assert got == [1.0, 0.0, 0.5]

    def test_real_line(self):
        c = conj_with_span(-math.inf, math.inf)
        got = enumerate_dense(c, 5).tolist()
        assert got == [0.0, 1.0, -1.0, 0.5, -0.5]

    def test_no_duplicates_and_dense_prefix(self):
        c = conj_with_span(0.0, 1.0)
        zs = enumerate_dense(c, 4097)
        assert np.unique(zs).size == zs.size
        # after 2^k+1 points the resolution is 2^-k
        assert np.max(np.diff(np.sort(zs))) <= 2.0**-12 + 1e-15

    def test_empty_domain(self):
        with pytest.raises(EmptyDomain):
            enumerate_dense(conj_with_span(1.0, 1.0), 2)


class TestBuildMeasure:
    def test_single_atom_normalizes(self):
        conj = ConjugateFn(inner=pwl([(0, 0.7), (1, 0.7)]), source_hash="t", enum_lo=0.0, enum_hi=1.0)
        mu = build_measure(conj, 1)
        assert mu.log_w.tolist() == [0.0]
        assert mu.scale == 1.0

    def test_two_atom_weights(self):
        # rate values 0 and 0.5 at the two atoms, n = 2
        conj = ConjugateFn(inner=pwl([(0, 0.0), (1, 0.5)]), source_hash="t", enum_lo=0.0, enum_hi=1.0)
        mu = build_measure(conj, 2)
        expected = [-math.log1p(math.exp(-1.0)), -1.0 - math.log1p(math.exp(-1.0))]
        assert np.allclose(mu.log_w, expected, rtol=0, atol=1e-15)

    def test_laplace_concentration(self, quad_sequence):
        mu = quad_sequence.measure(10**4)
        # mass concentrates where the rate vanishes (z = 1, the flat-spot edge)
        inside = interval_log_prob(mu, 0.9, 1.1, closed=True)
        assert math.exp(inside / mu.scale) > 0.99

    def test_normalization_across_n(self, quad_sequence):
        from scipy.special import logsumexp

        for n in (10, 1000, 100000):
            mu = quad_sequence.measure(n)
            assert abs(logsumexp(mu.log_w)) <= 1e-12

    def test_all_weights_infinite(self):
        inner = pwl([(5.0, 0.0), (6.0, 1.0)])  # +inf outside [5, 6]
        conj = ConjugateFn(inner=inner, source_hash="t", enum_lo=0.0, enum_hi=1.0)
        with pytest.raises(AllWeightsInfinite):
            build_measure(conj, 4)


class TestLogMgf:
    def test_point_mass(self):
        mu = AtomicMeasure(z=np.array([2.0]), log_w=np.array([0.0]), scale=0.5)
        assert log_mgf(mu, 1.0) == 2.0

    def test_normalization_at_zero(self):
        mu = AtomicMeasure(z=np.array([0.0, 1.0]), log_w=np.array([-math.log(2)] * 2), scale=1.0)
        assert abs(log_mgf(mu, 0.0)) <= 1e-15

    def test_appendix_envelope_at_n_1000(self, quad_sequence):
        mu = quad_sequence.measure(1000)
        lf = quad_sequence.log_mgf_fn
        assert abs(log_mgf(mu, 0.5) - fn_eval(lf, 0.5)) <= 0.02

    def test_convergence_envelope_over_n(self, quad_sequence):
        lf = quad_sequence.log_mgf_fn
        for t in (0.25, 0.5, 1.25, 1.75):
            errs = []
            for n in (100, 1000, 10000):
                err = abs(log_mgf(quad_sequence.measure(n), t) - fn_eval(lf, t))
                assert err <= math.log(n) / n + 1e-3
                errs.append(err)
            assert all(b <= 2 * a + 1e-12 for a, b in zip(errs, errs[1:]))


class TestIntervalLogProb:
    def test_full_mass(self):
        mu = AtomicMeasure(z=np.array([0.0, 1.0]), log_w=np.array([-math.log(2)] * 2), scale=1.0)
        assert interval_log_prob(mu, -math.inf, math.inf, closed=True) == 0.0

    def test_empty_open_interval(self):
        mu = AtomicMeasure(z=np.array([0.0, 1.0]), log_w=np.array([-math.log(2)] * 2), scale=1.0)
        assert interval_log_prob(mu, 0.0, 1.0, closed=False) == -math.inf

    def test_weighted_closed_interval(self):
        mu = AtomicMeasure(
            z=np.array([0.0, 1.0]),
            log_w=np.array([math.log(0.75), math.log(0.25)]),
            scale=0.5,
        )
        got = interval_log_prob(mu, 1.0, 2.0, closed=True)
        assert abs(got - 0.5 * math.log(0.25)) <= 1e-15

    def test_endpoint_order_checked(self):
        mu = AtomicMeasure(z=np.array([0.0]), log_w=np.array([0.0]), scale=1.0)
        with pytest.raises(ValueError):
            interval_log_prob(mu, 2.0, 1.0, closed=True)


def test_atoms_sorted_required():
    with pytest.raises(ValueError):
        AtomicMeasure(z=np.array([1.0, 0.0]), log_w=np.array([0.0, 0.0]), scale=1.0)
