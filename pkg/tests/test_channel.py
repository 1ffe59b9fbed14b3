import math

import numpy as np
import pytest
from scipy import integrate

from vlcsec import (
    DeploymentGeometry,
    LambertianParams,
    ParameterError,
    apply_csi_uncertainty,
    cdf_gain_bob,
    cdf_gain_eve,
    channel_gain,
    compute_bounds,
    gain_prefactor,
    max_incidence_angle,
    pdf_gain_bob,
    pdf_gain_eve,
    sample_radius_bob,
    sample_radius_eve,
)

PARAMS = LambertianParams(order=6, area=1e-4, filter_gain=1.0, concentrator_gain=3.0)
GEOM = DeploymentGeometry(radius=8.0, protected_radius=4.0, height=4.0)
BOUNDS = compute_bounds(PARAMS, GEOM)

# regression anchors, frozen from direct evaluation of the gain formula
PREFACTOR = 5.475948633996987
GAIN_MIN = 1.4947013411760717e-08
GAIN_EVE_MAX = 9.231759101220325e-07
GAIN_MAX = 2.088908628081126e-05


class TestParams:
    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(order=0.5, area=1e-4, filter_gain=1.0, concentrator_gain=1.0),
            dict(order=1.0, area=0.0, filter_gain=1.0, concentrator_gain=1.0),
            dict(order=1.0, area=1e-4, filter_gain=-1.0, concentrator_gain=1.0),
            dict(order=1.0, area=1e-4, filter_gain=1.0, concentrator_gain=0.0),
            dict(order=1.0, area=1e-4, filter_gain=1.0, concentrator_gain=1.0, fov_semiangle=0.0),
            dict(order=1.0, area=1e-4, filter_gain=1.0, concentrator_gain=1.0, fov_semiangle=2.0),
        ],
    )
    def test_invalid(self, kwargs):
        with pytest.raises(ParameterError):
            LambertianParams(**kwargs)


class TestGain:
    def test_prefactor_frozen(self):
        assert gain_prefactor(PARAMS, GEOM) == pytest.approx(PREFACTOR, rel=1e-15)

    def test_gain_at_center_equals_max_bound(self):
        assert channel_gain(0.0, PARAMS, GEOM) == BOUNDS.gain_max
        assert channel_gain(0.0, PARAMS, GEOM) == pytest.approx(2.089e-5, rel=1e-3)

    def test_gain_at_edges_equals_bounds(self):
        assert channel_gain(GEOM.radius, PARAMS, GEOM) == BOUNDS.gain_min
        assert channel_gain(GEOM.protected_radius, PARAMS, GEOM) == BOUNDS.gain_eve_max

    def test_strictly_decreasing(self):
        r = np.linspace(0.0, 8.0, 100)
        g = channel_gain(r, PARAMS, GEOM)
        assert np.all(np.diff(g) < 0)

    def test_negative_radius_rejected(self):
        with pytest.raises(ParameterError):
            channel_gain(-0.1, PARAMS, GEOM)

    def test_scalar_and_vector(self):
        assert isinstance(channel_gain(1.0, PARAMS, GEOM), float)
        out = channel_gain(np.array([0.0, 1.0]), PARAMS, GEOM)
        assert isinstance(out, np.ndarray)


class TestBounds:
    def test_frozen_values(self):
        assert BOUNDS.gain_min == pytest.approx(GAIN_MIN, rel=1e-14)
        assert BOUNDS.gain_eve_max == pytest.approx(GAIN_EVE_MAX, rel=1e-14)
        assert BOUNDS.gain_max == pytest.approx(GAIN_MAX, rel=1e-14)

    def test_ordering(self):
        assert 0 < BOUNDS.gain_min < BOUNDS.gain_eve_max < BOUNDS.gain_max
        assert 0 < BOUNDS.norm_bob < BOUNDS.norm_eve

    def test_no_protected_zone_degenerates(self):
        geom = DeploymentGeometry(radius=8.0, protected_radius=0.0, height=4.0)
        b = compute_bounds(PARAMS, geom)
        assert b.gain_eve_max == b.gain_max
        assert b.norm_eve == b.norm_bob

    def test_larger_zone_compresses_eve_support(self):
        prev = None
        for rho in (0.0, 2.0, 4.0, 6.0):
            geom = DeploymentGeometry(radius=8.0, protected_radius=rho, height=4.0)
            b = compute_bounds(PARAMS, geom)
            if prev is not None:
                assert b.gain_eve_max < prev
            prev = b.gain_eve_max

    def test_fov_validity_check(self):
        worst = max_incidence_angle(GEOM)
        assert worst == pytest.approx(math.acos(4.0 / math.hypot(8.0, 4.0)))
        ok = LambertianParams(order=6, area=1e-4, filter_gain=1.0, concentrator_gain=3.0,
                              fov_semiangle=worst + 1e-6)
        compute_bounds(ok, GEOM)
        bad = LambertianParams(order=6, area=1e-4, filter_gain=1.0, concentrator_gain=3.0,
                               fov_semiangle=worst - 1e-3)
        with pytest.raises(ParameterError):
            compute_bounds(bad, GEOM)


class TestGainDensities:
    def test_support_and_zero_outside(self):
        inside = 0.5 * (BOUNDS.gain_min + BOUNDS.gain_eve_max)
        assert pdf_gain_bob(inside, BOUNDS, 6) > 0
        assert pdf_gain_bob(BOUNDS.gain_max * 1.001, BOUNDS, 6) == 0.0
        assert pdf_gain_eve(BOUNDS.gain_eve_max * 1.001, BOUNDS, 6) == 0.0
        assert pdf_gain_bob(BOUNDS.gain_min * 0.999, BOUNDS, 6) == 0.0

    def test_nonpositive_rejected(self):
        with pytest.raises(ParameterError):
            pdf_gain_bob(0.0, BOUNDS, 6)
        with pytest.raises(ParameterError):
            pdf_gain_eve(-1e-9, BOUNDS, 6)

    def test_decreasing_on_support(self):
        h = np.linspace(BOUNDS.gain_min, BOUNDS.gain_eve_max, 64)
        vals = pdf_gain_eve(h, BOUNDS, 6)
        assert np.all(np.diff(vals) < 0)

    def test_normalization(self):
        total, _ = integrate.quad(
            lambda h: pdf_gain_bob(h, BOUNDS, 6), BOUNDS.gain_min, BOUNDS.gain_max
        )
        assert abs(total - 1.0) < 1e-9
        total, _ = integrate.quad(
            lambda h: pdf_gain_eve(h, BOUNDS, 6), BOUNDS.gain_min, BOUNDS.gain_eve_max
        )
        assert abs(total - 1.0) < 1e-9

    def test_no_zone_identical_densities(self):
        geom = DeploymentGeometry(radius=8.0, protected_radius=0.0, height=4.0)
        b = compute_bounds(PARAMS, geom)
        h = np.linspace(b.gain_min, b.gain_max, 47)
        assert pdf_gain_eve(h, b, 6) == pytest.approx(pdf_gain_bob(h, b, 6))

    def test_cdf_edges_and_quadrature(self):
        assert cdf_gain_bob(BOUNDS.gain_min * 0.5, BOUNDS, 6) == 0.0
        assert cdf_gain_bob(BOUNDS.gain_max * 2.0, BOUNDS, 6) == 1.0
        mid = math.sqrt(BOUNDS.gain_min * BOUNDS.gain_max)
        total, _ = integrate.quad(
            lambda h: pdf_gain_bob(h, BOUNDS, 6), BOUNDS.gain_min, mid
        )
        assert cdf_gain_bob(mid, BOUNDS, 6) == pytest.approx(total, rel=1e-10)
        mid_e = math.sqrt(BOUNDS.gain_min * BOUNDS.gain_eve_max)
        total, _ = integrate.quad(
            lambda h: pdf_gain_eve(h, BOUNDS, 6), BOUNDS.gain_min, mid_e
        )
        assert cdf_gain_eve(mid_e, BOUNDS, 6) == pytest.approx(total, rel=1e-10)

    def test_pushforward_ks(self):
        n = 100_000
        rng = np.random.Generator(np.random.Philox(5))
        h = channel_gain(sample_radius_eve(rng.random(n), GEOM), PARAMS, GEOM)
        probs = cdf_gain_eve(np.sort(h), BOUNDS, 6)
        levels = np.arange(1, n + 1) / n
        ks = max(np.max(np.abs(probs - levels)), np.max(np.abs(probs - levels + 1.0 / n)))
        assert ks < 0.006


class TestCsiScaling:
    def test_identity_and_decades(self):
        assert apply_csi_uncertainty(2.0, 0.0) == 2.0
        assert apply_csi_uncertainty(2.0, 10.0) == pytest.approx(20.0, rel=1e-14)
        assert apply_csi_uncertainty(2.0, -10.0) == pytest.approx(0.2, rel=1e-14)

    def test_composition(self):
        once = apply_csi_uncertainty(apply_csi_uncertainty(3.0, 4.2), -1.7)
        combined = apply_csi_uncertainty(3.0, 2.5)
        assert once == pytest.approx(combined, rel=1e-14)

    def test_bound_enforced(self):
        assert apply_csi_uncertainty(1.0, 3.0, bound_db=3.0) == pytest.approx(10 ** 0.3)
        with pytest.raises(ParameterError):
            apply_csi_uncertainty(1.0, 3.1, bound_db=3.0)

    def test_vectorized(self):
        out = apply_csi_uncertainty(np.array([1.0, 2.0]), 10.0)
        assert out == pytest.approx(np.array([10.0, 20.0]))
