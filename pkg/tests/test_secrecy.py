import math
from dataclasses import replace

import numpy as np
import pytest
from scipy import integrate

from vlcsec import (
    AscRegime,
    ConsistencyError,
    DeploymentGeometry,
    LambertianParams,
    ParameterError,
    SecrecyContext,
    SopRegime,
    asc_closed_form,
    asc_quadrature,
    asc_regime,
    compute_bounds,
    gain_ratio_threshold,
    instantaneous_sc,
    j_bounds,
    pdf_j_bob,
    pdf_j_eve,
    sop_lower_bound_closed_form,
    sop_quadrature,
    sop_regime,
)

PARAMS = LambertianParams(order=6, area=1e-4, filter_gain=1.0, concentrator_gain=3.0)


def scenario(rho=4.0, csi_b=10.0, csi_e=1.0, power_db=60.0, dimming=0.5):
    geom = DeploymentGeometry(radius=8.0, protected_radius=rho, height=4.0)
    ctx = SecrecyContext(
        dimming=dimming,
        intensity=10 ** (power_db / 10.0),
        csi_db_bob=csi_b,
        csi_db_eve=csi_e,
    )
    return ctx, compute_bounds(PARAMS, geom)


CTX, BOUNDS = scenario()


def rel(a, b):
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


class TestContext:
    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(dimming=0.0, intensity=1.0),
            dict(dimming=1.0001, intensity=1.0),
            dict(dimming=0.5, intensity=-1.0),
            dict(dimming=0.5, intensity=1.0, noise_var_bob=0.0),
            dict(dimming=0.5, intensity=1.0, csi_db_bob=float("nan")),
            dict(dimming=0.5, intensity=1.0, csi_db_bob=4.0, csi_db_bound=3.0),
            dict(dimming=0.5, intensity=1.0, csi_db_eve=-4.0, csi_db_bound=3.0),
        ],
    )
    def test_invalid(self, kwargs):
        with pytest.raises(ParameterError):
            SecrecyContext(**kwargs)

    def test_bound_accepts_inside(self):
        SecrecyContext(dimming=0.5, intensity=1.0, csi_db_bob=3.0, csi_db_bound=3.0)


class TestGainRatioThreshold:
    def test_balanced_links(self):
        ctx = SecrecyContext(dimming=0.5, intensity=1.0)
        assert gain_ratio_threshold(ctx) == pytest.approx(0.657744623479457, rel=1e-14)

    def test_reference_imbalance(self):
        assert gain_ratio_threshold(CTX) == pytest.approx(5.224651256678243, rel=1e-14)

    def test_decade_scaling(self):
        ctx10 = SecrecyContext(dimming=0.5, intensity=1.0, csi_db_bob=10.0)
        ctx0 = SecrecyContext(dimming=0.5, intensity=1.0)
        assert gain_ratio_threshold(ctx10) == pytest.approx(
            10.0 * gain_ratio_threshold(ctx0), rel=1e-14
        )

    def test_noise_ratio_dependence(self):
        ctx = SecrecyContext(dimming=0.5, intensity=1.0, noise_var_eve=4.0)
        assert gain_ratio_threshold(ctx) == pytest.approx(2 * 0.657744623479457, rel=1e-14)


class TestInstantaneousSc:
    def test_strong_eavesdropper_gives_zero(self):
        assert instantaneous_sc(BOUNDS.gain_min, BOUNDS.gain_eve_max, CTX) == 0.0

    def test_positive_branch_matches_direct_formula(self):
        hb, he = BOUNDS.gain_max, BOUNDS.gain_min
        drive = CTX.drive
        num = math.e * drive * 10.0 ** (CTX.csi_db_bob / 5.0) * hb**2 + 2 * math.pi
        den = 10.0 ** (CTX.csi_db_eve / 5.0) * drive * he**2 + 1.0
        expected = 0.5 * math.log(num / (2 * math.pi * den))
        got = instantaneous_sc(hb, he, CTX)
        assert got > 0
        assert got == pytest.approx(expected, rel=1e-14)

    def test_vanishing_intensity_gives_zero_rate(self):
        ctx = SecrecyContext(dimming=0.5, intensity=1e-12, csi_db_bob=10.0, csi_db_eve=1.0)
        got = instantaneous_sc(BOUNDS.gain_max, BOUNDS.gain_min, ctx)
        assert 0.0 <= got < 1e-10

    def test_zero_exactly_at_threshold_ratio(self):
        ratio = gain_ratio_threshold(CTX)
        hb = BOUNDS.gain_eve_max
        he = ratio * hb
        assert abs(instantaneous_sc(hb, he, CTX)) < 1e-12

    def test_vectorized(self):
        hb = np.array([BOUNDS.gain_max, BOUNDS.gain_min])
        he = np.array([BOUNDS.gain_min, BOUNDS.gain_eve_max])
        out = instantaneous_sc(hb, he, CTX)
        assert out.shape == (2,)
        assert out[0] > 0 and out[1] == 0.0

    def test_nonpositive_gain_rejected(self):
        with pytest.raises(ParameterError):
            instantaneous_sc(0.0, 1e-6, CTX)
        with pytest.raises(ParameterError):
            instantaneous_sc(1e-6, -1e-6, CTX)


class TestAscRegimes:
    def test_all_five_reachable(self):
        v1, v2, v3 = BOUNDS.gain_min, BOUNDS.gain_eve_max, BOUNDS.gain_max
        assert asc_regime(0.5 * v1 / v3, BOUNDS) is AscRegime.ZERO
        assert asc_regime(0.5 * (v1 / v3 + v2 / v3), BOUNDS) is AscRegime.LOW
        assert asc_regime(0.5, BOUNDS) is AscRegime.MID
        assert asc_regime(2.0, BOUNDS) is AscRegime.HIGH
        assert asc_regime(2.0 * v2 / v1, BOUNDS) is AscRegime.FULL

    def test_half_open_edges(self):
        v1, v2, v3 = BOUNDS.gain_min, BOUNDS.gain_eve_max, BOUNDS.gain_max
        assert asc_regime(v1 / v3, BOUNDS) is AscRegime.LOW
        assert asc_regime(v2 / v3, BOUNDS) is AscRegime.MID
        assert asc_regime(1.0, BOUNDS) is AscRegime.HIGH
        assert asc_regime(v2 / v1, BOUNDS) is AscRegime.FULL

    def test_degenerate_zone_has_no_gap(self):
        geom = DeploymentGeometry(radius=8.0, protected_radius=0.0, height=4.0)
        b = compute_bounds(PARAMS, geom)
        for ratio in np.logspace(-5, 7, 40):
            assert asc_regime(float(ratio), b) in AscRegime

    def test_invalid_ratio(self):
        with pytest.raises(ParameterError):
            asc_regime(0.0, BOUNDS)


class TestAscClosedForm:
    def test_zero_regime_is_exact_zero(self):
        ctx, bounds = scenario(csi_b=-30.0)
        assert asc_closed_form(ctx, bounds, 6) == 0.0

    @pytest.mark.parametrize(
        "kwargs,expected",
        [
            (dict(rho=2.0, csi_b=-10.0), 0.004450305198812001),
            (dict(rho=4.0, csi_b=-10.0), 0.005561045329625908),
            (dict(rho=4.0, csi_b=10.0), 0.7476801685481339),
            (dict(rho=4.0, csi_b=25.0, csi_e=0.0), 3.145529345952445),
        ],
    )
    def test_frozen_regression_values(self, kwargs, expected):
        ctx, bounds = scenario(**kwargs)
        assert asc_closed_form(ctx, bounds, 6) == pytest.approx(expected, rel=1e-12)

    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(rho=2.0, csi_b=-10.0),
            dict(rho=4.0, csi_b=10.0),
            dict(rho=4.0, csi_b=25.0, csi_e=0.0, power_db=45.0, dimming=0.8),
        ],
    )
    def test_matches_quadrature(self, kwargs):
        ctx, bounds = scenario(**kwargs)
        assert rel(asc_closed_form(ctx, bounds, 6), asc_quadrature(ctx, bounds, 6)) < 1e-6

    def test_more_exclusion_never_hurts(self):
        vals = [asc_closed_form(*scenario(rho=r), 6) for r in (0.0, 2.0, 4.0, 6.0)]
        assert all(b >= a - 1e-12 for a, b in zip(vals, vals[1:]))


class TestJBounds:
    def test_frozen_values(self):
        jb = j_bounds(CTX, BOUNDS)
        assert jb.bob_min == pytest.approx(0.0024163701972157578, rel=1e-13)
        assert jb.bob_max == pytest.approx(4719.473041437026, rel=1e-13)
        assert jb.eve_min == pytest.approx(8.852151888152245e-05, rel=1e-13)
        assert jb.eve_max == pytest.approx(0.3376827960263155, rel=1e-13)

    def test_ordering(self):
        jb = j_bounds(CTX, BOUNDS)
        assert 0 < jb.bob_min < jb.bob_max
        assert 0 < jb.eve_min <= jb.eve_max

    def test_own_link_decade_scales_by_hundred(self):
        ctx0, bounds = scenario(csi_b=0.0)
        ctx10, _ = scenario(csi_b=10.0)
        a, b = j_bounds(ctx0, bounds), j_bounds(ctx10, bounds)
        assert b.bob_min == pytest.approx(100.0 * a.bob_min, rel=1e-12)
        assert b.bob_max == pytest.approx(100.0 * a.bob_max, rel=1e-12)

    def test_no_zone_shares_support_ratio(self):
        ctx, bounds = scenario(rho=0.0)
        jb = j_bounds(ctx, bounds)
        assert jb.eve_max / jb.eve_min == pytest.approx(jb.bob_max / jb.bob_min, rel=1e-9)


class TestJDensities:
    def test_normalization(self):
        jb = j_bounds(CTX, BOUNDS)
        total, _ = integrate.quad(
            lambda j: pdf_j_bob(j, CTX, BOUNDS, 6), jb.bob_min, jb.bob_max, limit=200
        )
        assert abs(total - 1.0) < 1e-9
        total, _ = integrate.quad(
            lambda j: pdf_j_eve(j, CTX, BOUNDS, 6), jb.eve_min, jb.eve_max, limit=200
        )
        assert abs(total - 1.0) < 1e-9

    def test_support(self):
        jb = j_bounds(CTX, BOUNDS)
        assert pdf_j_bob(jb.bob_min * 0.999, CTX, BOUNDS, 6) == 0.0
        assert pdf_j_eve(jb.eve_max * 1.001, CTX, BOUNDS, 6) == 0.0
        with pytest.raises(ParameterError):
            pdf_j_bob(0.0, CTX, BOUNDS, 6)


class TestSopRegimes:
    def test_threshold_below_one_rejected(self):
        with pytest.raises(ParameterError):
            sop_regime(0.99, 1.0, BOUNDS)
        with pytest.raises(ParameterError):
            sop_lower_bound_closed_form(CTX, BOUNDS, 0.5, 6)

    def test_unit_threshold_with_large_ratio_is_outage_free(self):
        assert sop_regime(1.0, 1e4, BOUNDS) is SopRegime.ZERO

    def test_all_five_reachable(self):
        ratio = gain_ratio_threshold(CTX)
        v1, v2, v3 = BOUNDS.gain_min, BOUNDS.gain_eve_max, BOUNDS.gain_max
        t1 = ratio**2 * v1**2 / v2**2
        t4 = ratio**2 * v3**2 / v1**2
        assert sop_regime(1.0, 1e4, BOUNDS) is SopRegime.ZERO
        assert sop_regime(0.5 * (t1 + ratio**2), ratio, BOUNDS) is SopRegime.LOW
        assert sop_regime(1.5 * ratio**2, ratio, BOUNDS) is SopRegime.MID
        assert sop_regime(2.0 * ratio**2 * v3**2 / v2**2, ratio, BOUNDS) is SopRegime.HIGH
        assert sop_regime(2.0 * t4, ratio, BOUNDS) is SopRegime.ONE


class TestSopClosedForm:
    def test_outer_regimes_exact(self):
        ctx, bounds = scenario(csi_b=25.0, rho=6.0)
        assert sop_lower_bound_closed_form(ctx, bounds, 1.5, 6) == 0.0
        ctx1, _ = scenario(csi_b=-25.0, csi_e=10.0)
        assert sop_lower_bound_closed_form(ctx1, BOUNDS, 1.5, 6) == 1.0

    @pytest.mark.parametrize(
        "kwargs,gamma,expected",
        [
            (dict(rho=4.0, csi_b=10.0, csi_e=1.0), 1.5, 0.15134836826218243),
            (dict(rho=4.0, csi_b=0.0, csi_e=1.0), 3.0, 0.5795897457043042),
            (dict(rho=2.0, csi_b=-10.0, csi_e=10.0), 6.0, 0.9855013725889191),
        ],
    )
    def test_frozen_regression_values(self, kwargs, gamma, expected):
        ctx, bounds = scenario(**kwargs)
        got = sop_lower_bound_closed_form(ctx, bounds, gamma, 6)
        assert got == pytest.approx(expected, rel=1e-12)

    @pytest.mark.parametrize(
        "kwargs,gamma",
        [
            (dict(rho=4.0, csi_b=10.0, csi_e=1.0), 1.5),
            (dict(rho=4.0, csi_b=0.0, csi_e=1.0), 3.0),
            (dict(rho=2.0, csi_b=-10.0, csi_e=10.0), 6.0),
        ],
    )
    def test_matches_quadrature(self, kwargs, gamma):
        ctx, bounds = scenario(**kwargs)
        closed = sop_lower_bound_closed_form(ctx, bounds, gamma, 6)
        quad = sop_quadrature(ctx, bounds, gamma, 6)
        assert rel(closed, quad) < 1e-6

    def test_nondecreasing_in_threshold(self):
        ctx, bounds = scenario(csi_b=0.0)
        vals = [
            sop_lower_bound_closed_form(ctx, bounds, g, 6)
            for g in (1.0, 1.5, 3.0, 6.0, 12.0)
        ]
        assert all(b >= a - 1e-12 for a, b in zip(vals, vals[1:]))
        assert all(0.0 <= x <= 1.0 for x in vals)

    def test_corrupted_normalization_is_caught(self):
        ctx, bounds = scenario(csi_b=-10.0, csi_e=10.0)
        bad = replace(bounds, norm_eve=1.5 * bounds.norm_eve)
        with pytest.raises(ConsistencyError):
            sop_lower_bound_closed_form(ctx, bad, 6.0, 6)


class TestRegimeContinuity:
    def test_capacity_branches_agree_at_mid_high_edge(self):
        plain = math.sqrt(math.e / (2.0 * math.pi))
        vals = []
        for off in (1.0 - 1e-9, 1.0 + 1e-9):
            csi_b = 1.0 + 10.0 * math.log10(off / plain)
            ctx, bounds = scenario(csi_b=csi_b)
            vals.append(asc_closed_form(ctx, bounds, 6))
        assert rel(vals[0], vals[1]) < 1e-6

    def test_outage_branches_agree_at_low_mid_edge(self):
        ctx, bounds = scenario(csi_b=25.0)
        ratio = gain_ratio_threshold(ctx)
        edge = ratio**2
        vals = [
            sop_lower_bound_closed_form(ctx, bounds, edge * off, 6)
            for off in (1.0 - 1e-9, 1.0 + 1e-9)
        ]
        assert rel(vals[0], vals[1]) < 1e-6
