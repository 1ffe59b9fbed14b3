"""Self-contained verification suite: the closed-form / quadrature / MC triangle.

Every analytic result in the library is checked three ways against
artifacts that share no algebra with it:

  * gain densities integrate to one and match the empirical distribution
    of sampled placements (pushforward Kolmogorov-Smirnov test),
  * lambda_fn against a direct real-integral oracle, and the contour
    evaluation of the Meijer G instance against an antiderivative
    identity integrated by adaptive quadrature,
  * regime closed forms against nested quadrature of their defining
    double integrals on dense parameter grids that exercise all five
    regimes of each formula, plus branch agreement at regime boundaries,
  * seeded Monte-Carlo estimates within three standard errors,
  * grid-level monotonicity and saturation behavior.

run_checks returns (results, rows): one CheckResult per named check and
the per-grid-point CSV rows the validate command writes. All outputs are
deterministic for a fixed (seed, n_samples); reports carry no timing, so
reruns are byte-identical.
"""

from __future__ import annotations

import math
import time
import warnings
from dataclasses import dataclass, replace

import numpy as np
from scipy import integrate

from .channel import (
    ChannelBounds,
    channel_gain,
    cdf_gain_bob,
    cdf_gain_eve,
    compute_bounds,
    pdf_gain_bob,
    pdf_gain_eve,
)
from .errors import ConsistencyError, NumericError, ParameterError
from .geometry import sample_radius_bob, sample_radius_eve
from .montecarlo import MCConfig, estimate_asc, estimate_sop
from .secrecy import (
    asc_closed_form,
    asc_quadrature,
    asc_regime,
    gain_ratio_threshold,
    sop_lower_bound_closed_form,
    sop_quadrature,
    sop_regime,
    _asc_terms,
    _d_bob,
    _d_eve,
)
from .specfun import lambda_fn, lambda_oracle, meijer_g_1333
from .sweeps import Scenario, scenario_from_dict

__all__ = [
    "CheckResult",
    "CHECK_NAMES",
    "run_checks",
    "report_text",
    "REFERENCE_BASE",
    "SMALL_CELL_BASE",
    "SATURATION_BASE",
    "asc_grid_points",
    "sop_grid_points",
]

# Reference indoor deployment: directive source high above a wide cell.
REFERENCE_BASE = {
    "lambertian_order": 6,
    "detector_area_m2": 1e-4,
    "filter_gain": 1.0,
    "concentrator_gain": 3.0,
    "cell_radius_m": 8.0,
    "protected_radius_m": 2.0,
    "source_height_m": 4.0,
    "dimming": 0.5,
    "power_db": 60.0,
    "noise_var_bob": 1.0,
    "noise_var_eve": 1.0,
    "csi_db_bob": 10.0,
    "csi_db_eve": 1.0,
}

# Small cell with a wide (order-1) source, used for the density checks.
SMALL_CELL_BASE = {
    "lambertian_order": 1,
    "detector_area_m2": 1e-4,
    "filter_gain": 1.0,
    "concentrator_gain": 1.0,
    "cell_radius_m": 5.0,
    "protected_radius_m": 1.0,
    "source_height_m": 3.0,
    "dimming": 0.5,
    "power_db": 50.0,
    "noise_var_bob": 1.0,
    "noise_var_eve": 1.0,
}

# Closed-form vs quadrature grid for the averaged capacity. The cartesian
# part reaches the three interior regimes; the two probe points push the
# channel-knowledge imbalance far enough out to reach the zero and full
# regimes, so the classifier must report all five hit.
ASC_GRID_AXES = {
    "dimming": (0.3, 0.5, 0.8),
    "power_db": (35.0, 45.0, 55.0, 65.0),
    "protected_radius_m": (0.0, 2.0, 4.0),
    "csi_db_bob": (-10.0, 0.0, 10.0),
    "csi_db_eve": (0.0, 1.0),
}
ASC_PROBES = (
    {"dimming": 0.5, "power_db": 55.0, "protected_radius_m": 4.0, "csi_db_bob": -30.0, "csi_db_eve": 1.0},
    {"dimming": 0.5, "power_db": 55.0, "protected_radius_m": 4.0, "csi_db_bob": 25.0, "csi_db_eve": 0.0},
)

# Outage grid (threshold, exclusion radius, and both knowledge budgets)
# plus probes reaching the outage-impossible and outage-certain regimes.
SOP_GRID_AXES = {
    "outage_threshold": (1.5, 3.0, 6.0),
    "protected_radius_m": (2.0, 4.0, 6.0),
    "csi_db_eve": (1.0, 5.0, 10.0),
    "csi_db_bob": (-10.0, -5.0, 0.0, 5.0, 10.0),
}
SOP_PROBES = (
    {"outage_threshold": 1.5, "protected_radius_m": 6.0, "csi_db_bob": 25.0, "csi_db_eve": 1.0},
    {"outage_threshold": 1.5, "protected_radius_m": 4.0, "csi_db_bob": -25.0, "csi_db_eve": 10.0},
)

# Saturation of the averaged capacity in drive level: forward differences
# over this dB grid must be nonnegative, decreasing at the top, and the
# final one below SATURATION_FINAL_DIFF. The reference cell collects too
# little light to flatten by 70 dB (its weakest links are still below
# unity SNR there), so this check runs on a small cell with a larger
# detector and concentrator whose links all saturate inside the window
# (measured final diff 5.6e-4 nat at 65->70 dB; frozen with ~9x margin).
SATURATION_BASE = dict(
    SMALL_CELL_BASE,
    detector_area_m2=1e-3,
    concentrator_gain=3.0,
    csi_db_bob=10.0,
    csi_db_eve=1.0,
)
SATURATION_POWERS_DB = tuple(float(p) for p in range(35, 75, 5))
SATURATION_FINAL_DIFF = 5e-3

_REL_FLOOR = 1e-9


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named check.

    worst is the check's scalar figure of merit (gap, KS statistic,
    z-score, or violation magnitude), to be compared against tolerance.
    seconds is wall time; it is asserted against runtime budgets by the
    test suite but never written into reports.
    """

    name: str
    passed: bool
    worst: float
    tolerance: float
    detail: str
    seconds: float


CHECK_NAMES = (
    "density_normalization",
    "pushforward_ks",
    "lambda_oracle_agreement",
    "meijer_antiderivative",
    "asc_closed_vs_quadrature",
    "asc_regime_continuity",
    "sop_closed_vs_quadrature",
    "sop_regime_continuity",
    "mc_asc_triangle",
    "mc_sop_triangle",
    "asc_monotonicity",
    "asc_saturation",
    "sop_monotonicity",
)


def _rel_gap(a: float, b: float) -> float:
    return abs(a - b) / max(abs(a), abs(b), _REL_FLOOR)


def _bounds_for(sc: Scenario, mutate_eve_norm: bool) -> ChannelBounds:
    bounds = compute_bounds(sc.params, sc.geom)
    if mutate_eve_norm:
        bounds = replace(bounds, norm_eve=1.05 * bounds.norm_eve)
    return bounds


def _grid_dicts(base: dict, axes: dict, probes: tuple) -> "list[dict]":
    keys = list(axes)
    dicts = []
    shape = [len(axes[k]) for k in keys]
    for flat in range(int(np.prod(shape))):
        d = dict(base)
        rest = flat
        for k, n in zip(reversed(keys), reversed(shape)):
            d[k] = axes[k][rest % n]
            rest //= n
        dicts.append(d)
    for p in probes:
        d = dict(base)
        d.update(p)
        dicts.append(d)
    return dicts


def asc_grid_points(base: "dict | None" = None) -> "list[dict]":
    """Scenario dicts of the capacity acceptance grid (probes last)."""
    return _grid_dicts(base or REFERENCE_BASE, ASC_GRID_AXES, ASC_PROBES)


def sop_grid_points(base: "dict | None" = None) -> "list[dict]":
    """Scenario dicts of the outage acceptance grid (probes last)."""
    return _grid_dicts(base or REFERENCE_BASE, SOP_GRID_AXES, SOP_PROBES)


def _describe(d: dict, keys) -> str:
    return ", ".join(f"{k}={d[k]:g}" for k in keys)


class _Suite:
    """Shared lazily computed state for the individual checks."""

    def __init__(self, seed: int, n_samples: int, workers: int, mutate: bool):
        self.seed = seed
        self.n_samples = n_samples
        self.workers = workers
        self.mutate = mutate
        self.results: "list[CheckResult]" = []
        self.rows: "list[dict]" = []
        self._asc: "list[dict] | None" = None
        self._sop: "list[dict] | None" = None

    # -- grid evaluation caches ------------------------------------------

    def asc_points(self) -> "list[dict]":
        if self._asc is None:
            pts = []
            for d in asc_grid_points():
                sc = scenario_from_dict(d)
                bounds = _bounds_for(sc, self.mutate)
                ratio = gain_ratio_threshold(sc.ctx)
                pts.append(
                    {
                        "d": d,
                        "sc": sc,
                        "bounds": bounds,
                        "regime": asc_regime(ratio, bounds),
                        "closed": asc_closed_form(sc.ctx, bounds, sc.order),
                    }
                )
            self._asc = pts
        return self._asc

    def sop_points(self) -> "list[dict]":
        if self._sop is None:
            pts = []
            for d in sop_grid_points():
                sc = scenario_from_dict(d)
                bounds = _bounds_for(sc, self.mutate)
                ratio = gain_ratio_threshold(sc.ctx)
                gamma = d["outage_threshold"]
                pts.append(
                    {
                        "d": d,
                        "sc": sc,
                        "bounds": bounds,
                        "regime": sop_regime(gamma, ratio, bounds),
                        "closed": sop_lower_bound_closed_form(
                            sc.ctx, bounds, gamma, sc.order
                        ),
                    }
                )
            self._sop = pts
        return self._sop

    # -- individual checks ------------------------------------------------

    def density_normalization(self):
        worst, where = 0.0, ""
        for base, radii in (
            (SMALL_CELL_BASE, (0.0, 1.0, 2.0)),
            (REFERENCE_BASE, (0.0, 2.0, 4.0, 6.0)),
        ):
            for rho in radii:
                d = dict(base)
                d["protected_radius_m"] = rho
                sc = scenario_from_dict(d)
                bounds = _bounds_for(sc, self.mutate)
                for label, f, lo, hi in (
                    ("bob", lambda h: pdf_gain_bob(h, bounds, sc.order), bounds.gain_min, bounds.gain_max),
                    ("eve", lambda h: pdf_gain_eve(h, bounds, sc.order), bounds.gain_min, bounds.gain_eve_max),
                ):
                    with warnings.catch_warnings():
                        warnings.simplefilter("ignore", integrate.IntegrationWarning)
                        total, _ = integrate.quad(
                            f, lo, hi, epsabs=1e-12, epsrel=1e-12, limit=200
                        )
                    gap = abs(total - 1.0)
                    if gap > worst:
                        worst, where = gap, f"{label}, rho={rho:g}, order={sc.order:g}"
        return worst, 1e-9, f"worst |integral - 1| at {where}"

    def pushforward_ks(self):
        n = 1_000_000
        worst, where = 0.0, ""
        grid_levels = np.arange(1, n + 1) / n
        for base, radii in (
            (SMALL_CELL_BASE, (0.0, 1.0, 2.0)),
            (REFERENCE_BASE, (0.0, 2.0, 4.0, 6.0)),
        ):
            for rho in radii:
                d = dict(base)
                d["protected_radius_m"] = rho
                sc = scenario_from_dict(d)
                bounds = _bounds_for(sc, self.mutate)
                rng = np.random.Generator(np.random.Philox(self.seed))
                u_bob = rng.random(n)
                u_eve = rng.random(n)
                for label, u, sampler, cdf in (
                    ("bob", u_bob, sample_radius_bob, cdf_gain_bob),
                    ("eve", u_eve, sample_radius_eve, cdf_gain_eve),
                ):
                    h = channel_gain(sampler(u, sc.geom), sc.params, sc.geom)
                    probs = cdf(np.sort(h), bounds, sc.order)
                    ks = float(
                        max(
                            np.max(np.abs(probs - grid_levels)),
                            np.max(np.abs(probs - grid_levels + 1.0 / n)),
                        )
                    )
                    if ks > worst:
                        worst, where = ks, f"{label}, rho={rho:g}, order={sc.order:g}"
        return worst, 0.002, f"worst KS statistic at {where} (n=1e6)"

    def lambda_oracle_agreement(self):
        rng = np.random.Generator(np.random.Philox(self.seed + 1))
        tuples = []
        while len(tuples) < 100:
            d = dict(REFERENCE_BASE)
            d["dimming"] = float(rng.uniform(0.2, 1.0))
            d["power_db"] = float(rng.uniform(30.0, 70.0))
            d["protected_radius_m"] = float(rng.uniform(0.0, 6.0))
            d["csi_db_bob"] = float(rng.uniform(-30.0, 30.0))
            d["csi_db_eve"] = float(rng.uniform(0.0, 10.0))
            sc = scenario_from_dict(d)
            bounds = _bounds_for(sc, self.mutate)
            ratio = gain_ratio_threshold(sc.ctx)
            _, terms = _asc_terms(ratio, bounds, sc.order, _d_bob(sc.ctx), _d_eve(sc.ctx))
            ctx = sc.ctx.lambda_context()
            for _, a, b, c, dd in terms:
                if b < c:
                    tuples.append((a, b, c, dd, ctx))
        worst, where = 0.0, ""
        for a, b, c, dd, ctx in tuples[:100]:
            gap = _rel_gap(lambda_fn(a, b, c, dd, ctx), lambda_oracle(a, b, c, dd, ctx))
            if gap > worst:
                worst, where = gap, f"a={a:g}, b={b:.3e}, c={c:.3e}, d={dd:.3e}"
        return worst, 1e-6, f"100 tuples from averaged-capacity term tables; worst at {where}"

    def meijer_antiderivative(self):
        worst, where = 0.0, ""
        for a in (1.0, 2.0, 2.25, 4.5, 5.0, 10.0):
            for z in np.logspace(-6.0, 6.0, 25):
                gap = _rel_gap(meijer_g_1333(z, a), _meijer_oracle(z, a))
                if gap > worst:
                    worst, where = gap, f"z={z:.3e}, a={a:g}"
            # spot values named in the interface contract
            for z in (1.0, 100.0):
                gap = _rel_gap(meijer_g_1333(z, 4.5), _meijer_oracle(z, 4.5))
                if gap > worst:
                    worst, where = gap, f"z={z:g}, a=4.5"
        return worst, 1e-8, f"log grid z in [1e-6, 1e6]; worst at {where}"

    def asc_closed_vs_quadrature(self):
        worst, where = 0.0, ""
        regimes = set()
        for pt in self.asc_points():
            sc, bounds = pt["sc"], pt["bounds"]
            quad = asc_quadrature(sc.ctx, bounds, sc.order)
            pt["quad"] = quad
            regimes.add(pt["regime"])
            gap = _rel_gap(pt["closed"], quad)
            if gap > worst:
                worst, where = gap, _describe(pt["d"], ASC_GRID_AXES)
        hit = sorted(r.value for r in regimes)
        ok = len(regimes) == 5
        detail = f"{len(self.asc_points())} points, regimes hit: {', '.join(hit)}; worst at {where}"
        return worst if ok else math.inf, 1e-6, detail

    def sop_closed_vs_quadrature(self):
        worst, where = 0.0, ""
        regimes = set()
        for pt in self.sop_points():
            sc, bounds = pt["sc"], pt["bounds"]
            gamma = pt["d"]["outage_threshold"]
            quad = sop_quadrature(sc.ctx, bounds, gamma, sc.order)
            pt["quad"] = quad
            regimes.add(pt["regime"])
            gap = _rel_gap(pt["closed"], quad)
            if gap > worst:
                worst, where = gap, _describe(pt["d"], SOP_GRID_AXES)
        hit = sorted(r.value for r in regimes)
        ok = len(regimes) == 5
        detail = f"{len(self.sop_points())} points, regimes hit: {', '.join(hit)}; worst at {where}"
        return worst if ok else math.inf, 1e-6, detail

    def asc_regime_continuity(self):
        worst, where = 0.0, ""
        for rho in (2.0, 4.0):
            d = dict(REFERENCE_BASE)
            d["protected_radius_m"] = rho
            sc = scenario_from_dict(d)
            bounds = _bounds_for(sc, self.mutate)
            v1, v2, v3 = bounds.gain_min, bounds.gain_eve_max, bounds.gain_max
            plain = math.sqrt(
                math.e * sc.ctx.noise_var_eve / (2.0 * math.pi * sc.ctx.noise_var_bob)
            )
            for label, edge in (
                ("zero/low", v1 / v3),
                ("low/mid", v2 / v3),
                ("mid/high", 1.0),
                ("high/full", v2 / v1),
            ):
                vals = []
                for off in (1.0 - 1e-9, 1.0 + 1e-9):
                    target = edge * off
                    d2 = dict(d)
                    d2["csi_db_bob"] = d["csi_db_eve"] + 10.0 * math.log10(target / plain)
                    sc2 = scenario_from_dict(d2)
                    vals.append(asc_closed_form(sc2.ctx, bounds, sc2.order))
                gap = _rel_gap(vals[0], vals[1])
                if gap > worst:
                    worst, where = gap, f"{label}, rho={rho:g}"
        return worst, 1e-6, f"adjacent branches at boundary +/- 1e-9 relative; worst at {where}"

    def sop_regime_continuity(self):
        worst, where = 0.0, ""
        for rho, csi_b in ((2.0, 31.0), (4.0, 25.0)):
            d = dict(REFERENCE_BASE)
            d["protected_radius_m"] = rho
            d["csi_db_bob"] = csi_b
            sc = scenario_from_dict(d)
            bounds = _bounds_for(sc, self.mutate)
            ratio = gain_ratio_threshold(sc.ctx)
            v1, v2, v3 = bounds.gain_min, bounds.gain_eve_max, bounds.gain_max
            edges = (
                ("zero/low", ratio**2 * v1**2 / v2**2),
                ("low/mid", ratio**2),
                ("mid/high", ratio**2 * v3**2 / v2**2),
                ("high/one", ratio**2 * v3**2 / v1**2),
            )
            for label, edge in edges:
                vals = [
                    sop_lower_bound_closed_form(sc.ctx, bounds, edge * off, sc.order)
                    for off in (1.0 - 1e-9, 1.0 + 1e-9)
                ]
                gap = _rel_gap(vals[0], vals[1])
                if gap > worst:
                    worst, where = gap, f"{label}, rho={rho:g}"
        return worst, 1e-6, f"adjacent branches at boundary +/- 1e-9 relative; worst at {where}"

    def mc_asc_triangle(self):
        mc = MCConfig(n_samples=self.n_samples, seed=self.seed, n_streams=self.workers)
        worst, where = 0.0, ""
        for pt in self.asc_points():
            sc = pt["sc"]
            est = estimate_asc(sc.ctx, sc.params, sc.geom, mc)
            pt["mc"] = est
            diff = abs(est.mean - pt["closed"])
            z = diff / est.std_error if est.std_error > 0.0 else (0.0 if diff == 0.0 else math.inf)
            if z > worst:
                worst, where = z, _describe(pt["d"], ASC_GRID_AXES)
        n_pts = len(self.asc_points())
        return worst, 3.0, f"worst |closed - mc| / stderr over {n_pts} points at {where}"

    def mc_sop_triangle(self):
        mc = MCConfig(n_samples=self.n_samples, seed=self.seed, n_streams=self.workers)
        worst, where = 0.0, ""
        inclusion_ok = True
        for pt in self.sop_points():
            sc = pt["sc"]
            gamma = pt["d"]["outage_threshold"]
            exact, lower = estimate_sop(sc.ctx, sc.params, sc.geom, gamma, mc)
            pt["mc"] = lower
            pt["mc_exact"] = exact
            diff = abs(lower.mean - pt["closed"])
            z = diff / lower.std_error if lower.std_error > 0.0 else (0.0 if diff == 0.0 else math.inf)
            if z > worst:
                worst, where = z, _describe(pt["d"], SOP_GRID_AXES)
            if exact.mean < lower.mean:
                inclusion_ok = False
        n_pts = len(self.sop_points())
        detail = (
            f"worst |closed - mc| / stderr over {n_pts} points at {where}; "
            f"exact >= lower pointwise: {'yes' if inclusion_ok else 'NO'}"
        )
        return worst if inclusion_ok else math.inf, 3.0, detail

    def asc_monotonicity(self):
        pts = self.asc_points()[: -len(ASC_PROBES)]
        keys = list(ASC_GRID_AXES)
        table = {tuple(pt["d"][k] for k in keys): pt["closed"] for pt in pts}
        worst, where = 0.0, ""

        def scan(axis: str, sign: float):
            nonlocal worst, where
            idx = keys.index(axis)
            values = ASC_GRID_AXES[axis]
            for key in table:
                if key[idx] != values[0]:
                    continue
                series = []
                for v in values:
                    k = list(key)
                    k[idx] = v
                    series.append(table[tuple(k)])
                tol = 1e-9 * max(max(map(abs, series)), _REL_FLOOR)
                for a, b in zip(series, series[1:]):
                    viol = sign * (a - b)
                    if viol > tol and viol > worst:
                        worst, where = viol, f"axis {axis} at {key}"

        scan("protected_radius_m", 1.0)  # nondecreasing in exclusion radius
        scan("csi_db_bob", 1.0)  # nondecreasing in own-link knowledge
        scan("csi_db_eve", -1.0)  # nonincreasing in eavesdropper knowledge
        return worst, 0.0, f"max monotonicity violation (nats); worst at {where or 'none'}"

    def asc_saturation(self):
        d = dict(SATURATION_BASE)
        vals = []
        for p in SATURATION_POWERS_DB:
            d["power_db"] = p
            sc = scenario_from_dict(d)
            bounds = _bounds_for(sc, self.mutate)
            vals.append(asc_closed_form(sc.ctx, bounds, sc.order))
        diffs = np.diff(vals)
        nonneg = bool(np.all(diffs >= -1e-12))
        tail_decreasing = bool(diffs[-1] <= diffs[-2] <= diffs[-3])
        final_small = bool(diffs[-1] < SATURATION_FINAL_DIFF)
        ok = nonneg and tail_decreasing and final_small
        detail = (
            f"forward diffs over {SATURATION_POWERS_DB[0]:g}..{SATURATION_POWERS_DB[-1]:g} dB: "
            f"nonnegative={nonneg}, tail decreasing={tail_decreasing}, "
            f"final diff={diffs[-1]:.3e} (limit {SATURATION_FINAL_DIFF:g})"
        )
        return (0.0 if ok else math.inf), SATURATION_FINAL_DIFF, detail

    def sop_monotonicity(self):
        pts = self.sop_points()
        grid = pts[: -len(SOP_PROBES)]
        keys = list(SOP_GRID_AXES)
        table = {tuple(pt["d"][k] for k in keys): pt["closed"] for pt in grid}
        worst, where = 0.0, ""

        def scan(axis: str, sign: float):
            nonlocal worst, where
            idx = keys.index(axis)
            values = SOP_GRID_AXES[axis]
            for key in table:
                if key[idx] != values[0]:
                    continue
                series = []
                for v in values:
                    k = list(key)
                    k[idx] = v
                    series.append(table[tuple(k)])
                tol = 1e-9
                for a, b in zip(series, series[1:]):
                    viol = sign * (a - b)
                    if viol > tol and viol > worst:
                        worst, where = viol, f"axis {axis} at {key}"

        scan("outage_threshold", 1.0)  # nondecreasing in threshold
        scan("csi_db_bob", -1.0)  # nonincreasing in own-link knowledge
        scan("csi_db_eve", 1.0)  # nondecreasing in eavesdropper knowledge

        zero_probe, one_probe = pts[-2]["closed"], pts[-1]["closed"]
        exact_ok = zero_probe == 0.0 and one_probe == 1.0
        detail = (
            f"max violation {worst:.3e} at {where or 'none'}; "
            f"outer-regime probes exact: zero={zero_probe!r}, one={one_probe!r}"
        )
        return worst if exact_ok else math.inf, 0.0, detail

    # -- orchestration ------------------------------------------------------

    def run(self, include: "tuple[str, ...] | None") -> None:
        for name in CHECK_NAMES:
            if include is not None and name not in include:
                continue
            fn = getattr(self, name)
            start = time.perf_counter()
            try:
                worst, tol, detail = fn()
                passed = worst <= tol
            except (ConsistencyError, NumericError) as exc:
                worst, tol, detail = math.inf, 0.0, f"{type(exc).__name__}: {exc}"
                passed = False
            self.results.append(
                CheckResult(
                    name=name,
                    passed=passed,
                    worst=worst,
                    tolerance=tol,
                    detail=detail,
                    seconds=time.perf_counter() - start,
                )
            )
        self._collect_rows()

    def _collect_rows(self) -> None:
        def fmt(x):
            return "" if x is None else repr(float(x))

        if self._asc is not None:
            for i, pt in enumerate(self._asc):
                est = pt.get("mc")
                self.rows.append(
                    {
                        "axis_value": str(i),
                        "curve_id": "asc_grid",
                        "closed_form": fmt(pt["closed"]),
                        "quadrature": fmt(pt.get("quad")),
                        "mc_mean": fmt(est.mean if est else None),
                        "mc_stderr": fmt(est.std_error if est else None),
                    }
                )
        if self._sop is not None:
            for i, pt in enumerate(self._sop):
                est = pt.get("mc")
                self.rows.append(
                    {
                        "axis_value": str(i),
                        "curve_id": "sop_grid",
                        "closed_form": fmt(pt["closed"]),
                        "quadrature": fmt(pt.get("quad")),
                        "mc_mean": fmt(est.mean if est else None),
                        "mc_stderr": fmt(est.std_error if est else None),
                    }
                )
            for i, pt in enumerate(self._sop):
                est = pt.get("mc_exact")
                if est is None:
                    continue
                self.rows.append(
                    {
                        "axis_value": str(i),
                        "curve_id": "sop_grid|exact",
                        "closed_form": "",
                        "quadrature": "",
                        "mc_mean": fmt(est.mean),
                        "mc_stderr": fmt(est.std_error),
                    }
                )


def _meijer_oracle(z: float, a: float) -> float:
    """Antiderivative identity for the contour-evaluated G instance.

    Integrating the defining integral z^beta int_0^z t^(-beta-1) ln(1+t) dt
    by parts leaves an elementary log term plus a proper integral with an
    algebraic integrand, which adaptive quadrature handles directly.
    Shares nothing with the Mellin-Barnes evaluation path.
    """
    beta = 1.0 / (2.0 * a)
    p = 1.0 - beta
    upper = z**p
    integrand = lambda u: 1.0 / (1.0 + u ** (1.0 / p))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        if upper <= 1.0:
            total, _ = integrate.quad(integrand, 0.0, upper, epsabs=1e-14, epsrel=1e-13, limit=400)
        else:
            first, _ = integrate.quad(integrand, 0.0, 1.0, epsabs=1e-14, epsrel=1e-13, limit=400)
            second, _ = integrate.quad(integrand, 1.0, upper, epsabs=1e-14, epsrel=1e-13, limit=400)
            total = first + second
    return -math.log1p(z) / beta + z**beta * total / (beta * p)


def run_checks(
    seed: int = 7,
    n_samples: int = 1_000_000,
    workers: int = 1,
    mutate_eve_norm: bool = False,
    include: "tuple[str, ...] | None" = None,
) -> "tuple[list[CheckResult], list[dict]]":
    """Run the named checks and return (results, per-grid-point rows)."""
    if include is not None:
        unknown = sorted(set(include) - set(CHECK_NAMES))
        if unknown:
            raise ParameterError(f"unknown check names: {', '.join(unknown)}")
    suite = _Suite(seed, n_samples, workers, mutate_eve_norm)
    suite.run(include)
    return suite.results, suite.rows


def report_text(results: "list[CheckResult]") -> str:
    """Deterministic plain-text report (no timing, byte-stable)."""
    lines = []
    width = max(len(r.name) for r in results) if results else 10
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(
            f"{status}  {r.name:<{width}}  worst={r.worst:.6e}  tolerance={r.tolerance:.6e}  {r.detail}"
        )
    n_pass = sum(r.passed for r in results)
    lines.append(f"overall: {'PASS' if n_pass == len(results) else 'FAIL'} ({n_pass}/{len(results)} checks)")
    return "\n".join(lines) + "\n"
