"""Scenario configs, parameter sweeps and CSV emission.

A scenario is a flat mapping of named physical parameters (see
SCENARIO_KEYS) from which the typed objects of the library are built.
Sweeps vary one axis parameter over an increasing list of values, with
an optional second parameter fanned out into one curve per value. Rows
follow a single schema for all sweep kinds:

    axis_value, curve_id, closed_form, quadrature, mc_mean, mc_stderr

with empty cells for modes that were not requested. Outage sweeps add a
companion "<curve>|exact" curve carrying the Monte-Carlo estimate of the
exact outage event, so the gap to the closed-form lower bound is visible
in the same file. Floats are serialized with repr, so a fixed (config,
seed) pair regenerates its CSV byte-identically.
"""

from __future__ import annotations

import csv
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .channel import (
    ChannelBounds,
    LambertianParams,
    compute_bounds,
    pdf_gain_bob,
    pdf_gain_eve,
)
from .errors import ParameterError
from .geometry import DeploymentGeometry
from .montecarlo import MCConfig, estimate_asc, estimate_sop
from .secrecy import (
    SecrecyContext,
    asc_closed_form,
    asc_quadrature,
    j_bounds,
    pdf_j_bob,
    pdf_j_eve,
    sop_lower_bound_closed_form,
    sop_quadrature,
)

__all__ = [
    "SCENARIO_KEYS",
    "Scenario",
    "SweepSpec",
    "scenario_from_dict",
    "sweep_spec_from_dict",
    "run_asc_sweep",
    "run_sop_sweep",
    "run_pdf_dump",
    "write_csv",
    "SWEEP_COLUMNS",
    "PDF_COLUMNS",
]

SWEEP_COLUMNS = ("axis_value", "curve_id", "closed_form", "quadrature", "mc_mean", "mc_stderr")
PDF_COLUMNS = ("value", "density", "curve_id")

# Every recognized scenario key with a short description (README mirrors this).
SCENARIO_KEYS = {
    "lambertian_order": "source directivity order, >= 1",
    "detector_area_m2": "photodetector area in m^2",
    "filter_gain": "optical filter gain",
    "concentrator_gain": "optical concentrator gain",
    "fov_semiangle_rad": "receiver field-of-view semiangle (optional validity check)",
    "cell_radius_m": "deployment disc radius",
    "protected_radius_m": "eavesdropper exclusion radius",
    "source_height_m": "vertical source-to-receiver distance",
    "dimming": "dimming factor in (0, 1]",
    "power_db": "nominal optical intensity, dB (10^(dB/10) linear)",
    "power_linear": "nominal optical intensity, linear (exclusive with power_db)",
    "noise_var_bob": "legitimate receiver noise variance",
    "noise_var_eve": "eavesdropper noise variance",
    "csi_db_bob": "legitimate-link channel-estimate error, dB",
    "csi_db_eve": "eavesdropper-link channel-estimate error, dB",
    "csi_db_bound": "optional cap on |csi_db_*|",
    "outage_threshold": "outage threshold gamma >= 1 (outage sweeps)",
}

_DEFAULTS = {
    "filter_gain": 1.0,
    "concentrator_gain": 1.0,
    "protected_radius_m": 0.0,
    "noise_var_bob": 1.0,
    "noise_var_eve": 1.0,
    "csi_db_bob": 0.0,
    "csi_db_eve": 0.0,
}

AXIS_KEYS = (
    "power_db",
    "protected_radius_m",
    "csi_db_bob",
    "csi_db_eve",
    "outage_threshold",
    "dimming",
)


@dataclass(frozen=True)
class Scenario:
    """Typed view of one fully specified parameter assignment."""

    params: LambertianParams
    geom: DeploymentGeometry
    ctx: SecrecyContext
    outage_threshold: "float | None" = None

    @property
    def order(self) -> float:
        return self.params.order

    def bounds(self) -> ChannelBounds:
        return compute_bounds(self.params, self.geom)


def scenario_from_dict(raw: dict) -> Scenario:
    """Build a Scenario from a flat config mapping.

    Raises ParameterError naming the offending field for unknown keys,
    missing required keys, or invalid values.
    """
    if not isinstance(raw, dict):
        raise ParameterError(f"scenario must be a mapping, got {type(raw).__name__}")
    unknown = sorted(set(raw) - set(SCENARIO_KEYS))
    if unknown:
        raise ParameterError(f"unknown scenario keys: {', '.join(unknown)}")
    data = dict(_DEFAULTS)
    data.update(raw)

    required = [
        "lambertian_order",
        "detector_area_m2",
        "cell_radius_m",
        "source_height_m",
        "dimming",
    ]
    missing = [k for k in required if k not in data]
    if "power_db" not in data and "power_linear" not in data:
        missing.append("power_db (or power_linear)")
    if missing:
        raise ParameterError(f"missing scenario keys: {', '.join(missing)}")
    if "power_db" in data and "power_linear" in data:
        raise ParameterError("power_db and power_linear are mutually exclusive")

    for key in data:
        if key == "fov_semiangle_rad" and data[key] is None:
            continue
        try:
            data[key] = float(data[key])
        except (TypeError, ValueError):
            raise ParameterError(f"scenario key {key} must be a number, got {data[key]!r}")

    params = LambertianParams(
        order=data["lambertian_order"],
        area=data["detector_area_m2"],
        filter_gain=data["filter_gain"],
        concentrator_gain=data["concentrator_gain"],
        fov_semiangle=data.get("fov_semiangle_rad"),
    )
    geom = DeploymentGeometry(
        radius=data["cell_radius_m"],
        protected_radius=data["protected_radius_m"],
        height=data["source_height_m"],
    )
    if "power_db" in data:
        intensity = 10.0 ** (data["power_db"] / 10.0)
    else:
        intensity = data["power_linear"]
    ctx = SecrecyContext(
        dimming=data["dimming"],
        intensity=intensity,
        noise_var_bob=data["noise_var_bob"],
        noise_var_eve=data["noise_var_eve"],
        csi_db_bob=data["csi_db_bob"],
        csi_db_eve=data["csi_db_eve"],
        csi_db_bound=data.get("csi_db_bound"),
    )
    return Scenario(
        params=params,
        geom=geom,
        ctx=ctx,
        outage_threshold=data.get("outage_threshold"),
    )


@dataclass(frozen=True)
class SweepSpec:
    """One swept axis plus an optional curve-family parameter.

    axis must be one of AXIS_KEYS and values strictly increasing.
    curve_key/curve_values fan the sweep out into one curve per value;
    with no curve family a single curve labeled by the axis is emitted.
    """

    axis: str
    values: "tuple[float, ...]"
    curve_key: "str | None" = None
    curve_values: "tuple[float, ...]" = ()

    def __post_init__(self) -> None:
        if self.axis not in AXIS_KEYS:
            raise ParameterError(
                f"axis must be one of {', '.join(AXIS_KEYS)}, got {self.axis!r}"
            )
        vals = tuple(float(v) for v in self.values)
        if not vals:
            raise ParameterError("sweep values must be a non-empty list")
        if any(b <= a for a, b in zip(vals, vals[1:])):
            raise ParameterError("sweep values must be strictly increasing")
        object.__setattr__(self, "values", vals)
        if self.curve_key is not None:
            if self.curve_key not in SCENARIO_KEYS:
                raise ParameterError(f"unknown curve key {self.curve_key!r}")
            if self.curve_key == self.axis:
                raise ParameterError("curve key must differ from the sweep axis")
            cvals = tuple(float(v) for v in self.curve_values)
            if not cvals:
                raise ParameterError("curve values must be non-empty when curve key set")
            object.__setattr__(self, "curve_values", cvals)


def sweep_spec_from_dict(raw: dict, curves: "dict | None" = None) -> SweepSpec:
    if not isinstance(raw, dict) or "axis" not in raw or "values" not in raw:
        raise ParameterError("sweep section must provide 'axis' and 'values'")
    curve_key = None
    curve_values = ()
    if curves:
        if "key" not in curves or "values" not in curves:
            raise ParameterError("curves section must provide 'key' and 'values'")
        curve_key = curves["key"]
        curve_values = tuple(curves["values"])
    return SweepSpec(
        axis=raw["axis"],
        values=tuple(raw["values"]),
        curve_key=curve_key,
        curve_values=curve_values,
    )


_MODES = ("closed", "quadrature", "mc", "all")


def _check_mode(mode: str) -> None:
    if mode not in _MODES:
        raise ParameterError(f"mode must be one of {', '.join(_MODES)}, got {mode!r}")


def _assignments(base: dict, spec: SweepSpec):
    """Yield (curve_id, axis_value, scenario_dict) in deterministic order."""
    families = (
        [(None, None)]
        if spec.curve_key is None
        else [(spec.curve_key, v) for v in spec.curve_values]
    )
    for key, cval in families:
        curve_id = spec.axis if key is None else f"{key}={cval:g}"
        for axis_value in spec.values:
            d = dict(base)
            if key is not None:
                d[key] = cval
            d[spec.axis] = axis_value
            yield curve_id, axis_value, d


def _fmt(x: "float | None") -> str:
    return "" if x is None else repr(float(x))


def _row(axis_value, curve_id, closed=None, quad=None, mc_mean=None, mc_stderr=None):
    return {
        "axis_value": _fmt(axis_value),
        "curve_id": curve_id,
        "closed_form": _fmt(closed),
        "quadrature": _fmt(quad),
        "mc_mean": _fmt(mc_mean),
        "mc_stderr": _fmt(mc_stderr),
    }


def _map_points(fn, points, workers: int) -> list:
    if workers <= 1 or len(points) <= 1:
        return [fn(p) for p in points]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, points))


def run_asc_sweep(
    base: dict,
    spec: SweepSpec,
    mode: str = "closed",
    mc: "MCConfig | None" = None,
    workers: int = 1,
    bits: bool = False,
) -> "list[dict]":
    """Average-secrecy-capacity sweep; one row per (curve, axis value).

    mode selects which columns are filled: closed form, quadrature
    oracle, Monte-Carlo estimate, or all three. Rates are nats unless
    bits is set.
    """
    _check_mode(mode)
    if mode in ("mc", "all") and mc is None:
        raise ParameterError("mc mode requires an MCConfig")
    unit = 1.0 / math.log(2.0) if bits else 1.0
    points = list(_assignments(base, spec))

    def one(point):
        curve_id, axis_value, d = point
        sc = scenario_from_dict(d)
        bounds = sc.bounds()
        closed = quad = mean = err = None
        if mode in ("closed", "all"):
            closed = unit * asc_closed_form(sc.ctx, bounds, sc.order)
        if mode in ("quadrature", "all"):
            quad = unit * asc_quadrature(sc.ctx, bounds, sc.order)
        if mode in ("mc", "all"):
            est = estimate_asc(sc.ctx, sc.params, sc.geom, mc)
            mean, err = unit * est.mean, unit * est.std_error
        return _row(axis_value, curve_id, closed, quad, mean, err)

    return _map_points(one, points, workers)


def run_sop_sweep(
    base: dict,
    spec: SweepSpec,
    mode: str = "closed",
    mc: "MCConfig | None" = None,
    workers: int = 1,
) -> "list[dict]":
    """Secrecy-outage sweep; lower-bound rows plus MC exact-event rows.

    The closed_form and quadrature columns hold the lower bound; in mc
    or all mode each curve gains a companion "<curve>|exact" row family
    with the exact-event Monte-Carlo estimate in the mc columns.
    """
    _check_mode(mode)
    if mode in ("mc", "all") and mc is None:
        raise ParameterError("mc mode requires an MCConfig")
    points = list(_assignments(base, spec))

    def one(point):
        curve_id, axis_value, d = point
        sc = scenario_from_dict(d)
        if sc.outage_threshold is None:
            raise ParameterError("missing scenario keys: outage_threshold")
        bounds = sc.bounds()
        gamma = sc.outage_threshold
        closed = quad = None
        rows = []
        if mode in ("closed", "all"):
            closed = sop_lower_bound_closed_form(sc.ctx, bounds, gamma, sc.order)
        if mode in ("quadrature", "all"):
            quad = sop_quadrature(sc.ctx, bounds, gamma, sc.order)
        if mode in ("mc", "all"):
            exact, lower = estimate_sop(sc.ctx, sc.params, sc.geom, gamma, mc)
            rows.append(
                _row(axis_value, curve_id, closed, quad, lower.mean, lower.std_error)
            )
            rows.append(
                _row(
                    axis_value,
                    f"{curve_id}|exact",
                    None,
                    None,
                    exact.mean,
                    exact.std_error,
                )
            )
        else:
            rows.append(_row(axis_value, curve_id, closed, quad))
        return rows

    nested = _map_points(one, points, workers)
    flat = [r for rs in nested for r in rs]
    # group the exact-event companion curves after their lower-bound curves
    flat.sort(key=lambda r: r["curve_id"].endswith("|exact"))
    return flat


_PDF_KINDS = ("gain_bob", "gain_eve", "j_bob", "j_eve")


def run_pdf_dump(base: dict, which: str, n_points: int = 2001) -> "list[dict]":
    """Density samples of a gain or effective-SNR variable over its support.

    Emits n_points rows on a uniform grid whose first and last abscissas
    are exactly the support endpoints.
    """
    if which not in _PDF_KINDS:
        raise ParameterError(f"which must be one of {', '.join(_PDF_KINDS)}, got {which!r}")
    if n_points < 2:
        raise ParameterError(f"n_points must be >= 2, got {n_points}")
    sc = scenario_from_dict(base)
    bounds = sc.bounds()
    if which == "gain_bob":
        lo, hi = bounds.gain_min, bounds.gain_max
        f = lambda x: pdf_gain_bob(x, bounds, sc.order)
    elif which == "gain_eve":
        lo, hi = bounds.gain_min, bounds.gain_eve_max
        f = lambda x: pdf_gain_eve(x, bounds, sc.order)
    elif which == "j_bob":
        jb = j_bounds(sc.ctx, bounds)
        lo, hi = jb.bob_min, jb.bob_max
        f = lambda x: pdf_j_bob(x, sc.ctx, bounds, sc.order)
    else:
        jb = j_bounds(sc.ctx, bounds)
        lo, hi = jb.eve_min, jb.eve_max
        f = lambda x: pdf_j_eve(x, sc.ctx, bounds, sc.order)
    grid = np.linspace(lo, hi, n_points)
    dens = f(grid)
    return [
        {"value": repr(float(x)), "density": repr(float(y)), "curve_id": which}
        for x, y in zip(grid, dens)
    ]


def write_csv(rows: "list[dict]", path: str, columns: "tuple[str, ...]" = SWEEP_COLUMNS) -> None:
    """Write rows (already string-valued) under the fixed column schema."""
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=list(columns))
        writer.writeheader()
        writer.writerows(rows)
