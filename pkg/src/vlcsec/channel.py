"""Line-of-sight Lambertian channel gain and its induced distributions.

A generalized-Lambertian source of order n illuminates a receiver at
horizontal offset r and vertical drop `height`. With detector area `area`,
optical filter gain `filter_gain` and concentrator gain `concentrator_gain`,
the DC channel gain is

    H(r) = C * (r^2 + height^2)^(-(n + 3) / 2),
    C    = (n + 1) * area * filter_gain * concentrator_gain
           * height^(n + 1) / (2 pi).

H(r) decreases in r, so uniform placement on a disc pushes forward to a
power-law gain density. Writing w = 2 / (n + 3):

    bob: f(h) = norm_bob * h^(-w - 1)   on [gain_min, gain_max]
    eve: f(h) = norm_eve * h^(-w - 1)   on [gain_min, gain_eve_max]

    norm_bob = w * C^w / radius^2
    norm_eve = w * C^w / (radius^2 - protected_radius^2)

where gain_min = H(radius), gain_eve_max = H(protected_radius) and
gain_max = H(0).

Imperfect channel knowledge is modelled multiplicatively in dB: the
estimate of a gain h with error budget eta dB is h * 10^(eta / 10).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ParameterError
from .geometry import DeploymentGeometry, _as_checked_array, _scalar_like

__all__ = [
    "LambertianParams",
    "ChannelBounds",
    "channel_gain",
    "compute_bounds",
    "pdf_gain_bob",
    "pdf_gain_eve",
    "cdf_gain_bob",
    "cdf_gain_eve",
    "apply_csi_uncertainty",
]


@dataclass(frozen=True)
class LambertianParams:
    """Source and receiver front-end parameters.

    Attributes:
        order: Lambertian order of the source beam pattern (>= 1).
        area: physical detector area in square metres.
        filter_gain: optical filter gain (dimensionless).
        concentrator_gain: optical concentrator gain (dimensionless).
        fov_semiangle: optional receiver field-of-view semi-angle in
            radians. When set, geometries whose worst-case incidence
            angle exceeds it are rejected by compute_bounds.
    """

    order: float
    area: float
    filter_gain: float = 1.0
    concentrator_gain: float = 1.0
    fov_semiangle: "float | None" = None

    def __post_init__(self) -> None:
        if not (np.isfinite(self.order) and self.order >= 1.0):
            raise ParameterError(f"order must be >= 1, got {self.order}")
        for name in ("area", "filter_gain", "concentrator_gain"):
            v = getattr(self, name)
            if not (np.isfinite(v) and v > 0.0):
                raise ParameterError(f"{name} must be positive, got {v}")
        if self.fov_semiangle is not None:
            if not (0.0 < self.fov_semiangle <= math.pi / 2):
                raise ParameterError(
                    f"fov_semiangle must lie in (0, pi/2], got {self.fov_semiangle}"
                )


@dataclass(frozen=True)
class ChannelBounds:
    """Support endpoints and normalization constants of the gain densities.

    gain_min is the cell-edge gain, gain_eve_max the gain at the protected
    zone boundary (the strongest gain an eavesdropper can see) and gain_max
    the gain directly below the source. norm_bob and norm_eve are the
    power-law density prefactors for the legitimate receiver and the
    eavesdropper.
    """

    gain_min: float
    gain_eve_max: float
    gain_max: float
    norm_bob: float
    norm_eve: float

    def __post_init__(self) -> None:
        if not (0.0 < self.gain_min <= self.gain_eve_max <= self.gain_max):
            raise ParameterError(
                "bounds must satisfy 0 < gain_min <= gain_eve_max <= gain_max, got "
                f"({self.gain_min}, {self.gain_eve_max}, {self.gain_max})"
            )
        if not (0.0 < self.norm_bob <= self.norm_eve):
            raise ParameterError(
                "normalizations must satisfy 0 < norm_bob <= norm_eve, got "
                f"({self.norm_bob}, {self.norm_eve})"
            )


def gain_prefactor(params: LambertianParams, geom: DeploymentGeometry) -> float:
    """The constant C in H(r) = C (r^2 + height^2)^(-(order + 3)/2)."""
    n = params.order
    return (
        (n + 1.0)
        * params.area
        * params.filter_gain
        * params.concentrator_gain
        * geom.height ** (n + 1.0)
        / (2.0 * math.pi)
    )


def channel_gain(r, params: LambertianParams, geom: DeploymentGeometry):
    """DC gain of the line-of-sight Lambertian link at horizontal offset r.

    Accepts scalar or array offsets; offsets must be finite and
    nonnegative.
    """
    rr = _as_checked_array(r, "r")
    if np.any(rr < 0.0):
        raise ParameterError("r must be nonnegative")
    c = gain_prefactor(params, geom)
    out = c * (rr**2 + geom.height**2) ** (-(params.order + 3.0) / 2.0)
    return _scalar_like(out, r)


def max_incidence_angle(geom: DeploymentGeometry) -> float:
    """Worst-case incidence angle at the receiver, attained at the cell edge."""
    return math.acos(geom.height / math.hypot(geom.radius, geom.height))


def compute_bounds(params: LambertianParams, geom: DeploymentGeometry) -> ChannelBounds:
    """Gain support endpoints and density normalizations for a scenario.

    Raises:
        ParameterError: if a field-of-view semi-angle is configured and the
            cell-edge incidence angle exceeds it (receivers at the edge
            would fall outside the detector's field of view, so the pure
            line-of-sight model would not apply).
    """
    if params.fov_semiangle is not None:
        worst = max_incidence_angle(geom)
        if worst > params.fov_semiangle:
            raise ParameterError(
                f"cell-edge incidence angle {worst:.6f} rad exceeds the "
                f"field-of-view semi-angle {params.fov_semiangle:.6f} rad"
            )
    w = 2.0 / (params.order + 3.0)
    c = gain_prefactor(params, geom)
    span = geom.radius**2 - geom.protected_radius**2
    return ChannelBounds(
        gain_min=float(channel_gain(geom.radius, params, geom)),
        gain_eve_max=float(channel_gain(geom.protected_radius, params, geom)),
        gain_max=float(channel_gain(0.0, params, geom)),
        norm_bob=w * c**w / geom.radius**2,
        norm_eve=w * c**w / span,
    )


def _pdf_gain(h, lo: float, hi: float, norm: float, order: float, template):
    hh = _as_checked_array(h, "h")
    if np.any(hh <= 0.0):
        raise ParameterError("h must be positive")
    w = 2.0 / (order + 3.0)
    inside = (hh >= lo) & (hh <= hi)
    # density evaluated lazily to avoid overflow warnings outside support
    out = np.where(inside, norm * np.where(inside, hh, 1.0) ** (-w - 1.0), 0.0)
    return _scalar_like(out, template)


def pdf_gain_bob(h, bounds: ChannelBounds, order: float):
    """Density of the legitimate receiver's gain; 0.0 outside the support."""
    return _pdf_gain(h, bounds.gain_min, bounds.gain_max, bounds.norm_bob, order, h)


def pdf_gain_eve(h, bounds: ChannelBounds, order: float):
    """Density of the eavesdropper's gain; 0.0 outside the support."""
    return _pdf_gain(h, bounds.gain_min, bounds.gain_eve_max, bounds.norm_eve, order, h)


def _cdf_gain(h, lo: float, hi: float, norm: float, order: float, template):
    hh = _as_checked_array(h, "h")
    if np.any(hh <= 0.0):
        raise ParameterError("h must be positive")
    w = 2.0 / (order + 3.0)
    clipped = np.clip(hh, lo, hi)
    out = norm / w * (lo ** (-w) - clipped ** (-w))
    return _scalar_like(out, template)


def cdf_gain_bob(h, bounds: ChannelBounds, order: float):
    """P(H <= h) for the legitimate receiver's gain; clamped outside support."""
    return _cdf_gain(h, bounds.gain_min, bounds.gain_max, bounds.norm_bob, order, h)


def cdf_gain_eve(h, bounds: ChannelBounds, order: float):
    """P(H <= h) for the eavesdropper's gain; clamped outside support."""
    return _cdf_gain(h, bounds.gain_min, bounds.gain_eve_max, bounds.norm_eve, order, h)


def apply_csi_uncertainty(h, eta_db: float, bound_db: "float | None" = None):
    """Deterministic channel-estimate scaling: h * 10^(eta_db / 10).

    Args:
        h: true gain (scalar or array, positive).
        eta_db: estimation error in dB.
        bound_db: optional symmetric bound; |eta_db| > bound_db is rejected.
    """
    hh = _as_checked_array(h, "h")
    if np.any(hh <= 0.0):
        raise ParameterError("h must be positive")
    if not np.isfinite(eta_db):
        raise ParameterError("eta_db must be finite")
    if bound_db is not None and abs(eta_db) > bound_db:
        raise ParameterError(
            f"|eta_db| = {abs(eta_db)} exceeds the configured bound {bound_db}"
        )
    out = hh * 10.0 ** (eta_db / 10.0)
    return _scalar_like(out, h)
