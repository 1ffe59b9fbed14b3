"""Random receiver placement on a disc with a protected inner zone.

The source sits at height `height` above the centre of a disc of radius
`radius`. Legitimate receivers are uniformly distributed over the whole
disc; eavesdroppers are uniformly distributed over the annulus between
`protected_radius` and `radius` (the disc of radius `protected_radius`
is swept clean of eavesdroppers).

Uniform placement over an area gives linear radial densities:

    bob:  f(r) = 2 r / radius^2                          on [0, radius]
    eve:  f(r) = 2 r / (radius^2 - protected_radius^2)   on [protected_radius, radius]

and the matching inverse-CDF samplers

    bob:  r = radius * sqrt(u)
    eve:  r = sqrt(protected_radius^2 + (radius^2 - protected_radius^2) * u)

for u uniform on [0, 1).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ParameterError

__all__ = [
    "DeploymentGeometry",
    "pdf_radius_bob",
    "pdf_radius_eve",
    "cdf_radius_bob",
    "cdf_radius_eve",
    "sample_radius_bob",
    "sample_radius_eve",
]


@dataclass(frozen=True)
class DeploymentGeometry:
    """Disc deployment region with an eavesdropper exclusion zone.

    Attributes:
        radius: outer radius of the deployment disc, metres.
        protected_radius: radius of the eavesdropper-free inner disc,
            metres. Zero disables the protected zone.
        height: vertical distance from source plane to receiver plane,
            metres.
    """

    radius: float
    protected_radius: float
    height: float

    def __post_init__(self) -> None:
        if not (np.isfinite(self.radius) and self.radius > 0.0):
            raise ParameterError(f"radius must be positive, got {self.radius}")
        if not (np.isfinite(self.height) and self.height > 0.0):
            raise ParameterError(f"height must be positive, got {self.height}")
        if not np.isfinite(self.protected_radius) or not (
            0.0 <= self.protected_radius < self.radius
        ):
            raise ParameterError(
                "protected_radius must satisfy 0 <= protected_radius < radius, "
                f"got {self.protected_radius} (radius {self.radius})"
            )


def _as_checked_array(x, name: str) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ParameterError(f"{name} must be finite")
    return arr


def _scalar_like(value: np.ndarray, template) -> "np.ndarray | float":
    if np.isscalar(template) or getattr(template, "ndim", 1) == 0:
        return float(value)
    return value


def pdf_radius_bob(r, geom: DeploymentGeometry):
    """Radial density of a uniformly placed legitimate receiver.

    Returns 2 r / radius^2 inside [0, radius] and 0.0 outside. Accepts
    scalars or arrays.
    """
    rr = _as_checked_array(r, "r")
    inside = (rr >= 0.0) & (rr <= geom.radius)
    out = np.where(inside, 2.0 * rr / geom.radius**2, 0.0)
    return _scalar_like(out, r)


def pdf_radius_eve(r, geom: DeploymentGeometry):
    """Radial density of a uniformly placed eavesdropper.

    Returns 2 r / (radius^2 - protected_radius^2) on
    [protected_radius, radius] and 0.0 outside.
    """
    rr = _as_checked_array(r, "r")
    span = geom.radius**2 - geom.protected_radius**2
    inside = (rr >= geom.protected_radius) & (rr <= geom.radius)
    out = np.where(inside, 2.0 * rr / span, 0.0)
    return _scalar_like(out, r)


def cdf_radius_bob(r, geom: DeploymentGeometry):
    """P(R <= r) for the legitimate receiver radius; clamped outside support."""
    rr = _as_checked_array(r, "r")
    out = np.clip(rr, 0.0, geom.radius) ** 2 / geom.radius**2
    return _scalar_like(out, r)


def cdf_radius_eve(r, geom: DeploymentGeometry):
    """P(R <= r) for the eavesdropper radius; clamped outside support."""
    rr = _as_checked_array(r, "r")
    span = geom.radius**2 - geom.protected_radius**2
    clipped = np.clip(rr, geom.protected_radius, geom.radius)
    out = (clipped**2 - geom.protected_radius**2) / span
    return _scalar_like(out, r)


def _check_uniform(u) -> np.ndarray:
    uu = _as_checked_array(u, "u")
    if np.any(uu < 0.0) or np.any(uu >= 1.0):
        raise ParameterError("u must lie in [0, 1)")
    return uu


def sample_radius_bob(u, geom: DeploymentGeometry):
    """Inverse-CDF transform of uniform variates to legitimate-receiver radii."""
    uu = _check_uniform(u)
    out = geom.radius * np.sqrt(uu)
    return _scalar_like(out, u)


def sample_radius_eve(u, geom: DeploymentGeometry):
    """Inverse-CDF transform of uniform variates to eavesdropper radii."""
    uu = _check_uniform(u)
    span = geom.radius**2 - geom.protected_radius**2
    out = np.sqrt(geom.protected_radius**2 + span * uu)
    return _scalar_like(out, u)
