"""Special-function kernel used by the closed-form ergodic-secrecy integrals.

Everything here revolves around one auxiliary integral. For a > 1/2,
0 < b <= c, d >= 0 and noise/drive constants taken from a LambdaContext,

    lambda_fn(a, b, c, d) = integral over x in [b, c] of
        x^(-1/a - 1) * [ log(2 pi s2b s2e) + log(1 + d xi^2 P^2 x^2) ] dx.

The log-free part integrates in closed form to
a (b^(-1/a) - c^(-1/a)) log(2 pi s2b s2e). The remaining piece reduces,
through the substitution z = d xi^2 P^2 x^2, to the one-parameter special
function

    G(z; a) = z^beta * integral over t in (0, z] of t^(-beta-1) log(1+t) dt,
    beta    = 1 / (2 a),

which equals the Meijer G^{1,3}_{3,3} function with upper parameters
(1, 1, 1 + beta) and lower parameters (1, beta, 0). meijer_g_1333
evaluates it by numerical Mellin-Barnes contour quadrature:

    G(z) = (1/pi) * integral over t in [0, inf) of Re F(c0 + i t) dt
           (+ extracted residues when the contour is shifted right),

    F(s) = Gamma(1-s) Gamma(s)^2 Gamma(s-beta)
           / (Gamma(1-beta+s) Gamma(1+s)) * z^s,

with the vertical line Re s = c0 placed strictly between the left pole
ladders (s = beta - k and s = -k) and the right ladder (s = 1, 2, ...).
The integrand decays like |t|^(-2) exp(-pi |t|), so a modest truncation
window suffices; the window is chosen adaptively from the tail magnitude
and panel counts are doubled until the quadrature stabilizes. For small z
the contour is shifted right past s = 1 and s = 2 (adding the residues
z/(1-beta) and -z^2/(2(2-beta))), which keeps the relative error of the
tiny result from being swamped by the oscillatory cancellation on the
line.

lambda_oracle evaluates the same defining integral by direct adaptive
quadrature in log-x coordinates. It shares no code with the contour path
and serves as the independent cross-check for lambda_fn.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy import integrate
from scipy.special import loggamma

from .errors import ConsistencyError, NumericError, ParameterError

__all__ = ["LambdaContext", "meijer_g_1333", "lambda_fn", "lambda_oracle"]

# Sign of the log(1 + d xi^2 P^2 x^2) term inside the defining integrand.
# Pinned by the regression test that matches the assembled closed-form
# average secrecy capacity against direct two-dimensional quadrature.
LOG_TERM_SIGN = 1.0

# 32-point Gauss-Legendre rule reused across panels.
_GL_NODES, _GL_WEIGHTS = leggauss(32)

# Contour quadrature controls.
_TAIL_START = 18.0  # initial truncation window for |Im s|
_TAIL_STEP = 8.0
_TAIL_MAX = 66.0
_MAX_REFINEMENTS = 6
_REL_TARGET = 1e-12
_POLE_CLEARANCE = 0.05


@dataclass(frozen=True)
class LambdaContext:
    """Drive and noise constants entering the auxiliary integral.

    Attributes:
        dimming: dimming factor xi in (0, 1].
        intensity: nominal optical intensity P, linear scale.
        noise_var_bob: legitimate receiver noise variance.
        noise_var_eve: eavesdropper noise variance.
    """

    dimming: float
    intensity: float
    noise_var_bob: float
    noise_var_eve: float

    def __post_init__(self) -> None:
        if not (np.isfinite(self.dimming) and 0.0 < self.dimming <= 1.0):
            raise ParameterError(f"dimming must lie in (0, 1], got {self.dimming}")
        for name in ("intensity", "noise_var_bob", "noise_var_eve"):
            v = getattr(self, name)
            if not (np.isfinite(v) and v > 0.0):
                raise ParameterError(f"{name} must be positive, got {v}")

    @property
    def drive(self) -> float:
        """xi^2 P^2, the squared modulated drive amplitude."""
        return self.dimming**2 * self.intensity**2

    @property
    def log_noise_product(self) -> float:
        """log(2 pi s2b s2e)."""
        return math.log(2.0 * math.pi * self.noise_var_bob * self.noise_var_eve)


def _contour_plan(z: float, beta: float) -> "tuple[float, int]":
    """Pick the vertical line Re s = c0 and the number of extracted residues.

    Small z: shift right past the poles at s = 1, 2 so the line integral
    scales like z^2.5 (far below the z-scale result). Large z: hug the
    s = beta pole so the z^c0 integrand scale stays close to the z^beta
    result scale.
    """
    if z < 0.875:
        return 2.5, 2
    if z <= 8.0:
        return 0.5 * (1.0 + beta), 0
    return beta + 0.125, 0


def _check_pole_separation(c0: float, beta: float, n_residues: int) -> None:
    # Poles of the integrand numerator: s = 1, 2, 3, ... (right ladder),
    # s = 0, -1, ... and s = beta, beta - 1, ... (left ladders). The line
    # must not sit on any of them, and apart from the explicitly extracted
    # right-ladder poles everything must stay on its proper side.
    nearest_int = round(c0)
    dist_int = abs(c0 - nearest_int)
    dist_beta = min(abs(c0 - beta), abs(c0 - (beta - 1.0)))
    if min(dist_int, dist_beta) < _POLE_CLEARANCE:
        raise ConsistencyError(
            f"contour Re s = {c0} is within {_POLE_CLEARANCE} of an integrand pole"
        )
    if not (beta < c0 < n_residues + 1.0):
        raise ConsistencyError(
            f"contour Re s = {c0} does not separate the pole ladders "
            f"(beta = {beta}, extracted residues = {n_residues})"
        )


def _line_integrand(t: np.ndarray, c0: float, beta: float, log_z: float) -> np.ndarray:
    s = c0 + 1j * t
    lg = (
        loggamma(1.0 - s)
        + 2.0 * loggamma(s)
        + loggamma(s - beta)
        - loggamma(1.0 - beta + s)
        - loggamma(1.0 + s)
        + s * log_z
    )
    return np.exp(lg).real


def meijer_g_1333(z: float, a: float) -> float:
    """G(z; a) = z^(1/2a) * integral_0^z t^(-1/(2a) - 1) log(1 + t) dt.

    Evaluated by Mellin-Barnes contour quadrature as described in the
    module docstring. Nonnegative, increasing in z, G -> 0 as z -> 0+.

    Args:
        z: positive argument (drive * squared gain in the callers).
        a: power-law exponent parameter, a > 1/2.

    Raises:
        ParameterError: z or a outside the domain.
        NumericError: the panel refinement failed to stabilize.
    """
    if not (np.isfinite(z) and z > 0.0):
        raise ParameterError(f"z must be positive and finite, got {z}")
    if not (np.isfinite(a) and a > 0.5):
        raise ParameterError(f"a must exceed 1/2, got {a}")

    beta = 1.0 / (2.0 * a)
    log_z = math.log(z)
    c0, n_residues = _contour_plan(z, beta)
    _check_pole_separation(c0, beta, n_residues)

    residue_sum = 0.0
    for k in range(1, n_residues + 1):
        residue_sum += (-1.0) ** (k + 1) * z**k / (k * (k - beta))

    # Truncation window from the exp(-pi t) envelope of the integrand.
    scale = abs(_line_integrand(np.array([0.0]), c0, beta, log_z)[0]) + 1e-300
    tail = _TAIL_START
    while tail < _TAIL_MAX:
        edge = abs(_line_integrand(np.array([tail]), c0, beta, log_z)[0])
        if edge <= 1e-18 * scale:
            break
        tail += _TAIL_STEP

    def panels(width: float) -> float:
        edges = np.arange(0.0, tail + width, width)
        pieces = []
        for lo, hi in zip(edges[:-1], edges[1:]):
            mid, half = 0.5 * (lo + hi), 0.5 * (hi - lo)
            vals = _line_integrand(mid + half * _GL_NODES, c0, beta, log_z)
            pieces.append(half * float(np.dot(_GL_WEIGHTS, vals)))
        return math.fsum(pieces)

    width = min(0.5, 6.0 / max(1.0, abs(log_z)))
    prev = panels(width)
    for _ in range(_MAX_REFINEMENTS):
        width *= 0.5
        cur = panels(width)
        line_val = cur / math.pi
        total = residue_sum + line_val
        if abs(cur - prev) <= _REL_TARGET * max(abs(cur), math.pi * abs(total), 1e-300):
            return total
        prev = cur
    raise NumericError(
        "Mellin-Barnes quadrature did not stabilize: "
        f"z={z}, a={a}, contour={c0}, window={tail}, last delta={abs(cur - prev)}"
    )


def _validate_lambda_args(a: float, b: float, c: float, d: float) -> None:
    if not (np.isfinite(a) and a > 0.5):
        raise ParameterError(f"a must exceed 1/2, got {a}")
    if not (np.isfinite(b) and np.isfinite(c) and 0.0 < b <= c):
        raise ParameterError(f"interval must satisfy 0 < b <= c, got [{b}, {c}]")
    if not (np.isfinite(d) and d >= 0.0):
        raise ParameterError(f"d must be nonnegative, got {d}")


def lambda_fn(a: float, b: float, c: float, d: float, ctx: LambdaContext) -> float:
    """Closed form of the auxiliary integral (see module docstring).

    a (b^(-1/a) - c^(-1/a)) log(2 pi s2b s2e)
      + (1/2) c^(-1/a) G(d xi^2 P^2 c^2; a)
      - (1/2) b^(-1/a) G(d xi^2 P^2 b^2; a)

    Degenerate intervals (b == c) return exactly 0.0.
    """
    _validate_lambda_args(a, b, c, d)
    if b == c:
        return 0.0
    inv = -1.0 / a
    log_part = a * (b**inv - c**inv) * ctx.log_noise_product
    k = d * ctx.drive
    if k == 0.0:
        return log_part
    return (
        log_part
        + 0.5 * c**inv * meijer_g_1333(k * c**2, a)
        - 0.5 * b**inv * meijer_g_1333(k * b**2, a)
    )


def lambda_oracle(a: float, b: float, c: float, d: float, ctx: LambdaContext) -> float:
    """Direct adaptive quadrature of the defining integral of lambda_fn.

    Integrates in u = log x coordinates (the power-law integrand spans
    many decades in x but is mild in u). Independent of the contour path;
    used to cross-check lambda_fn.

    Raises:
        NumericError: quadrature error estimate beyond the accepted budget.
    """
    _validate_lambda_args(a, b, c, d)
    if b == c:
        return 0.0
    log_noise = ctx.log_noise_product
    k = d * ctx.drive

    def integrand(u: float) -> float:
        return math.exp(-u / a) * (
            log_noise + LOG_TERM_SIGN * math.log1p(k * math.exp(2.0 * u))
        )

    val, err = integrate.quad(
        integrand, math.log(b), math.log(c), epsabs=1e-12, epsrel=1e-12, limit=400
    )
    if err > max(1e-10, 1e-9 * abs(val)):
        raise NumericError(
            f"lambda_oracle quadrature error {err} too large for value {val} "
            f"(a={a}, b={b}, c={c}, d={d})"
        )
    return val
