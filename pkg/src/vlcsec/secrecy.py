"""Average secrecy capacity and secrecy-outage bounds for the random link.

The transmitter sends an intensity signal with drive amplitude xi * P on
top of the DC bias. Receiver noise is Gaussian. With entropy-power
reasoning on the amplitude-constrained optical channel, the instantaneous
secrecy capacity given gains (h_b, h_e) and deterministic dB-bounded
channel-estimate errors (eta_b, eta_e) is

    Cs(h_b, h_e) = max part if  chi * h_b >= h_e  else 0,

    max part = (1/2) log( s2e / (2 pi s2b)
                 * (e xi^2 P^2 10^(eta_b/5) h_b^2 + 2 pi s2b)
                 / (10^(eta_e/5) xi^2 P^2 h_e^2 + s2e) )

where chi = 10^((eta_b - eta_e)/10) sqrt(e s2e / (2 pi s2b)) is the
gain-ratio threshold at which the max part crosses zero. Averaging Cs
over the power-law gain densities of a uniformly deployed pair splits
into five regimes according to where chi falls relative to the support
ratios; each regime reduces to a short combination of lambda_fn terms.

For outage, define the effective SNR-like variables

    J_b = e  10^(eta_b/5) xi^2 P^2 h_b^2 / (2 pi s2b)
    J_e =    10^(eta_e/5) xi^2 P^2 h_e^2 / s2e.

The secrecy outage probability against threshold gamma >= 1 is
P(J_b <= (1 + J_e) gamma - 1); dropping the additive terms yields the
closed-form lower bound P(J_b <= gamma J_e), which again splits into
five regimes in gamma. Both the averaged capacity and the outage bound
are validated against direct nested quadrature of their defining
integrals (asc_quadrature, sop_quadrature), which share no algebra with
the closed forms.

Rates are returned in nats; divide by log(2) for bits.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .channel import ChannelBounds, pdf_gain_bob, pdf_gain_eve
from .errors import ConsistencyError, NumericError, ParameterError
from .geometry import _as_checked_array, _scalar_like
from .specfun import LambdaContext, lambda_fn

__all__ = [
    "SecrecyContext",
    "JBounds",
    "AscRegime",
    "SopRegime",
    "gain_ratio_threshold",
    "instantaneous_sc",
    "asc_regime",
    "asc_closed_form",
    "asc_quadrature",
    "j_bounds",
    "pdf_j_bob",
    "pdf_j_eve",
    "sop_regime",
    "sop_lower_bound_closed_form",
    "sop_quadrature",
]

# Tiny negative closed-form results are rounding noise and clamped; anything
# beyond this margin indicates a transcription error and raises.
_NEGATIVE_TOL = 1e-9


@dataclass(frozen=True)
class SecrecyContext:
    """Signal, noise and channel-knowledge parameters of one scenario.

    Attributes:
        dimming: dimming factor xi in (0, 1].
        intensity: nominal optical intensity P, linear scale (convert dB
            drive levels with 10^(dB/10) before constructing the context).
        noise_var_bob: receiver noise variance at the legitimate receiver.
        noise_var_eve: receiver noise variance at the eavesdropper.
        csi_db_bob: channel-estimate error budget for the legitimate link,
            dB. Positive values mean the estimate overshoots the true gain.
        csi_db_eve: channel-estimate error budget for the eavesdropper
            link, dB.
        csi_db_bound: optional symmetric cap; |csi_db_*| above it is
            rejected at construction.
    """

    dimming: float
    intensity: float
    noise_var_bob: float = 1.0
    noise_var_eve: float = 1.0
    csi_db_bob: float = 0.0
    csi_db_eve: float = 0.0
    csi_db_bound: "float | None" = None

    def __post_init__(self) -> None:
        if not (np.isfinite(self.dimming) and 0.0 < self.dimming <= 1.0):
            raise ParameterError(f"dimming must lie in (0, 1], got {self.dimming}")
        for name in ("intensity", "noise_var_bob", "noise_var_eve"):
            v = getattr(self, name)
            if not (np.isfinite(v) and v > 0.0):
                raise ParameterError(f"{name} must be positive, got {v}")
        for name in ("csi_db_bob", "csi_db_eve"):
            v = getattr(self, name)
            if not np.isfinite(v):
                raise ParameterError(f"{name} must be finite, got {v}")
            if self.csi_db_bound is not None and abs(v) > self.csi_db_bound:
                raise ParameterError(
                    f"|{name}| = {abs(v)} exceeds csi_db_bound = {self.csi_db_bound}"
                )

    @property
    def drive(self) -> float:
        """xi^2 P^2."""
        return self.dimming**2 * self.intensity**2

    def lambda_context(self) -> LambdaContext:
        return LambdaContext(
            dimming=self.dimming,
            intensity=self.intensity,
            noise_var_bob=self.noise_var_bob,
            noise_var_eve=self.noise_var_eve,
        )


@dataclass(frozen=True)
class JBounds:
    """Support endpoints of the effective SNR variables J_b and J_e."""

    bob_min: float
    bob_max: float
    eve_min: float
    eve_max: float

    def __post_init__(self) -> None:
        if not (0.0 < self.bob_min < self.bob_max):
            raise ParameterError(
                f"need 0 < bob_min < bob_max, got ({self.bob_min}, {self.bob_max})"
            )
        if not (0.0 < self.eve_min <= self.eve_max):
            raise ParameterError(
                f"need 0 < eve_min <= eve_max, got ({self.eve_min}, {self.eve_max})"
            )


class AscRegime(enum.Enum):
    """Position of the gain-ratio threshold chi relative to the supports.

    With v1 = gain_min, v2 = gain_eve_max, v3 = gain_max the intervals are
    (half-open, lower edge included):

        ZERO  chi <  v1/v3          the secrecy event never occurs
        LOW   v1/v3 <= chi < v2/v3  only the strongest receiver gains help
        MID   v2/v3 <= chi < 1
        HIGH  1 <= chi < v2/v1
        FULL  chi >= v2/v1          the secrecy event always occurs
    """

    ZERO = "zero"
    LOW = "low"
    MID = "mid"
    HIGH = "high"
    FULL = "full"


class SopRegime(enum.Enum):
    """Position of the outage threshold gamma relative to the J supports.

    With t1 = chi^2 v1^2/v2^2, t2 = chi^2, t3 = chi^2 v3^2/v2^2 and
    t4 = chi^2 v3^2/v1^2 (v's as in AscRegime):

        ZERO  gamma <  t1         outage impossible, bound is exactly 0
        LOW   t1 <= gamma < t2
        MID   t2 <= gamma < t3
        HIGH  t3 <= gamma < t4
        ONE   gamma >= t4         outage certain, bound is exactly 1
    """

    ZERO = "zero"
    LOW = "low"
    MID = "mid"
    HIGH = "high"
    ONE = "one"


def gain_ratio_threshold(ctx: SecrecyContext) -> float:
    """Largest gain ratio h_e / h_b that still yields positive secrecy.

    Instantaneous secrecy capacity is positive exactly when
    threshold * h_b >= h_e. Equals sqrt(e s2e / (2 pi s2b)) scaled by the
    net channel-knowledge imbalance 10^((eta_b - eta_e)/10).
    """
    imbalance = 10.0 ** ((ctx.csi_db_bob - ctx.csi_db_eve) / 10.0)
    return imbalance * math.sqrt(
        math.e * ctx.noise_var_eve / (2.0 * math.pi * ctx.noise_var_bob)
    )


def _d_bob(ctx: SecrecyContext) -> float:
    return math.e * 10.0 ** (ctx.csi_db_bob / 5.0) / (2.0 * math.pi * ctx.noise_var_bob)


def _d_eve(ctx: SecrecyContext) -> float:
    return 10.0 ** (ctx.csi_db_eve / 5.0) / ctx.noise_var_eve


def instantaneous_sc(h_b, h_e, ctx: SecrecyContext):
    """Instantaneous secrecy capacity in nats for gains (h_b, h_e).

    Vectorized over numpy arrays; scalar in, scalar out. Returns 0 where
    the eavesdropper gain exceeds the positive-secrecy threshold and the
    nonnegative log-ratio rate elsewhere.
    """
    hb = _as_checked_array(h_b, "h_b")
    he = _as_checked_array(h_e, "h_e")
    if np.any(hb <= 0.0) or np.any(he <= 0.0):
        raise ParameterError("gains must be positive")
    drive = ctx.drive
    num = math.e * drive * 10.0 ** (ctx.csi_db_bob / 5.0) * hb**2 + (
        2.0 * math.pi * ctx.noise_var_bob
    )
    den = 10.0 ** (ctx.csi_db_eve / 5.0) * drive * he**2 + ctx.noise_var_eve
    rate = 0.5 * np.log(
        ctx.noise_var_eve / (2.0 * math.pi * ctx.noise_var_bob) * num / den
    )
    positive = gain_ratio_threshold(ctx) * hb >= he
    out = np.where(positive, np.maximum(rate, 0.0), 0.0)
    return _scalar_like(out, h_b if not np.isscalar(h_b) else h_e)


def asc_regime(ratio: float, bounds: ChannelBounds) -> AscRegime:
    """Classify the gain-ratio threshold into one of the five regimes."""
    if not (np.isfinite(ratio) and ratio > 0.0):
        raise ParameterError(f"ratio must be positive, got {ratio}")
    v1, v2, v3 = bounds.gain_min, bounds.gain_eve_max, bounds.gain_max
    if ratio < v1 / v3:
        return AscRegime.ZERO
    if ratio < v2 / v3:
        return AscRegime.LOW
    if ratio < 1.0:
        return AscRegime.MID
    if ratio < v2 / v1:
        return AscRegime.HIGH
    return AscRegime.FULL


def _asc_terms(
    ratio: float, bounds: ChannelBounds, order: float, d_b: float, d_e: float
):
    """Prefactor and lambda_fn term list for the current regime.

    Each term is (coefficient, a, b, c, d); the averaged capacity is
    prefactor * sum(coefficient * lambda_fn(a, b, c, d)). Derived by
    integrating the positive part of the instantaneous capacity against
    the two power-law gain densities over the region where the secrecy
    event holds, splitting at the support corners.
    """
    v1, v2, v3 = bounds.gain_min, bounds.gain_eve_max, bounds.gain_max
    n = order
    w = 2.0 / (n + 3.0)
    half = (n + 3.0) / 2.0
    quarter = (n + 3.0) / 4.0
    prefactor = (n + 3.0) * bounds.norm_bob * bounds.norm_eve / 4.0
    regime = asc_regime(ratio, bounds)

    if regime is AscRegime.ZERO:
        return prefactor, []
    if regime is AscRegime.LOW:
        terms = [
            (v1**-w, half, v1 / ratio, v3, d_b),
            (-(ratio**-w), quarter, v1 / ratio, v3, d_b),
            (-(ratio**w), quarter, v1, ratio * v3, d_e),
            (v3**-w, half, v1, ratio * v3, d_e),
        ]
    elif regime is AscRegime.MID:
        terms = [
            (v1**-w, half, v1 / ratio, v2 / ratio, d_b),
            (-(ratio**-w), quarter, v1 / ratio, v2 / ratio, d_b),
            (v1**-w - v2**-w, half, v2 / ratio, v3, d_b),
            (-(ratio**w), quarter, v1, v2, d_e),
            (v3**-w, half, v1, v2, d_e),
        ]
    elif regime is AscRegime.HIGH:
        terms = [
            (v1**-w, half, v1, v2 / ratio, d_b),
            (-(ratio**-w), quarter, v1, v2 / ratio, d_b),
            (-(v1**-w - (v2 / ratio) ** -w), half, v1, ratio * v1, d_e),
            (-(ratio**w), quarter, ratio * v1, v2, d_e),
            ((v2 / ratio) ** -w, half, ratio * v1, v2, d_e),
            (v1**-w - v2**-w, half, v2 / ratio, v3, d_b),
            (-((v2 / ratio) ** -w - v3**-w), half, v1, v2, d_e),
        ]
    else:  # FULL
        terms = [
            (v1**-w - v2**-w, half, v1, v3, d_b),
            (-(v1**-w - v3**-w), half, v1, v2, d_e),
        ]
    return prefactor, terms


def asc_closed_form(ctx: SecrecyContext, bounds: ChannelBounds, order: float) -> float:
    """Average secrecy capacity in nats, via the regime closed forms.

    Returns exactly 0.0 in the ZERO regime. Nonnegative by construction;
    a result below -1e-9 raises ConsistencyError (transcription bug),
    smaller negative rounding noise is clamped to 0.
    """
    ratio = gain_ratio_threshold(ctx)
    lam_ctx = ctx.lambda_context()
    prefactor, terms = _asc_terms(ratio, bounds, order, _d_bob(ctx), _d_eve(ctx))
    if not terms:
        return 0.0
    total = prefactor * math.fsum(
        coef * lambda_fn(a, b, c, d, lam_ctx) for coef, a, b, c, d in terms if b < c
    )
    if total < -_NEGATIVE_TOL:
        raise ConsistencyError(
            f"closed-form average secrecy capacity is negative: {total}"
        )
    return max(total, 0.0)


def _positive_part(h_b: float, h_e: float, ctx: SecrecyContext) -> float:
    drive = ctx.drive
    num = math.e * drive * 10.0 ** (ctx.csi_db_bob / 5.0) * h_b**2 + (
        2.0 * math.pi * ctx.noise_var_bob
    )
    den = 10.0 ** (ctx.csi_db_eve / 5.0) * drive * h_e**2 + ctx.noise_var_eve
    return 0.5 * math.log(
        ctx.noise_var_eve / (2.0 * math.pi * ctx.noise_var_bob) * num / den
    )


def asc_quadrature(ctx: SecrecyContext, bounds: ChannelBounds, order: float) -> float:
    """Average secrecy capacity by direct nested adaptive quadrature.

    Integrates the positive part of the instantaneous capacity against
    both gain densities over the region where the secrecy event holds.
    Independent of the lambda_fn closed forms; serves as their oracle.

    Raises:
        NumericError: combined quadrature error estimate above 1e-9.
    """
    ratio = gain_ratio_threshold(ctx)
    v1, v2, v3 = bounds.gain_min, bounds.gain_eve_max, bounds.gain_max
    regime = asc_regime(ratio, bounds)
    if regime is AscRegime.ZERO:
        return 0.0

    # Scalar closures over the same gain densities (constants read off one
    # evaluation of the public pdfs) keep the nested quadrature fast.
    expo = -1.0 - 2.0 / (order + 3.0)
    front_bob = pdf_gain_bob(v1, bounds, order) / v1**expo
    front_eve = pdf_gain_eve(v1, bounds, order) / v1**expo
    pdf_bob = lambda x: front_bob * x**expo
    pdf_eve = lambda y: front_eve * y**expo

    worst_inner = 0.0

    def inner(x: float, y_hi: float) -> float:
        nonlocal worst_inner
        f = lambda y: _positive_part(x, y, ctx) * pdf_eve(y)
        val, err = integrate.quad(
            f, v1, y_hi, epsabs=1e-13, epsrel=1e-12, limit=200
        )
        worst_inner = max(worst_inner, err)
        return val

    def outer(f, lo: float, hi: float) -> "tuple[float, float]":
        return integrate.quad(f, lo, hi, epsabs=1e-12, epsrel=1e-12, limit=200)

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        if regime is AscRegime.LOW:
            val, err = outer(
                lambda x: pdf_bob(x) * inner(x, ratio * x),
                v1 / ratio,
                v3,
            )
        elif regime in (AscRegime.MID, AscRegime.HIGH):
            # below the corner the eavesdropper truncation is active
            x_lo = v1 / ratio if regime is AscRegime.MID else v1
            val1, err1 = outer(
                lambda x: pdf_bob(x) * inner(x, ratio * x),
                x_lo,
                v2 / ratio,
            )
            val2, err2 = outer(
                lambda x: pdf_bob(x) * inner(x, v2),
                v2 / ratio,
                v3,
            )
            val, err = val1 + val2, err1 + err2
        else:  # FULL
            val, err = outer(
                lambda x: pdf_bob(x) * inner(x, v2), v1, v3
            )

    if err + worst_inner > 1e-9:
        raise NumericError(
            f"nested quadrature error estimate {err + worst_inner} exceeds 1e-9"
        )
    return val


def j_bounds(ctx: SecrecyContext, bounds: ChannelBounds) -> JBounds:
    """Support endpoints of the effective SNR variables."""
    drive = ctx.drive
    scale_b = math.e * 10.0 ** (ctx.csi_db_bob / 5.0) * drive / (
        2.0 * math.pi * ctx.noise_var_bob
    )
    scale_e = 10.0 ** (ctx.csi_db_eve / 5.0) * drive / ctx.noise_var_eve
    return JBounds(
        bob_min=scale_b * bounds.gain_min**2,
        bob_max=scale_b * bounds.gain_max**2,
        eve_min=scale_e * bounds.gain_min**2,
        eve_max=scale_e * bounds.gain_eve_max**2,
    )


def _pdf_j(j, lo: float, hi: float, front: float, order: float, template):
    jj = _as_checked_array(j, "j")
    if np.any(jj <= 0.0):
        raise ParameterError("j must be positive")
    b = 1.0 / (order + 3.0)
    inside = (jj >= lo) & (jj <= hi)
    out = np.where(inside, front * np.where(inside, jj, 1.0) ** (-b - 1.0), 0.0)
    return _scalar_like(out, template)


def pdf_j_bob(j, ctx: SecrecyContext, bounds: ChannelBounds, order: float):
    """Density of J_b (power law of exponent -1/(order+3) - 1 on its support)."""
    jb = j_bounds(ctx, bounds)
    scale = jb.bob_min / bounds.gain_min**2
    front = bounds.norm_bob / 2.0 * scale ** (1.0 / (order + 3.0))
    return _pdf_j(j, jb.bob_min, jb.bob_max, front, order, j)


def pdf_j_eve(j, ctx: SecrecyContext, bounds: ChannelBounds, order: float):
    """Density of J_e (power law of exponent -1/(order+3) - 1 on its support)."""
    jb = j_bounds(ctx, bounds)
    scale = jb.eve_min / bounds.gain_min**2
    front = bounds.norm_eve / 2.0 * scale ** (1.0 / (order + 3.0))
    return _pdf_j(j, jb.eve_min, jb.eve_max, front, order, j)


def _sop_thresholds(ratio: float, bounds: ChannelBounds) -> "tuple[float, ...]":
    v1, v2, v3 = bounds.gain_min, bounds.gain_eve_max, bounds.gain_max
    r2 = ratio * ratio
    return (r2 * v1**2 / v2**2, r2, r2 * v3**2 / v2**2, r2 * v3**2 / v1**2)


def sop_regime(
    outage_threshold: float, ratio: float, bounds: ChannelBounds
) -> SopRegime:
    """Classify the outage threshold into one of the five regimes."""
    if not (np.isfinite(outage_threshold) and outage_threshold >= 1.0):
        raise ParameterError(
            f"outage_threshold must be >= 1, got {outage_threshold}"
        )
    t1, t2, t3, t4 = _sop_thresholds(ratio, bounds)
    if outage_threshold < t1:
        return SopRegime.ZERO
    if outage_threshold < t2:
        return SopRegime.LOW
    if outage_threshold < t3:
        return SopRegime.MID
    if outage_threshold < t4:
        return SopRegime.HIGH
    return SopRegime.ONE


def sop_lower_bound_closed_form(
    ctx: SecrecyContext,
    bounds: ChannelBounds,
    outage_threshold: float,
    order: float,
) -> float:
    """Closed-form lower bound on the secrecy outage probability.

    Equals P(J_b <= gamma J_e) exactly. Returns exactly 0.0 and 1.0 in
    the outer regimes; values outside [-1e-9, 1 + 1e-9] raise
    ConsistencyError, rounding noise is clamped into [0, 1].
    """
    ratio = gain_ratio_threshold(ctx)
    regime = sop_regime(outage_threshold, ratio, bounds)
    if regime is SopRegime.ZERO:
        return 0.0
    if regime is SopRegime.ONE:
        return 1.0

    n = order
    b = 1.0 / (n + 3.0)
    jb = j_bounds(ctx, bounds)
    gamma = outage_threshold
    # psi collects both density fronts
    scale_b = jb.bob_min / bounds.gain_min**2
    scale_e = jb.eve_min / bounds.gain_min**2
    psi = bounds.norm_bob * bounds.norm_eve / 4.0 * (scale_b * scale_e) ** b
    m2 = (n + 3.0) ** 2

    if regime is SopRegime.LOW:
        lo_edge = (jb.bob_min / gamma) ** -b
        val = psi * m2 * (
            jb.bob_min**-b * (lo_edge - jb.eve_max**-b)
            - 0.5 * gamma**-b * (lo_edge**2 - jb.eve_max ** (-2 * b))
        )
    elif regime is SopRegime.MID:
        val = psi * m2 * (
            jb.bob_min**-b * (jb.eve_min**-b - jb.eve_max**-b)
            - 0.5 * gamma**-b * (jb.eve_min ** (-2 * b) - jb.eve_max ** (-2 * b))
        )
    else:  # HIGH
        hi_edge = (jb.bob_max / gamma) ** -b
        val = psi * m2 * (
            jb.bob_min**-b * (jb.eve_min**-b - hi_edge)
            - 0.5 * gamma**-b * (jb.eve_min ** (-2 * b) - hi_edge**2)
            + (jb.bob_min**-b - jb.bob_max**-b) * (hi_edge - jb.eve_max**-b)
        )

    if val < -_NEGATIVE_TOL or val > 1.0 + _NEGATIVE_TOL:
        raise ConsistencyError(
            f"closed-form outage bound {val} lies outside [0, 1]"
        )
    return min(max(val, 0.0), 1.0)


def sop_quadrature(
    ctx: SecrecyContext,
    bounds: ChannelBounds,
    outage_threshold: float,
    order: float,
) -> float:
    """Outage lower bound P(J_b <= gamma J_e) by direct nested quadrature.

    Integrates the J_e density against the numerically integrated J_b
    distribution function over the regime-appropriate range. Independent
    of the closed forms.
    """
    ratio = gain_ratio_threshold(ctx)
    regime = sop_regime(outage_threshold, ratio, bounds)
    if regime is SopRegime.ZERO:
        return 0.0
    if regime is SopRegime.ONE:
        return 1.0

    gamma = outage_threshold
    jb = j_bounds(ctx, bounds)
    # Scalar closures over the same densities; the constants are read off
    # one evaluation of the public pdfs so the quadrature integrand stays
    # tied to them without per-call array plumbing.
    expo = -1.0 - 1.0 / (order + 3.0)
    front_b = pdf_j_bob(jb.bob_min, ctx, bounds, order) / jb.bob_min**expo
    front_e = pdf_j_eve(jb.eve_min, ctx, bounds, order) / jb.eve_min**expo
    f_b = lambda y: front_b * y**expo
    f_e = lambda z: front_e * z**expo

    def bob_cdf(t: float) -> float:
        if t <= jb.bob_min:
            return 0.0
        val, _ = integrate.quad(
            f_b, jb.bob_min, min(t, jb.bob_max), epsabs=1e-13, epsrel=1e-12, limit=200
        )
        return val

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        if regime is SopRegime.LOW:
            val, err = integrate.quad(
                lambda z: f_e(z) * bob_cdf(gamma * z),
                jb.bob_min / gamma,
                jb.eve_max,
                epsabs=1e-12,
                epsrel=1e-12,
                limit=200,
            )
        elif regime is SopRegime.MID:
            val, err = integrate.quad(
                lambda z: f_e(z) * bob_cdf(gamma * z),
                jb.eve_min,
                jb.eve_max,
                epsabs=1e-12,
                epsrel=1e-12,
                limit=200,
            )
        else:  # HIGH: outage is certain above bob_max / gamma
            val1, err1 = integrate.quad(
                lambda z: f_e(z) * bob_cdf(gamma * z),
                jb.eve_min,
                jb.bob_max / gamma,
                epsabs=1e-12,
                epsrel=1e-12,
                limit=200,
            )
            val2, err2 = integrate.quad(
                f_e,
                jb.bob_max / gamma,
                jb.eve_max,
                epsabs=1e-12,
                epsrel=1e-12,
                limit=200,
            )
            val, err = val1 + val2, err1 + err2

    if err > 1e-9:
        raise NumericError(f"outage quadrature error estimate {err} exceeds 1e-9")
    return val
