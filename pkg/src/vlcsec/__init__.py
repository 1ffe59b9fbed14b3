"""Secrecy metrics for a randomly deployed indoor optical wireless cell.

A single overhead Lambertian source serves one legitimate receiver while
one eavesdropper lurks outside a protected zone; both are placed
uniformly at random. The package provides the placement geometry, the
line-of-sight channel-gain model and its induced densities, closed-form
expressions for the average secrecy capacity and a secrecy-outage lower
bound under dB-bounded channel-knowledge errors, independent quadrature
oracles for both, seeded Monte-Carlo estimators, and a CLI for sweeps
and self-validation.
"""

from .channel import (
    ChannelBounds,
    LambertianParams,
    apply_csi_uncertainty,
    cdf_gain_bob,
    cdf_gain_eve,
    channel_gain,
    compute_bounds,
    gain_prefactor,
    max_incidence_angle,
    pdf_gain_bob,
    pdf_gain_eve,
)
from .errors import ConsistencyError, NumericError, ParameterError
from .geometry import (
    DeploymentGeometry,
    cdf_radius_bob,
    cdf_radius_eve,
    pdf_radius_bob,
    pdf_radius_eve,
    sample_radius_bob,
    sample_radius_eve,
)
from .montecarlo import MCConfig, MCEstimate, estimate_asc, estimate_sop
from .secrecy import (
    AscRegime,
    JBounds,
    SecrecyContext,
    SopRegime,
    asc_closed_form,
    asc_quadrature,
    asc_regime,
    gain_ratio_threshold,
    instantaneous_sc,
    j_bounds,
    pdf_j_bob,
    pdf_j_eve,
    sop_lower_bound_closed_form,
    sop_quadrature,
    sop_regime,
)
from .specfun import LambdaContext, lambda_fn, lambda_oracle, meijer_g_1333
from .sweeps import (
    Scenario,
    SweepSpec,
    run_asc_sweep,
    run_pdf_dump,
    run_sop_sweep,
    scenario_from_dict,
    sweep_spec_from_dict,
    write_csv,
)
from .validation import CheckResult, report_text, run_checks

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "ParameterError",
    "NumericError",
    "ConsistencyError",
    "DeploymentGeometry",
    "pdf_radius_bob",
    "pdf_radius_eve",
    "cdf_radius_bob",
    "cdf_radius_eve",
    "sample_radius_bob",
    "sample_radius_eve",
    "LambertianParams",
    "ChannelBounds",
    "gain_prefactor",
    "channel_gain",
    "max_incidence_angle",
    "compute_bounds",
    "pdf_gain_bob",
    "pdf_gain_eve",
    "cdf_gain_bob",
    "cdf_gain_eve",
    "apply_csi_uncertainty",
    "LambdaContext",
    "meijer_g_1333",
    "lambda_fn",
    "lambda_oracle",
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
    "MCConfig",
    "MCEstimate",
    "estimate_asc",
    "estimate_sop",
    "Scenario",
    "SweepSpec",
    "scenario_from_dict",
    "run_asc_sweep",
    "run_sop_sweep",
    "run_pdf_dump",
    "sweep_spec_from_dict",
    "write_csv",
    "CheckResult",
    "run_checks",
    "report_text",
]
