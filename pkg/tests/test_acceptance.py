"""End-to-end acceptance suite.

Runs the full verification battery once (shared across tests) and pins
every deliverable guarantee at its stated tolerance and runtime budget:
density normalization, sampler pushforward, special-function identities,
closed form vs quadrature on the full grids with all regimes hit, branch
continuity at regime boundaries, Monte-Carlo agreement, qualitative
shape properties, and byte-identical reruns of the validate command.
"""

import subprocess
import sys
import time

import pytest

from vlcsec.validation import run_checks

SEED = 7
N_SAMPLES = 1_000_000


@pytest.fixture(scope="module")
def suite():
    t0 = time.perf_counter()
    results, rows = run_checks(seed=SEED, n_samples=N_SAMPLES, workers=1)
    elapsed = time.perf_counter() - t0
    return {"by_name": {r.name: r for r in results}, "rows": rows, "elapsed": elapsed}


def _require(suite, *names, budget=None, tolerances=None):
    checks = [suite["by_name"][n] for n in names]
    for check in checks:
        assert check.passed, f"{check.name}: worst={check.worst:g} ({check.detail})"
    if tolerances:
        for check, tol in zip(checks, tolerances):
            assert check.tolerance == tol, (
                f"{check.name} ran at tolerance {check.tolerance:g}, expected {tol:g}"
            )
    total = sum(c.seconds for c in checks)
    if budget is not None:
        assert total < budget, f"{names} took {total:.1f} s, budget {budget} s"
    for check in checks:
        print(
            f"[acceptance] {check.name}: PASS "
            f"worst={check.worst:.3e} tol={check.tolerance:g} ({check.seconds:.2f} s)"
        )
    return checks


def test_density_normalization_and_sampler_pushforward(suite):
    """Densities integrate to one within 1e-9 on both parameter families
    and the placement samplers match them (KS < 0.002 at n = 1e6), in
    under 30 seconds."""
    _require(
        suite,
        "density_normalization",
        "pushforward_ks",
        budget=30.0,
        tolerances=(1e-9, 2e-3),
    )


def test_special_function_identities(suite):
    """The averaging kernel agrees with its real-integral oracle to 1e-6
    on 100 tuples from actual call sites, and the contour-integral
    special function agrees with its antiderivative quadrature oracle to
    1e-8 on the stated grid, in under 60 seconds."""
    _require(
        suite,
        "lambda_oracle_agreement",
        "meijer_antiderivative",
        budget=60.0,
        tolerances=(1e-6, 1e-8),
    )


def test_asc_closed_form_vs_quadrature_grid(suite):
    """Closed-form average secrecy capacity matches direct nested
    quadrature to 1e-6 relative over the full grid, with all five
    capacity regimes exercised, in under 3 minutes."""
    (check,) = _require(
        suite, "asc_closed_vs_quadrature", budget=180.0, tolerances=(1e-6,)
    )
    for regime in ("zero", "low", "mid", "high", "full"):
        assert regime in check.detail, f"regime {regime} not hit: {check.detail}"


def test_regime_boundary_continuity(suite):
    """Adjacent closed-form branches agree within 1e-6 relative when
    evaluated one part in 1e9 either side of every regime boundary, for
    both the capacity and the outage formulas."""
    _require(
        suite,
        "asc_regime_continuity",
        "sop_regime_continuity",
        tolerances=(1e-6, 1e-6),
    )


def test_sop_closed_form_vs_quadrature_grid(suite):
    """Closed-form outage lower bound matches direct nested quadrature
    to 1e-6 relative over the full grid, with all five outage regimes
    exercised."""
    (check,) = _require(suite, "sop_closed_vs_quadrature", tolerances=(1e-6,))
    for regime in ("zero", "low", "mid", "high", "one"):
        assert regime in check.detail, f"regime {regime} not hit: {check.detail}"


def test_monte_carlo_triangle(suite):
    """Fixed-seed Monte-Carlo estimates at n = 1e6 agree with the closed
    forms within 3 standard errors at every grid point, the exact-event
    outage estimate dominates the lower-bound estimate pointwise, and
    both checks finish in under 2 minutes."""
    _require(
        suite,
        "mc_asc_triangle",
        "mc_sop_triangle",
        budget=120.0,
        tolerances=(3.0, 3.0),
    )


def test_qualitative_shape_properties(suite):
    """Grid monotonicity in exclusion radius, own-link and eavesdropper
    knowledge, and outage threshold; capacity saturation in drive level;
    exact 0 and 1 in the outer outage regimes."""
    _require(suite, "asc_monotonicity", "asc_saturation", "sop_monotonicity")


def test_whole_suite_passes_within_budget(suite):
    """Every check passes and the full battery completes in under five
    minutes."""
    failed = [r.name for r in suite["by_name"].values() if not r.passed]
    assert failed == []
    assert len(suite["by_name"]) == 13
    assert suite["elapsed"] < 300.0, f"suite took {suite['elapsed']:.1f} s"
    print(f"[acceptance] full battery: 13/13 PASS in {suite['elapsed']:.1f} s")


def test_validate_rerun_is_byte_identical(tmp_path):
    """Two fresh runs of the validate command with the same seed and
    checks produce byte-identical reports and CSV dumps."""
    checks = ",".join(
        (
            "density_normalization",
            "lambda_oracle_agreement",
            "asc_regime_continuity",
            "mc_asc_triangle",
        )
    )
    outputs = []
    for tag in ("one", "two"):
        report = tmp_path / f"report_{tag}.txt"
        rows = tmp_path / f"rows_{tag}.csv"
        proc = subprocess.run(
            [
                sys.executable, "-m", "vlcsec", "validate",
                "--seed", str(SEED), "--samples", str(N_SAMPLES),
                "--checks", checks,
                "--out", str(report), "--csv", str(rows),
            ],
            capture_output=True,
            timeout=300,
        )
        assert proc.returncode == 0, proc.stdout.decode() + proc.stderr.decode()
        outputs.append((proc.stdout, report.read_bytes(), rows.read_bytes()))
    assert outputs[0] == outputs[1]
    print("[acceptance] validate rerun: stdout, report, and CSV byte-identical")
