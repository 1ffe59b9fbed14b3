"""Command-line front end.

Subcommands:
    asc-sweep   averaged secrecy capacity along one swept parameter
    sop-sweep   secrecy-outage lower bound along one swept parameter
    pdf         density dumps of gain / effective-SNR variables
    validate    full verification suite (closed form / quadrature / MC)

Each sweep is driven by a JSON config file holding the scenario, the
sweep axis, optional curve family, and defaults for mode/seed/samples;
command-line flags override config values. Exit codes: 0 success,
1 validation failure, 2 usage or config error, 3 numeric failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import ConsistencyError, NumericError, ParameterError
from .montecarlo import MCConfig
from .sweeps import (
    PDF_COLUMNS,
    run_asc_sweep,
    run_pdf_dump,
    run_sop_sweep,
    sweep_spec_from_dict,
    write_csv,
)
from .validation import CHECK_NAMES, report_text, run_checks

__all__ = ["main"]


def _load_config(path: "str | None") -> dict:
    if path is None:
        return {}
    try:
        with open(path) as fh:
            cfg = json.load(fh)
    except FileNotFoundError:
        raise ParameterError(f"config file not found: {path}")
    except json.JSONDecodeError as exc:
        raise ParameterError(f"config file {path} is not valid JSON: {exc}")
    if not isinstance(cfg, dict):
        raise ParameterError(f"config file {path} must hold a JSON object")
    return cfg


def _pick(args, cfg: dict, key: str, default=None):
    val = getattr(args, key.replace("-", "_"), None)
    if val is not None:
        return val
    return cfg.get(key, default)


def _mc_config(args, cfg: dict) -> MCConfig:
    return MCConfig(
        n_samples=int(_pick(args, cfg, "samples", 1_000_000)),
        seed=int(_pick(args, cfg, "seed", 7)),
        n_streams=1,
    )


def _out_path(args, cfg: dict) -> str:
    out = _pick(args, cfg, "out")
    if not out:
        raise ParameterError("no output path: pass --out or set 'out' in the config")
    return str(out)


def _cmd_sweep(args, kind: str) -> int:
    cfg = _load_config(args.config)
    if "scenario" not in cfg or "sweep" not in cfg:
        raise ParameterError("config must provide 'scenario' and 'sweep' sections")
    spec = sweep_spec_from_dict(cfg["sweep"], cfg.get("curves"))
    mode = str(_pick(args, cfg, "mode", "closed"))
    workers = int(_pick(args, cfg, "workers", 1))
    mc = _mc_config(args, cfg) if mode in ("mc", "all") else None
    if kind == "asc":
        bits = bool(args.bits or cfg.get("bits", False))
        rows = run_asc_sweep(cfg["scenario"], spec, mode, mc, workers, bits)
    else:
        rows = run_sop_sweep(cfg["scenario"], spec, mode, mc, workers)
    path = _out_path(args, cfg)
    write_csv(rows, path)
    print(f"wrote {len(rows)} rows to {path}")
    return 0


def _cmd_pdf(args) -> int:
    cfg = _load_config(args.config)
    if "scenario" not in cfg:
        raise ParameterError("config must provide a 'scenario' section")
    which = cfg.get("which", "gain_bob")
    kinds = [which] if isinstance(which, str) else list(which)
    n_points = int(cfg.get("n_points", 2001))
    curves = cfg.get("curves")
    rows = []
    for kind in kinds:
        if curves is None:
            variants = [(kind, cfg["scenario"])]
        else:
            if "key" not in curves or "values" not in curves:
                raise ParameterError("curves section must provide 'key' and 'values'")
            variants = []
            for v in curves["values"]:
                d = dict(cfg["scenario"])
                d[curves["key"]] = v
                variants.append((f"{kind}|{curves['key']}={float(v):g}", d))
        for label, scenario in variants:
            dumped = run_pdf_dump(scenario, kind, n_points)
            for r in dumped:
                r["curve_id"] = label
            rows.extend(dumped)
    path = _out_path(args, cfg)
    write_csv(rows, path, PDF_COLUMNS)
    print(f"wrote {len(rows)} rows to {path}")
    return 0


def _cmd_validate(args) -> int:
    cfg = _load_config(args.config)
    checks = _pick(args, cfg, "checks")
    if isinstance(checks, str):
        checks = tuple(s.strip() for s in checks.split(",") if s.strip())
    elif checks is not None:
        checks = tuple(checks)
    results, rows = run_checks(
        seed=int(_pick(args, cfg, "seed", 7)),
        n_samples=int(_pick(args, cfg, "samples", 1_000_000)),
        workers=int(_pick(args, cfg, "workers", 1)),
        mutate_eve_norm=bool(args.mutate_xi2),
        include=checks,
    )
    report = report_text(results)
    sys.stdout.write(report)
    for r in results:
        print(f"  [{r.seconds:7.2f} s] {r.name}", file=sys.stderr)
    out = _pick(args, cfg, "out")
    if out:
        with open(out, "w") as fh:
            fh.write(report)
    csv_path = _pick(args, cfg, "csv")
    if csv_path:
        write_csv(rows, csv_path)
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vlcsec",
        description="Secrecy metrics for a randomly deployed indoor optical wireless cell.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_mode: bool):
        p.add_argument("--config", required=False, help="JSON config path")
        p.add_argument("--out", help="output CSV path (overrides config)")
        if with_mode:
            p.add_argument(
                "--mode",
                choices=("closed", "quadrature", "mc", "all"),
                help="which evaluations to run (default: config or closed)",
            )
            p.add_argument("--seed", type=int, help="Monte-Carlo seed")
            p.add_argument("--samples", type=int, help="Monte-Carlo sample count")
            p.add_argument("--workers", type=int, help="parallel sweep-point workers")

    p_asc = sub.add_parser("asc-sweep", help="averaged secrecy capacity sweep")
    common(p_asc, True)
    p_asc.add_argument("--bits", action="store_true", help="report bits instead of nats")
    p_asc.set_defaults(func=lambda a: _cmd_sweep(a, "asc"))

    p_sop = sub.add_parser("sop-sweep", help="secrecy outage lower-bound sweep")
    common(p_sop, True)
    p_sop.set_defaults(func=lambda a: _cmd_sweep(a, "sop"))

    p_pdf = sub.add_parser("pdf", help="density dump of gain or SNR variables")
    common(p_pdf, False)
    p_pdf.set_defaults(func=_cmd_pdf)

    p_val = sub.add_parser("validate", help="run the verification suite")
    p_val.add_argument("--config", help="JSON config path (optional)")
    p_val.add_argument("--seed", type=int, help="Monte-Carlo seed (default 7)")
    p_val.add_argument("--samples", type=int, help="Monte-Carlo sample count (default 1e6)")
    p_val.add_argument("--workers", type=int, help="Monte-Carlo reduction streams")
    p_val.add_argument("--out", help="write the report to this path")
    p_val.add_argument("--csv", help="write per-grid-point rows to this path")
    p_val.add_argument(
        "--checks",
        help=f"comma-separated subset of: {', '.join(CHECK_NAMES)}",
    )
    p_val.add_argument("--mutate-xi2", action="store_true", help=argparse.SUPPRESS)
    p_val.set_defaults(func=_cmd_validate)

    return parser


def main(argv: "list[str] | None" = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NumericError, ConsistencyError) as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
