"""Densities of the legitimate and eavesdropper channel gains.

Both receivers see the same Lambertian line-of-sight channel; what
differs is where they can stand. The legitimate user is uniform over the
whole disc, the eavesdropper over the annulus outside the protected
zone, so the eavesdropper density loses its high-gain tail as the
protected radius grows. This script dumps both densities for several
protected radii (the recipe in configs/gain_pdfs.json) and plots them.

Run from the repository root:

    python3 demos/gain_densities.py --out-dir out
"""

import argparse
import csv
import json
import os
from collections import defaultdict

from vlcsec import run_pdf_dump, write_csv
from vlcsec.sweeps import PDF_COLUMNS

CONFIG = os.path.join(os.path.dirname(__file__), "..", "configs", "gain_pdfs.json")


def collect_rows(cfg: dict) -> list:
    rows = []
    curves = cfg["curves"]
    for kind in cfg["which"]:
        for rho in curves["values"]:
            scenario = dict(cfg["scenario"])
            scenario[curves["key"]] = rho
            dumped = run_pdf_dump(scenario, kind, cfg["n_points"])
            label = f"{kind}|{curves['key']}={float(rho):g}"
            for r in dumped:
                r["curve_id"] = label
            rows.extend(dumped)
    return rows


def plot(rows: list, path: str) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    series = defaultdict(lambda: ([], []))
    for r in rows:
        xs, ys = series[r["curve_id"]]
        xs.append(float(r["value"]))
        ys.append(float(r["density"]))

    fig, ax = plt.subplots(figsize=(7, 4.5))
    for label, (xs, ys) in sorted(series.items()):
        style = "-" if label.startswith("gain_bob") else "--"
        ax.plot([x * 1e4 for x in xs], [y / 1e4 for y in ys], style, label=label)
    ax.set_xlabel("channel gain (1e-4)")
    ax.set_ylabel("density (1e4)")
    ax.set_title("Gain densities: legitimate (solid) vs eavesdropper (dashed)")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out-dir", default="out", help="output directory")
    parser.add_argument("--no-plot", action="store_true", help="skip the PNG")
    args = parser.parse_args()

    with open(CONFIG) as fh:
        cfg = json.load(fh)
    os.makedirs(args.out_dir, exist_ok=True)

    rows = collect_rows(cfg)
    csv_path = os.path.join(args.out_dir, "gain_pdfs.csv")
    write_csv(rows, csv_path, PDF_COLUMNS)
    print(f"wrote {len(rows)} rows to {csv_path}")

    # With no protected zone the two densities coincide; a growing zone
    # chops the eavesdropper support down from its high-gain end.
    for curve in sorted({r["curve_id"] for r in rows if "eve" in r["curve_id"]}):
        top = max(float(r["value"]) for r in rows if r["curve_id"] == curve)
        print(f"  {curve}: support ends at {top:.3e}")

    if not args.no_plot:
        png_path = os.path.join(args.out_dir, "gain_pdfs.png")
        plot(rows, png_path)
        print(f"wrote {png_path}")


if __name__ == "__main__":
    main()
