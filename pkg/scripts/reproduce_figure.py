#!/usr/bin/env python3
"""Reproduce the CDF convergence picture: empirical root measures for a few n
against the log-Cauchy limit, plus an optional density/CDF grid of the limit
law and an optional rendered overlay."""

import argparse
import math
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from eulerian_roots import limit_law, serialize
from eulerian_roots.cli import main as cli_main


def write_limit_grid(path: str, t_min: float, t_max: float, points: int) -> None:
    step = (math.log10(t_max) - math.log10(t_min)) / (points - 1)
    ts = [10 ** (math.log10(t_min) + i * step) for i in range(points)]
    rows = serialize.grid_csv_rows(
        ts, [limit_law.density_mu(t) for t in ts], [limit_law.cdf_mu(t) for t in ts]
    )
    with open(path, "w", encoding="utf-8", newline="") as fh:
        serialize.write_csv(fh, serialize.GRID_HEADER, rows)
    print(f"wrote {path}")


def plot_overlay(figure_csv: str, png_path: str) -> None:
    import csv

    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    with open(figure_csv) as fh:
        rows = list(csv.reader(fh))
    header, data = rows[0], [[float(x) for x in row] for row in rows[1:]]
    ts = [row[0] for row in data]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for col in range(2, len(header)):
        ax.step(ts, [row[col] for row in data], where="post", label=header[col])
    ax.plot(ts, [row[1] for row in data], "k-", lw=2, label="limit")
    ax.set_xscale("log")
    ax.set_xlabel("t")
    ax.set_ylabel("CDF")
    ax.legend()
    fig.tight_layout()
    fig.savefig(png_path, dpi=150)
    print(f"wrote {png_path}")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", default="10,100")
    parser.add_argument("--out", default="figure_data.csv")
    parser.add_argument("--grid-out", default=None, help="also write the limit-law t/density/cdf grid")
    parser.add_argument("--png", default=None, help="render an overlay plot to this path")
    parser.add_argument("--points", type=int, default=601)
    args = parser.parse_args()

    rc = cli_main(["figure", "--n", args.n, "--points", str(args.points), "--out", args.out])
    if rc != 0:
        return rc
    print(f"wrote {args.out}")
    if args.grid_out:
        write_limit_grid(args.grid_out, 1e-3, 1e3, args.points)
    if args.png:
        plot_overlay(args.out, args.png)
    return 0


if __name__ == "__main__":
    sys.exit(main())
