#!/usr/bin/env python3
"""Run every exact verification suite at full scale and report timings."""

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from eulerian_roots.cli import main as cli_main

SUITES = [
    ["verify", "theorem2", "--n-max", "60"],
    ["verify", "lemma-st-n", "--n-max", "40"],
    ["verify", "egf", "--order", "40"],
    ["verify", "eulerian-stirling", "--n-max", "40"],
    ["verify", "symmetry", "--n-max", "60"],
]


def main() -> int:
    worst = 0
    for argv in SUITES:
        t0 = time.monotonic()
        rc = cli_main(argv)
        print(f"  ({time.monotonic() - t0:.2f}s)  {' '.join(argv)}")
        worst = max(worst, rc)
    return worst


if __name__ == "__main__":
    sys.exit(main())
