#!/usr/bin/env python3
"""Render the showcase artifacts into out/: a staircase diagram, an
oscillator plot with its envelope curves, and an inverse-kinematics sweep.

Usage: python3 scripts/render_showcase.py [outdir]
"""

import math
import sys
from pathlib import Path

from groebnerkit.cli import run


def main():
    outdir = Path(sys.argv[1] if len(sys.argv) > 1 else "out")
    outdir.mkdir(parents=True, exist_ok=True)

    run([
        "staircase", "--vars", "x,y", "--order", "grlex",
        "--output", str(outdir / "staircase.svg"),
        "x^3 - 2*x*y", "x^2*y - 2*y^2 + x",
    ])

    run([
        "oscillator", "--m", "1", "--k", "5", "--b", "0.4",
        "--y0", "1", "--y1", "0", "--t-end", "15", "--n", "600",
        "--format", "svg", "--output", str(outdir / "oscillator.svg"),
    ])
    run([
        "oscillator", "--m", "1", "--k", "5", "--b", "0.4",
        "--y0", "1", "--y1", "0", "--t-end", "15", "--n", "600",
        "--output", str(outdir / "oscillator.csv"),
    ])

    # quarter-circle sweep of reachable targets for a 2-link arm
    waypoints = outdir / "waypoints.csv"
    rows = ["x,y"]
    for i in range(9):
        angle = math.pi / 2 * i / 8
        rows.append(f"{1.5 * math.cos(angle):.4f},{1.5 * math.sin(angle):.4f}")
    waypoints.write_text("\n".join(rows) + "\n")
    run([
        "ik", "--l1", "1", "--l2", "1", "--trajectory", str(waypoints),
        "--format", "csv", "--output", str(outdir / "ik_sweep.csv"),
    ])

    for name in ("staircase.svg", "oscillator.svg", "oscillator.csv", "ik_sweep.csv"):
        print(f"wrote {outdir / name}")


if __name__ == "__main__":
    main()
