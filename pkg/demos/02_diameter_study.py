#!/usr/bin/env python3
"""Singular-value decay versus particle core diameter (2D FFP scan).

Assembles the forward operator of one published 2D FFP sequence for 20,
30 and 40 nm cores, then shows how the spectrum's decay law switches from
exponential (small cores) toward the slower power-law regime (large
cores).  Artifacts land in demos/output/runs/ffp-2d-diameters/.

Run:  python3 demos/02_diameter_study.py      (~10 s on first run,
      instant afterwards thanks to manifest-based caching)
"""

import os
from pathlib import Path

from mpispectra import compare, format_comparison_summary, write_decay_svg
from mpispectra.cli import run_simulate
from mpispectra.config import OUTPUT_ROOT_ENV

HERE = Path(__file__).resolve().parent
os.environ.setdefault(OUTPUT_ROOT_ENV, str(HERE / "output"))


def main():
    print("Assembling one operator per core diameter (25x25 grid, 800 samples)")
    reports = run_simulate(HERE / "configs" / "ffp_2d_diameters.cfg")
    print()

    print(f"{'run':>8} {'sigma_1':>12} {'rank~':>6} {'sigma_50/sigma_1':>17} "
          f"{'power n^a':>10} {'R^2':>7} {'exp e^(bn)':>11} {'R^2':>7}")
    for r in reports:
        sigma = r.singular_values
        pow_fit, exp_fit = r.fits["power_law"], r.fits["exponential"]
        print(
            f"{r.label:>8} {sigma[0]:12.4e} {r.rank:6d} {sigma[49] / sigma[0]:17.3e} "
            f"{pow_fit.exponent:10.3f} {pow_fit.r_squared:7.4f} "
            f"{exp_fit.exponent:11.4f} {exp_fit.r_squared:7.4f}"
        )
    print()

    for r in reports:
        pow_fit, exp_fit = r.fits["power_law"], r.fits["exponential"]
        better = "exponential" if exp_fit.r_squared > pow_fit.r_squared else "power law"
        print(f"{r.label}: {better} fits better over window {pow_fit.window}")
    print()

    comparison = compare(reports)
    print("Dominance over the common fit window (first run is the baseline):")
    print(format_comparison_summary(comparison).rstrip())
    print()
    print("Larger cores keep every normalized singular value at least as")
    print("high as smaller ones: the inverse problem is strictly better")
    print("conditioned, and the 20 nm spectrum's exponential collapse marks")
    print("it as the most severely ill-posed of the three.")

    out = HERE / "output" / "diameter_overlay.svg"
    write_decay_svg(
        out,
        [(r.label, r.normalized) for r in reports],
        title="normalized singular values by core diameter",
    )
    print(f"\nlog-log overlay written to {out}")


if __name__ == "__main__":
    main()
