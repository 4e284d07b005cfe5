#!/usr/bin/env python3
"""Solve one representative problem per case family and print the wave
structures; optionally write the CLI artifacts for each into a directory.

Usage:
    python scripts/case_gallery.py [--out DIR]
"""

import argparse
from pathlib import Path

from elastowave import Params, Rarefaction, Shock, State, solve_ibvp
from elastowave.cli import ProblemConfig, run

PROBLEMS = [
    # (boundary u, sigma, initial u, sigma) with k = 1, one per case family
    ("single fan, family ONE", 1.5, 0.0, 2.0, 0.5),
    ("single fan, family TWO", -0.5, 0.2, 0.2, -0.5),
    ("single shock, family ONE", 1.6, 0.1, 1.0, -0.5),
    ("single shock, family TWO", 0.6, 0.0, -0.2, 0.8),
    ("fan + fan", 1.2, 0.0, 1.6, 0.0),
    ("shock + fan", 1.8, 0.3, 1.2, -1.1),
    ("shock + shock", 1.9, 0.0, 0.5, -0.2),
    ("fan + shock", 1.3, -0.2, 0.9, 1.0),
]


def describe(wave):
    if isinstance(wave, Shock):
        return f"shock family {wave.family.value} at speed {wave.speed:+.4g}"
    assert isinstance(wave, Rarefaction)
    return f"fan family {wave.family.value} over [{wave.xi_lo:+.4g}, {wave.xi_hi:+.4g}]"


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=str, help="also write report/samples per case")
    args = parser.parse_args()

    p = Params(1.0)
    for name, ub, sb, u0, s0 in PROBLEMS:
        sol = solve_ibvp(State(ub, sb), State(u0, s0), p)
        print(f"{name:28s} case {sol.case.value:6s} region {sol.region.value:8s} "
              f"trace ({sol.trace.u:+.4g}, {sol.trace.sigma:+.4g})")
        for w in sol.structure.waves:
            print(f"{'':28s}   {describe(w)}")
        if args.out:
            out = Path(args.out) / sol.case.value
            cfg = ProblemConfig(k=1.0, u_b=ub, sigma_b=sb, u_0=u0, sigma_0=s0,
                                t=0.5, x_max=2.2, nx=221, out=str(out))
            run(cfg)
            print(f"{'':28s}   wrote {out}/report.json")


if __name__ == "__main__":
    main()
