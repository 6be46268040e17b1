#!/usr/bin/env python3
"""Sample triangles per family and summarize trigonometric-law residuals.

Usage:
    python3 scripts/verify_laws.py --count 2000 --seed 7
    python3 scripts/verify_laws.py --families tempolateral hyperbolic
"""

import argparse
import math

from minktrig.samplers import SampleSpec, sample_triangle
from minktrig.trig import trig_report

LAW_FAMILIES = (
    "hyperbolic",
    "antipodal_hyperbolic",
    "spatiolateral_contractible",
    "spatiolateral_noncontractible",
    "tempolateral",
)


def summarize(family: str, count: int, seed: int) -> dict:
    residuals = []
    angle_sums = []
    side_sums = []
    for t in sample_triangle(SampleSpec(family=family, count=count, seed=seed)):
        rep = trig_report(t)
        residuals.append(rep.max_residual())
        if rep.angle_sum is not None:
            angle_sums.append(rep.angle_sum)
        if rep.side_sum is not None:
            side_sums.append(rep.side_sum)
    out = {"max_residual": max(residuals),
           "mean_residual": sum(residuals) / len(residuals)}
    if angle_sums:
        out["max_angle_sum_minus_pi"] = max(angle_sums) - math.pi
    if side_sums:
        out["side_sum_range"] = (min(side_sums), max(side_sums))
    return out


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--families", nargs="+", default=list(LAW_FAMILIES),
                        choices=LAW_FAMILIES)
    parser.add_argument("--count", type=int, default=1000)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    for family in args.families:
        stats = summarize(family, args.count, args.seed)
        print(f"{family} (n={args.count})")
        for key, value in stats.items():
            print(f"  {key}: {value}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
