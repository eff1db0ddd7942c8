#!/usr/bin/env python3
"""Bohr-type bound for functions with Re f(z) <= I and normal f(0).

Random instances all hold at r = 1/3 - 1e-6. The one-dimensional
extremal family d + 2t z beta^(n-1) (I-d) pushes the Bohr sum to exactly
1 at r = 1/3 as beta -> 1 and violates at any larger radius; the closed
form of its sum is d + r(1-d) * 2t/(1 - r beta).
"""

import argparse

import numpy as np

from bohrlab import HalfPlaneLift, Status, check_bohr, check_thm2_bounds, generate_thm2_instance


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    r = 1.0 / 3.0 - 1e-6
    print(f"random instances at r = 1/3 - 1e-6:")
    all_hold = 0
    for i in range(args.count):
        f = generate_thm2_instance(1 + i % 8, seed=args.seed + i)
        b = check_thm2_bounds(f, r)
        good = b.bohr.holds and b.eq2.verdict.holds and b.final.verdict.holds
        all_hold += int(good)
        print(
            f"  dim={f.dim} bohr={b.bohr.status.value:>6} "
            f"coeff_sq_gap={b.eq2.verdict.min_gap:+.2e} "
            f"final_gap={b.final.verdict.min_gap:+.2e}"
        )
    print(f"all three bounds hold for {all_hold}/{args.count}")

    print()
    extremal = HalfPlaneLift(np.eye(1), [0.5], 1.0, 1.0 - 1e-6)
    for probe in (1.0 / 3.0, 0.35, 0.4):
        v = check_bohr(extremal, probe)
        oracle = 0.5 + probe / (1.0 - probe)
        print(
            f"extremal at r={probe:.4f}: status={v.status.value:>8} "
            f"sum={1.0 + v.lhs_extreme:.6f} closed_form={oracle:.6f}"
        )
    assert check_bohr(extremal, 0.35).status is Status.VIOLATED


if __name__ == "__main__":
    main()
