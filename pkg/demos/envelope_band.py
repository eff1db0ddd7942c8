#!/usr/bin/env python3
"""The intermediate-range envelope (3 - sqrt(8(1-r^2)))/r.

Between r = 1/3 and r = 1/sqrt(2) the best uniform bound on the scalar
majorant is no longer 1 but cor2_rhs(r). The sup over witnesses with
anchor lambda in [r, 1) attains it: xi(lambda, r) is maximized at
xi_argmax(r) and the attained value matches the envelope. The envelope
itself stays between 1 and the norm-class ceiling 1/sqrt(1-r^2).
"""

import argparse

import numpy as np

from bohrlab import check_cor2, cor2_rhs, mobius_witness, xi, xi_argmax


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--step", type=float, default=1e-3, help="anchor grid step")
    args = ap.parse_args()

    radii = [0.35, 0.4, 0.5, 0.6, 1.0 / np.sqrt(2.0)]
    print(f"{'r':>8} {'cor2_rhs':>10} {'sup xi':>10} {'argmax':>8} {'ceiling':>9} {'holds':>11}")
    for r in radii:
        target = cor2_rhs(r)
        grid = np.arange(r, 1.0, args.step)
        sup = max(xi(float(x), r) for x in grid)
        holds = 0
        for lam in grid:
            w = mobius_witness(min(float(lam), 1.0 - 1e-3))
            if check_cor2(w, r).holds:
                holds += 1
        ceiling = 1.0 / np.sqrt(1.0 - r * r)
        print(
            f"{r:>8.5f} {target:>10.6f} {sup:>10.6f} {xi_argmax(r):>8.5f} "
            f"{ceiling:>9.6f} {holds:>5}/{len(grid)}"
        )
    print()
    print(f"cor2_rhs(1/3) = {cor2_rhs(1.0 / 3.0):.15f}  (the classical bound)")


if __name__ == "__main__":
    main()
