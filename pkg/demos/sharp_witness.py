#!/usr/bin/env python3
"""Show that the guaranteed radius 1/(1+2*lambda) cannot be improved.

The scalar witness (lambda - z)/(1 - lambda z) has majorant series
lambda + (1-lambda^2) r / (1 - lambda r), which crosses 1 exactly at
r = 1/(1+2*lambda). The table compares that closed form against the
bisection estimate and prints the majorant value just above and below.
"""

import argparse

import numpy as np

from bohrlab import empirical_bohr_radius, majorant, mobius_witness, sharpness_scan


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--delta", type=float, default=1e-3, help="probe offset above the radius")
    args = ap.parse_args()

    lams = [0.5, 0.6, 0.75, 0.9, 0.99]
    print(f"{'lam':>5} {'1/(1+2lam)':>12} {'empirical':>12} {'majorant(at)':>13} {'majorant(+d)':>13}")
    for lam in lams:
        target = 1.0 / (1.0 + 2.0 * lam)
        w = mobius_witness(lam)
        emp = empirical_bohr_radius(w)
        series = w.coefficients(2048)
        at, _ = majorant(series, target)
        above, _ = majorant(series, min(target + args.delta, 1.0 - 1e-9))
        print(
            f"{lam:>5.2f} {target:>12.8f} {emp:>12.8f} "
            f"{float(np.real(at[0, 0])):>13.9f} {float(np.real(above[0, 0])):>13.9f}"
        )

    print()
    print("sharpness_scan confirms the excess just above the radius is positive:")
    for row in sharpness_scan(lams, args.delta):
        print(
            f"  lam={row.lam:.2f} guaranteed={row.guaranteed:.8f} "
            f"excess(+d)={row.excess_at_delta:.3e} confirmed={row.confirmed}"
        )


if __name__ == "__main__":
    main()
