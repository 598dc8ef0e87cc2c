"""Molien series of the Lorentz subgroup, exact circle integration vs quadrature."""

import argparse
import time

from fubini_molien.cli import bundled
from fubini_molien.molien import molien_fubini
from fubini_molien.oracle import quad_molien
from fubini_molien.specfile import load_spec


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--degree", type=int, default=16)
    parser.add_argument("--theta", type=float, default=1.0)
    parser.add_argument("--nodes", type=int, default=64)
    args = parser.parse_args()

    spec = load_spec(bundled("lorentz_paper.spec")).to_group_spec(theta=args.theta)
    t0 = time.perf_counter()
    exact = molien_fubini(spec, args.degree)
    t1 = time.perf_counter()
    quad = quad_molien(spec, args.degree, args.nodes)
    t2 = time.perf_counter()
    rounded = exact.round_to_exact().to_ints()

    print(f"theta = {args.theta}, D = {args.degree}")
    print(f"{'d':>3} {'fourier':>22} {'trapezoid':>22} {'rounded':>8}")
    for d in range(args.degree + 1):
        print(f"{d:>3} {float(exact[d]):>22.15f} {float(quad[d]):>22.15f} {rounded[d]:>8}")
    print(f"max |fourier - trapezoid| = {exact.max_abs_diff(quad):.3e}")
    print(f"time: fourier {t1 - t0:.3f}s, trapezoid {t2 - t1:.3f}s")


if __name__ == "__main__":
    main()
