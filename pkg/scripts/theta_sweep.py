"""Worst distance of the Lorentz-subgroup Molien coefficients from integers across theta.

Large |theta| makes the hyperbolic entries large, so this shows how float
round-off in the power sums grows with cosh(theta).  Past theta ~ 5 the
involutions no longer square to the identity within the absolute 1e-12
tolerance and the spec is rejected.
"""

import argparse

import numpy as np

from fubini_molien.cli import bundled
from fubini_molien.errors import SpecError
from fubini_molien.molien import molien_fubini
from fubini_molien.specfile import load_spec


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--degree", type=int, default=16)
    parser.add_argument("--max-theta", type=float, default=6.0)
    parser.add_argument("--steps", type=int, default=13)
    args = parser.parse_args()

    sf = load_spec(bundled("lorentz_paper.spec"))
    reference = None
    print(f"{'theta':>8} {'cosh':>12} {'max dist':>12}  same rounded")
    for theta in np.linspace(0.0, args.max_theta, args.steps):
        try:
            spec = sf.to_group_spec(theta=float(theta))
        except SpecError as exc:
            print(f"{theta:>8.3f} {np.cosh(theta):>12.4g}  rejected: {str(exc).split(':')[1].strip()}")
            continue
        series = molien_fubini(spec, args.degree)
        dist = max(abs(float(c) - round(float(c))) for c in series)
        rounded = [round(float(c)) for c in series]
        reference = reference or rounded
        print(f"{theta:>8.3f} {np.cosh(theta):>12.4g} {dist:>12.3e}  {rounded == reference}")


if __name__ == "__main__":
    main()
