"""Molien coefficients vs Reynolds ranks for the bundled finite specs."""

import argparse

from fubini_molien.cli import bundled
from fubini_molien.molien import molien_fubini
from fubini_molien.oracle import sample_finite_invariant_dims
from fubini_molien.specfile import load_spec

SPECS = ["trivial2.spec", "sign2.spec", "cyclic4.spec", "dihedral8.spec", "signdiag8.spec"]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--degree", type=int, default=8)
    args = parser.parse_args()
    for name in SPECS:
        spec = load_spec(bundled(name)).to_group_spec()
        molien = [int(c) for c in molien_fubini(spec, args.degree)]
        reynolds = sample_finite_invariant_dims(spec, args.degree)
        flag = "ok" if molien == reynolds else "MISMATCH"
        print(f"{name:<16} {flag:<8} {molien}")


if __name__ == "__main__":
    main()
