"""Command-line front end.

Exit codes: 0 success, 1 a check failed (mismatch, non-invariant polynomial,
failed decomposition), 2 unreadable or malformed input, 3 the spec violates
a group invariant, 4 a coefficient could not be rounded to an integer.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import List, Optional

from .algebra import PowerSeries
from .errors import ClosureError, ParseError, RoundingError, SpecError
from .group_model import DEFAULT_CAP, spec_generators, verify_semidirect
from .molien import DEFAULT_DEGREE, molien_fubini
from .oracle import check_invariant, quad_molien, sample_finite_invariant_dims
from .specfile import load_polys, load_spec

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE = 2
EXIT_SPEC = 3
EXIT_ROUNDING = 4

ROUND_TOL = 1e-6
QUAD_TOL = 1e-8


def bundled(name: str) -> Path:
    """Path of a fixture shipped in the package data directory."""
    return Path(str(resources.files("fubini_molien") / "data" / name))


def _resolve(path: str) -> Path:
    p = Path(path)
    if not p.exists() and p.name == path and bundled(path).exists():
        return bundled(path)
    return p


def _read_spec(path: str):
    p = _resolve(path)
    try:
        return load_spec(p)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _json_number(c):
    if isinstance(c, Fraction):
        return int(c) if c.denominator == 1 else str(c)
    return float(c)


def _series_text(series: PowerSeries) -> str:
    terms = []
    for d, c in enumerate(series):
        if c == 0:
            continue
        c = int(c)
        coeff = "" if (c == 1 and d) else str(c)
        terms.append(coeff if d == 0 else f"{coeff}t" + (f"^{d}" if d > 1 else ""))
    return " + ".join(terms) + f" + O(t^{series.degree + 1})"


# -- subcommands --------------------------------------------------------------


def cmd_compute(args) -> int:
    spec = _read_spec(args.spec).to_group_spec(theta=args.theta)
    if args.mode == "exact":
        series = molien_fubini(spec, args.max_degree)
    else:
        series = quad_molien(spec, args.max_degree, args.quad_nodes)
    rounded = series.round_to_exact(args.tol)
    if args.format == "json":
        payload = {
            "coefficients": [_json_number(c) for c in series],
            "rounded": rounded.to_ints(),
            "mode": args.mode,
            "theta": spec.theta,
            "degree": args.max_degree,
        }
        print(json.dumps(payload))
    else:
        for d, (c, r) in enumerate(zip(series, rounded.to_ints())):
            print(f"{d}\t{_json_number(c)}\t{r}")
        print(_series_text(rounded))
    return EXIT_OK


def cmd_compare(args) -> int:
    spec = _read_spec(args.spec).to_group_spec(theta=args.theta)
    D = args.max_degree
    molien = molien_fubini(spec, D)
    reynolds = None
    if spec.is_finite() and spec.is_exact():
        reynolds = sample_finite_invariant_dims(spec, D, cap=args.cap)
    quad = quad_molien(spec, D, args.quad_nodes)

    mismatches = 0
    header = ["d", "molien"] + (["reynolds"] if reynolds is not None else []) + ["quad", "status"]
    print("\t".join(header))
    for d in range(D + 1):
        row = [str(d), str(_json_number(molien[d]))]
        ok = True
        if reynolds is not None:
            row.append(str(reynolds[d]))
            ok &= molien[d] == reynolds[d]
        row.append(f"{float(quad[d]):.12g}")
        ok &= abs(float(molien[d]) - float(quad[d])) < QUAD_TOL
        row.append("ok" if ok else "MISMATCH")
        mismatches += not ok
        print("\t".join(row))
    legs = "reynolds+quad" if reynolds is not None else "quad only"
    print(f"# {legs}; {mismatches} mismatching degree(s)")
    return EXIT_CHECK_FAILED if mismatches else EXIT_OK


def cmd_verify_decomposition(args) -> int:
    spec = _read_spec(args.spec).to_group_spec(theta=args.theta)
    if spec.circle_blocks:
        raise SpecError("verify-decomposition needs a finite spec (no circle blocks)")
    if not spec.is_exact():
        raise SpecError("verify-decomposition needs exact matrices")
    report = verify_semidirect(list(spec.finite_factor), list(spec.involutions), cap=args.cap, dim=spec.dim)
    if args.format == "json":
        print(json.dumps(report.to_dict()))
    else:
        print(f"|Sigma| = {report.sigma_order}, |Gamma| = {report.gamma_order}")
        for name, value in report.flags().items():
            print(f"{name}: {'true' if value else 'false'}")
        for msg in report.failures:
            print(f"FAILED {msg}")
    return EXIT_OK if report.overall else EXIT_CHECK_FAILED


def cmd_check_invariants(args) -> int:
    spec = _read_spec(args.spec).to_group_spec(theta=args.theta)
    try:
        entries = load_polys(_resolve(args.polys))
    except OSError as exc:
        raise ParseError(f"cannot read {args.polys}: {exc.strerror}") from None
    gens = spec_generators(spec)
    results = []
    for entry in entries:
        f = entry.polynomial(spec.theta)
        if f.nvars != spec.dim:
            raise ParseError(f"polynomial {entry.name!r} has {f.nvars} variables, spec dim is {spec.dim}", entry.line)
        res = check_invariant(f, gens, samples=args.samples, tol=args.tol)
        results.append((entry.name, res))
    if args.format == "json":
        print(json.dumps([{"name": n, "residual": r.residual, "passed": r.passed} for n, r in results]))
    else:
        for name, r in results:
            print(f"{'ok  ' if r.passed else 'FAIL'}\t{r.residual:.3e}\t{name}")
    return EXIT_OK if all(r.passed for _, r in results) else EXIT_CHECK_FAILED


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fubini-molien",
        description="Molien series of Gamma_+ x| (Z2 x ... x Z2) by coset decomposition of the Haar integral.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, degree=True):
        p.add_argument("spec", help="group spec file (bundled fixture names are accepted)")
        p.add_argument("--theta", type=float, default=None, help="override the spec's theta")
        if degree:
            p.add_argument("--max-degree", type=int, default=DEFAULT_DEGREE, dest="max_degree")

    p = sub.add_parser("compute", help="print the Molien series")
    common(p)
    p.add_argument("--mode", choices=("exact", "quad"), default="exact")
    p.add_argument("--quad-nodes", type=int, default=64, dest="quad_nodes")
    p.add_argument("--tol", type=float, default=ROUND_TOL, help="integer rounding tolerance")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("compare", help="cross-check against the Reynolds and quadrature oracles")
    common(p)
    p.add_argument("--quad-nodes", type=int, default=64, dest="quad_nodes")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("verify-decomposition", help="check the semidirect structure of a finite spec")
    common(p, degree=False)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify_decomposition)

    p = sub.add_parser("check-invariants", help="test polynomials for invariance by sampling")
    common(p, degree=False)
    p.add_argument("polys", help="polynomial file")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--samples", type=int, default=16)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_check_invariants)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "max_degree", 0) < 0:
        parser.error("--max-degree must be non-negative")
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (SpecError, ClosureError) as exc:
        print(f"invalid spec: {exc}", file=sys.stderr)
        return EXIT_SPEC
    except RoundingError as exc:
        print(f"rounding failed: {exc}", file=sys.stderr)
        return EXIT_ROUNDING


if __name__ == "__main__":
    sys.exit(main())
