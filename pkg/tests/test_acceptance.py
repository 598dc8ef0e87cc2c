"""Exit criteria for the package, one test per criterion.

Each test records a PASS/FAIL line that is echoed in the pytest terminal
summary under "acceptance criteria".
"""

import json
import random
import time
from fractions import Fraction
from math import comb

from fubini_molien.algebra import Mat, PowerSeries, TrigPoly, series_inv_det
from fubini_molien.cli import bundled, main
from fubini_molien.group_model import GroupSpec, close_group, spec_generators
from fubini_molien.molien import fubini_finite, molien_finite, molien_fubini
from fubini_molien.oracle import check_invariant, quad_molien, reynolds_dim, reynolds_projector
from fubini_molien.specfile import load_polys, load_spec

from conftest import SIGN_GENS, finite_corpus, lorentz_spec, record_criterion
from test_matrix_series import det_i_minus_tm

PAPER_SERIES = [1, 0, 3, 0, 6, 0, 10, 0, 15, 0, 21, 0, 28, 0, 36, 0, 45]
ROUND_TOL = 1e-6
RUNTIME_LIMIT_S = 5.0
QUAD_TOL = 1e-8
RESIDUAL_TOL = 1e-9


def compute_json(capsys, *extra):
    start = time.perf_counter()
    code = main(["compute", "lorentz_paper.spec", "--max-degree", "16", "--format", "json", *extra])
    elapsed = time.perf_counter() - start
    out, _ = capsys.readouterr()
    return code, json.loads(out) if code == 0 else None, elapsed


def _paper_ok(code, payload, elapsed):
    if code != 0:
        return False, f"exit code {code}"
    deviation = max(abs(c - r) for c, r in zip(payload["coefficients"], PAPER_SERIES))
    ok = payload["rounded"] == PAPER_SERIES and deviation < ROUND_TOL and elapsed < RUNTIME_LIMIT_S
    return ok, f"rounded={payload['rounded']} max deviation={deviation:.2e} time={elapsed:.2f}s"


def test_criterion_1_paper_series(capsys):
    ok, detail = _paper_ok(*compute_json(capsys))
    assert record_criterion(1, "paper series reproduction", ok, detail)


def test_criterion_2_theta_invariance(capsys):
    vectors, oks = [], []
    for theta in (0.3, 1.0, 2.5):
        code, payload, elapsed = compute_json(capsys, "--theta", str(theta))
        oks.append(_paper_ok(code, payload, elapsed)[0])
        vectors.append(payload["rounded"] if payload else None)
    identical = vectors[0] == vectors[1] == vectors[2]
    assert record_criterion(2, "theta invariance", all(oks) and identical, f"identical rounded vectors={identical}")


def test_criterion_3_oracle_equivalence():
    mismatches = []
    for name, G in finite_corpus().items():
        series = molien_finite(G, 8)
        for d in range(9):
            if not (isinstance(series[d], Fraction) and series[d] == reynolds_dim(G, d)):
                mismatches.append((name, d))
    assert record_criterion(3, "oracle equivalence (finite corpus, d<=8)", not mismatches, f"mismatches={mismatches}")


def test_criterion_4_fubini_consistency():
    sigma = close_group(SIGN_GENS[:1])
    whole = close_group(SIGN_GENS)
    ok = sigma.order * 4 == whole.order == 8
    for D in range(9):
        ok &= list(molien_finite(whole, D)) == list(fubini_finite(sigma, SIGN_GENS[1:], D))
    spec = load_spec(bundled("signdiag8.spec")).to_group_spec()
    ok &= list(molien_fubini(spec, 8)) == list(molien_finite(whole, 8))
    assert record_criterion(4, "Fubini consistency (sign-diagonal 8, index 4)", ok)


def test_criterion_5_quadrature_cross_check(paper_spec):
    diff = quad_molien(paper_spec, 16, 64).max_abs_diff(molien_fubini(paper_spec, 16))
    assert record_criterion(5, "quadrature cross-check (N=64, D=16)", diff < QUAD_TOL, f"max diff={diff:.2e}")


def test_criterion_6_decomposition_verifier(capsys):
    code_good = main(["verify-decomposition", "signdiag8.spec", "--format", "json"])
    good = json.loads(capsys.readouterr()[0])
    code_bad = main(["verify-decomposition", "signdiag8_bad.spec", "--format", "json"])
    bad = json.loads(capsys.readouterr()[0])
    failing = [k for k in ("sigma_normal", "delta_normal", "product_covers", "intersections_trivial") if not bad[k]]
    ok = (
        code_good == 0 and good["overall"] and good["delta_normal"] and all(good["delta_normal_each"])
        and code_bad != 0 and not bad["overall"] and failing == ["intersections_trivial"]
    )
    assert record_criterion(6, "decomposition verifier", ok, f"bad spec failing flags={failing}")


def test_criterion_7_hilbert_basis_invariance():
    spec = load_spec(bundled("lorentz_paper.spec")).to_group_spec(theta=1.0)
    gens = spec_generators(spec)
    has_rotation = gens[0].is_trig()
    residuals = [check_invariant(e.polynomial(1.0), gens, samples=16, tol=RESIDUAL_TOL).residual
                 for e in load_polys(bundled("paper_basis.poly"))]
    ok = has_rotation and len(residuals) == 3 and max(residuals) < RESIDUAL_TOL
    assert record_criterion(7, "Hilbert-basis invariance", ok, f"residuals={[f'{r:.1e}' for r in residuals]}")


def _random_trigpoly(rng):
    def coeff():
        return Fraction(rng.randint(-9, 9), rng.randint(1, 6))

    return TrigPoly(coeff(), cos={rng.randint(1, 8): coeff() for _ in range(3)},
                    sin={rng.randint(1, 8): coeff() for _ in range(3)})


def test_criterion_8_property_suite():
    rng = random.Random(0x4D4F4C49)
    failures = []

    for _ in range(40):
        a, b, c = (_random_trigpoly(rng) for _ in range(3))
        if not (a * b == b * a and (a * b) * c == a * (b * c) and a * (b + c) == a * b + a * c):
            failures.append("trigpoly ring axioms")
            break

    for _ in range(30):
        M = Mat.of([[Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(3)] for _ in range(3)])
        product = series_inv_det(M, 8) * PowerSeries.from_list(det_i_minus_tm(M), degree=8)
        if list(product) != [1] + [0] * 8:
            failures.append("series * det")
            break

    for G in finite_corpus().values():
        for d in range(1, 5):
            _, P = reynolds_projector(G, d)
            n = len(P)
            if [[sum(P[i][k] * P[k][j] for k in range(n)) for j in range(n)] for i in range(n)] != P:
                failures.append("reynolds idempotence")

    specs = [lorentz_spec(rng.uniform(-3, 3)) for _ in range(3)] + [
        GroupSpec(dim=3, circle_blocks=[(0, 1)], involutions=[Mat.diag([1, -1, 1])]),
        GroupSpec(dim=4, circle_blocks=[(0, 1), (2, 3)]),
    ]
    for spec in specs:
        series = molien_fubini(spec, 10)
        if series[0] != 1:
            failures.append("haar normalization")
        for d, c in enumerate(series):
            if abs(float(c) - round(float(c))) >= ROUND_TOL or not (-ROUND_TOL < float(c) <= comb(spec.dim + d - 1, d)):
                failures.append(f"integrality/bounds d={d}")
    assert record_criterion(8, "property suite (fixed seed)", not failures, f"failures={failures}")
