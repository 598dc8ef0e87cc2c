import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fubini_molien.algebra import Mat, PowerSeries, TrigPoly, block_diag, mat_mul, mat_trace, series_inv_det
from fubini_molien.errors import RoundingError

from conftest import lorentz_involutions

F = Fraction


def cofactor_det(rows):
    """Determinant by Laplace expansion along the first row (test oracle)."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * cofactor_det(minor)
    return total


def poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def det_i_minus_tm(M):
    """det(I - tM) as a coefficient list in t, via cofactor expansion over polynomials."""
    n = M.dim

    def entry(i, j):
        return [1 if i == j else 0, -M[i, j]]

    def det(rows):
        if len(rows) == 1:
            return rows[0][0]
        total = [0]
        for j in range(len(rows)):
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            term = poly_mul(rows[0][j], det(minor))
            if j % 2:
                term = [-x for x in term]
            total = [a + b for a, b in zip(total + [0] * len(term), term + [0] * len(total))]
        return total

    coeffs = det([[entry(i, j) for j in range(n)] for i in range(n)])
    return (coeffs + [0] * (n + 1))[: n + 1]


def rotation_trig():
    c, s = TrigPoly.cos_k(1), TrigPoly.sin_k(1)
    return Mat.of([[c, -s], [s, c]])


@pytest.mark.parametrize("theta", [0.0, 0.3, 0.7, 1.0, 2.5])
def test_lorentz_involution_squares_to_identity(theta):
    lam1, lam2 = lorentz_involutions(theta)
    assert mat_mul(lam1, lam1).max_abs_diff(Mat.identity(4)) < 1e-12
    assert mat_mul(lam2, lam2).max_abs_diff(Mat.identity(4)) < 1e-12


def test_identity_is_neutral():
    A = Mat.of([[1, F(2, 3)], [-4, 5]])
    assert A @ Mat.identity(2) == A
    assert Mat.identity(2) @ A == A


def test_trace_of_rotation_block():
    M = block_diag(rotation_trig(), Mat.identity(2))
    assert mat_trace(M) == TrigPoly(2, cos={1: 2})


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        Mat.identity(2) @ Mat.identity(3)


def test_non_square_rejected():
    with pytest.raises(ValueError):
        Mat.of([[1, 2], [3]])


def test_inverse_and_determinant():
    A = Mat.of([[2, 1, 0], [1, 3, F(1, 2)], [0, -1, 4]])
    assert A @ A.inverse() == Mat.identity(3)
    assert A.determinant() == cofactor_det([list(r) for r in A.rows])


def test_series_identity():
    assert list(series_inv_det(Mat.identity(2), 4)) == [1, 2, 3, 4, 5]


def test_series_minus_one():
    assert list(series_inv_det(Mat.of([[-1]]), 3)) == [1, -1, 1, -1]


@pytest.mark.parametrize("theta", [0.3, 1.0, 2.5])
def test_series_hyperbolic_block(theta):
    c, s = math.cosh(theta), math.sinh(theta)
    S = Mat.of([[c, s], [-s, -c]])
    assert det_i_minus_tm(S) == pytest.approx([1, 0, -1], abs=1e-12)
    h = series_inv_det(S, 4)
    assert [float(x) for x in h] == pytest.approx([1, 0, 1, 0, 1], abs=1e-10)


def test_series_zero_degree():
    assert list(series_inv_det(Mat.of([[F(1, 2)]]), 0)) == [1]
    with pytest.raises(ValueError):
        series_inv_det(Mat.identity(1), -1)


rationals = st.fractions(min_value=-3, max_value=3, max_denominator=5)
mat3 = st.lists(st.lists(rationals, min_size=3, max_size=3), min_size=3, max_size=3)


@settings(max_examples=60, deadline=None)
@given(mat3)
def test_series_times_det_is_one(rows):
    M = Mat.of(rows)
    D = 8
    h = series_inv_det(M, D)
    det = PowerSeries.from_list(det_i_minus_tm(M), degree=D)
    product = h * det
    assert list(product) == [1] + [0] * D
    assert h.is_exact()


@settings(max_examples=25, deadline=None)
@given(mat3, st.floats(0, 2 * math.pi))
def test_trig_series_evaluates_pointwise(rows, phi):
    # M(phi) = A * blockdiag(R_phi, 1)
    A = Mat.of(rows)
    M = A @ block_diag(rotation_trig(), Mat.identity(1))
    D = 6
    symbolic = series_inv_det(M, D)
    numeric = series_inv_det(M.at(phi), D)
    for a, b in zip(symbolic, numeric):
        assert a(phi) == pytest.approx(b, abs=1e-10, rel=1e-10)


def test_series_add_and_truncate():
    a = PowerSeries.from_list([1, 1])
    b = PowerSeries.from_list([1, -1, 5])
    assert list(a + b) == [2, 0]


def test_round_to_exact():
    assert PowerSeries((1.0, 2.9999999998)).round_to_exact(1e-6).to_ints() == [1, 3]
    with pytest.raises(RoundingError):
        PowerSeries((1.0, 0.5)).round_to_exact(1e-6)


def test_scale():
    assert list(PowerSeries.from_list([1, 2]).scale(F(1, 2))) == [F(1, 2), 1]
