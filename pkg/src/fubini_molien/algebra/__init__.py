"""Coefficient rings, matrices, truncated series and polynomials."""

from .linalg import bareiss_rank
from .matrix import Mat, block_diag, quarter_turn
from .polynomial import Polynomial, monomial, monomial_basis
from .scalar import Scalar, is_exact, to_scalar
from .series import PowerSeries, power_sums, series_inv_det
from .trigpoly import TrigPoly, haar


def trigpoly_mul(a: TrigPoly, b: TrigPoly) -> TrigPoly:
    return a * b


def trigpoly_haar(a: TrigPoly) -> Scalar:
    return haar(a)


def mat_mul(A: Mat, B: Mat) -> Mat:
    return A @ B


def mat_trace(A: Mat):
    return A.trace()


__all__ = [
    "Mat",
    "Polynomial",
    "PowerSeries",
    "Scalar",
    "TrigPoly",
    "bareiss_rank",
    "block_diag",
    "haar",
    "is_exact",
    "mat_mul",
    "mat_trace",
    "monomial",
    "monomial_basis",
    "power_sums",
    "quarter_turn",
    "series_inv_det",
    "to_scalar",
    "trigpoly_haar",
    "trigpoly_mul",
]
