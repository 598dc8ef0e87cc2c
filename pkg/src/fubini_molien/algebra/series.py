"""Truncated power series and the expansion of 1/det(I - tM)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Sequence, Tuple

from ..errors import RoundingError
from .matrix import Mat
from .scalar import ONE, ZERO, to_scalar
from .trigpoly import TrigPoly


@dataclass(frozen=True)
class PowerSeries:
    """Coefficients c_0..c_D of a series truncated after degree D (inclusive)."""

    coeffs: Tuple

    def __post_init__(self):
        if len(self.coeffs) == 0:
            raise ValueError("a truncated series needs at least the constant term")
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @classmethod
    def from_list(cls, coeffs: Sequence, degree: int = None) -> "PowerSeries":
        values = [c if isinstance(c, TrigPoly) else to_scalar(c) for c in coeffs]
        if degree is not None:
            values = (values + [ZERO] * (degree + 1))[: degree + 1]
        return cls(tuple(values))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, d):
        return self.coeffs[d]

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, degree: int) -> "PowerSeries":
        return PowerSeries(self.coeffs[: degree + 1])

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        n = min(len(self), len(other))
        return PowerSeries(tuple(a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])))

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        n = min(len(self), len(other))
        return PowerSeries(tuple(a - b for a, b in zip(self.coeffs[:n], other.coeffs[:n])))

    def __neg__(self) -> "PowerSeries":
        return PowerSeries(tuple(-c for c in self.coeffs))

    def scale(self, factor) -> "PowerSeries":
        return PowerSeries(tuple(c * factor for c in self.coeffs))

    def __truediv__(self, divisor) -> "PowerSeries":
        return PowerSeries(tuple(c / divisor for c in self.coeffs))

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return self.scale(other)
        n = min(len(self), len(other))
        out = []
        for d in range(n):
            acc = self.coeffs[0] * other.coeffs[d]
            for k in range(1, d + 1):
                acc = acc + self.coeffs[k] * other.coeffs[d - k]
            out.append(acc)
        return PowerSeries(tuple(out))

    def map(self, fn: Callable) -> "PowerSeries":
        return PowerSeries(tuple(fn(c) for c in self.coeffs))

    def is_exact(self) -> bool:
        return all(isinstance(c, Fraction) for c in self.coeffs)

    def max_abs_diff(self, other: "PowerSeries") -> float:
        n = min(len(self), len(other))
        return max(abs(float(a - b)) for a, b in zip(self.coeffs[:n], other.coeffs[:n]))

    def round_to_exact(self, tol: float = 1e-6) -> "PowerSeries":
        """Snap every coefficient to its nearest integer.

        Raises :class:`RoundingError` when some coefficient is ``tol`` or more
        away from an integer.
        """
        out = []
        for d, c in enumerate(self.coeffs):
            nearest = round(c)
            if abs(float(c - nearest)) >= tol:
                raise RoundingError(
                    f"coefficient of t^{d} is {float(c)!r}, not within {tol:g} of an integer"
                )
            out.append(Fraction(int(nearest)))
        return PowerSeries(tuple(out))

    def to_ints(self) -> List[int]:
        if not all(isinstance(c, Fraction) and c.denominator == 1 for c in self.coeffs):
            raise ValueError("series has non-integer coefficients; round it first")
        return [int(c) for c in self.coeffs]


def power_sums(M: Mat, count: int) -> list:
    """Traces p_k = tr(M^k) for k = 1..count (index 0 is unused)."""
    sums = [None]
    P = M
    for k in range(1, count + 1):
        sums.append(P.trace())
        if k < count:
            P = P @ M
    return sums


def series_inv_det(M: Mat, D: int) -> PowerSeries:
    """Expand 1/det(I - tM) up to t^D.

    The t^d coefficient is the complete homogeneous sum h_d of the
    eigenvalues, obtained from the power sums with Newton's identity
    ``d*h_d = sum_{k=1..d} p_k h_{d-k}``.  Entries may be TrigPolys, in
    which case every coefficient is a TrigPoly.
    """
    if D < 0:
        raise ValueError("truncation degree must be non-negative")
    one = TrigPoly(1) if M.is_trig() else (ONE if M.is_exact() else 1.0)
    p = power_sums(M, D)
    h = [one]
    for d in range(1, D + 1):
        acc = p[1] * h[d - 1]
        for k in range(2, d + 1):
            acc = acc + p[k] * h[d - k]
        h.append(acc / d)
    return PowerSeries(tuple(h))
