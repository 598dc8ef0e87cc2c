"""Scalar coefficients: exact rationals (``Fraction``) or binary64 floats.

``fractions.Fraction`` already keeps values in lowest terms with a positive
denominator, and mixing it with a float yields a float, which is exactly the
promotion rule wanted here.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Union

Scalar = Union[Fraction, float]

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)

#: Float coefficients smaller than this are treated as zero when canonicalizing.
PRUNE_TOL = 1e-14


def to_scalar(value) -> Scalar:
    """Coerce ints, rationals, floats and ``"p/q"`` strings to a Scalar."""
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, float):
        return value
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as a scalar")


def is_exact(value) -> bool:
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


def is_negligible(value) -> bool:
    """True for exact zero, or a float below the pruning threshold."""
    if isinstance(value, float):
        return abs(value) < PRUNE_TOL
    return value == 0


def format_scalar(value) -> str:
    if isinstance(value, Fraction):
        return str(value)
    return repr(value)
