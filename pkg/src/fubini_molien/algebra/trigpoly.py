"""Finite Fourier expansions in a single angle.

A :class:`TrigPoly` represents ``a0 + sum_k (a_k cos k*phi + b_k sin k*phi)``
with finitely many nonzero terms.  Products are formed with the
product-to-sum identities, so integrating over the circle is exact: the
normalized integral of a trigonometric polynomial is its constant term.
"""

from __future__ import annotations

import math
from typing import Dict, Mapping, Optional

from .scalar import HALF, ZERO, Scalar, format_scalar, is_exact, is_negligible, to_scalar


def _clean(coeffs: Dict[int, Scalar]) -> Dict[int, Scalar]:
    return {k: c for k, c in sorted(coeffs.items()) if not is_negligible(c)}


def _accumulate(target: Dict[int, Scalar], k: int, value) -> None:
    if k in target:
        target[k] = target[k] + value
    else:
        target[k] = value


class TrigPoly:
    """Immutable trigonometric polynomial with Scalar coefficients.

    The constant term is stored as the cosine coefficient of harmonic 0.
    Negligible coefficients (exact zeros, floats below ``PRUNE_TOL``) are
    dropped on construction, so equality is coefficient-wise.
    """

    __slots__ = ("_cos", "_sin")

    def __init__(
        self,
        constant=0,
        cos: Optional[Mapping[int, object]] = None,
        sin: Optional[Mapping[int, object]] = None,
    ):
        cos_part: Dict[int, Scalar] = {}
        sin_part: Dict[int, Scalar] = {}
        constant = to_scalar(constant)
        if not is_negligible(constant):
            cos_part[0] = constant
        for k, c in (cos or {}).items():
            if k < 1:
                raise ValueError(f"harmonic index must be >= 1, got {k}")
            _accumulate(cos_part, k, to_scalar(c))
        for k, c in (sin or {}).items():
            if k < 1:
                raise ValueError(f"harmonic index must be >= 1, got {k}")
            _accumulate(sin_part, k, to_scalar(c))
        self._cos = _clean(cos_part)
        self._sin = _clean(sin_part)

    @classmethod
    def _raw(cls, cos_part: Dict[int, Scalar], sin_part: Dict[int, Scalar]) -> "TrigPoly":
        obj = cls.__new__(cls)
        sin_part.pop(0, None)
        obj._cos = _clean(cos_part)
        obj._sin = _clean(sin_part)
        return obj

    # -- constructors -------------------------------------------------------

    @classmethod
    def cos_k(cls, k: int, coeff=1) -> "TrigPoly":
        return cls(cos={k: coeff})

    @classmethod
    def sin_k(cls, k: int, coeff=1) -> "TrigPoly":
        return cls(sin={k: coeff})

    @classmethod
    def lift(cls, value) -> "TrigPoly":
        if isinstance(value, TrigPoly):
            return value
        return cls(value)

    # -- accessors ----------------------------------------------------------

    @property
    def constant(self) -> Scalar:
        return self._cos.get(0, ZERO)

    @property
    def cos_coeffs(self) -> Dict[int, Scalar]:
        return {k: c for k, c in self._cos.items() if k > 0}

    @property
    def sin_coeffs(self) -> Dict[int, Scalar]:
        return dict(self._sin)

    @property
    def max_harmonic(self) -> int:
        return max(list(self._cos) + list(self._sin) + [0])

    def is_constant(self) -> bool:
        return not self._sin and all(k == 0 for k in self._cos)

    def is_exact(self) -> bool:
        return all(is_exact(c) for c in self._cos.values()) and all(
            is_exact(c) for c in self._sin.values()
        )

    def haar(self) -> Scalar:
        """Normalized circle integral (1/2pi) * int_0^{2pi} f(phi) dphi."""
        return self.constant

    def __call__(self, phi: float) -> float:
        total = 0.0
        for k, c in self._cos.items():
            total += float(c) * math.cos(k * phi)
        for k, c in self._sin.items():
            total += float(c) * math.sin(k * phi)
        return total

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other) -> "TrigPoly":
        if not isinstance(other, TrigPoly):
            try:
                other = TrigPoly(other)
            except TypeError:
                return NotImplemented
        cos_part = dict(self._cos)
        sin_part = dict(self._sin)
        for k, c in other._cos.items():
            _accumulate(cos_part, k, c)
        for k, c in other._sin.items():
            _accumulate(sin_part, k, c)
        return TrigPoly._raw(cos_part, sin_part)

    __radd__ = __add__

    def __neg__(self) -> "TrigPoly":
        return TrigPoly._raw(
            {k: -c for k, c in self._cos.items()}, {k: -c for k, c in self._sin.items()}
        )

    def __sub__(self, other) -> "TrigPoly":
        return self + (-TrigPoly.lift(other))

    def __rsub__(self, other) -> "TrigPoly":
        return (-self) + other

    def _scale(self, factor) -> "TrigPoly":
        return TrigPoly._raw(
            {k: c * factor for k, c in self._cos.items()},
            {k: c * factor for k, c in self._sin.items()},
        )

    def __mul__(self, other) -> "TrigPoly":
        if not isinstance(other, TrigPoly):
            try:
                return self._scale(to_scalar(other))
            except TypeError:
                return NotImplemented
        cos_part: Dict[int, Scalar] = {}
        sin_part: Dict[int, Scalar] = {}
        # cos a cos b = (cos(a-b) + cos(a+b)) / 2
        # sin a sin b = (cos(a-b) - cos(a+b)) / 2
        # sin a cos b = (sin(a+b) + sin(a-b)) / 2
        for a, ca in self._cos.items():
            for b, cb in other._cos.items():
                v = ca * cb * HALF
                _accumulate(cos_part, abs(a - b), v)
                _accumulate(cos_part, a + b, v)
            for b, sb in other._sin.items():
                v = ca * sb * HALF
                _accumulate(sin_part, a + b, v)
                d = b - a
                if d > 0:
                    _accumulate(sin_part, d, v)
                elif d < 0:
                    _accumulate(sin_part, -d, -v)
        for a, sa in self._sin.items():
            for b, cb in other._cos.items():
                v = sa * cb * HALF
                _accumulate(sin_part, a + b, v)
                d = a - b
                if d > 0:
                    _accumulate(sin_part, d, v)
                elif d < 0:
                    _accumulate(sin_part, -d, -v)
            for b, sb in other._sin.items():
                v = sa * sb * HALF
                _accumulate(cos_part, abs(a - b), v)
                _accumulate(cos_part, a + b, -v)
        return TrigPoly._raw(cos_part, sin_part)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "TrigPoly":
        if isinstance(other, TrigPoly):
            if not other.is_constant():
                return NotImplemented
            other = other.constant
        other = to_scalar(other)
        return TrigPoly._raw(
            {k: c / other for k, c in self._cos.items()},
            {k: c / other for k, c in self._sin.items()},
        )

    def __pow__(self, n: int) -> "TrigPoly":
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = TrigPoly(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison / display ----------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, TrigPoly):
            try:
                other = TrigPoly(other)
            except TypeError:
                return NotImplemented
        return self._cos == other._cos and self._sin == other._sin

    __hash__ = None

    def max_abs_diff(self, other) -> float:
        diff = self - other
        values = list(diff._cos.values()) + list(diff._sin.values())
        return max((abs(float(v)) for v in values), default=0.0)

    def __repr__(self) -> str:
        parts = []
        for k, c in self._cos.items():
            parts.append(format_scalar(c) if k == 0 else f"{format_scalar(c)}*cos({k}φ)")
        for k, c in self._sin.items():
            parts.append(f"{format_scalar(c)}*sin({k}φ)")
        return "TrigPoly(" + (" + ".join(parts) or "0") + ")"


def haar(value) -> Scalar:
    """Circle Haar integral of a TrigPoly; plain scalars are their own average."""
    if isinstance(value, TrigPoly):
        return value.haar()
    return value

