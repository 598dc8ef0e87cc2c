"""Molien series by Haar averaging.

For a finite group the Haar integral is the uniform average.  For
Gamma = Gamma_+ x| (Z2 x ... x Z2) the integral over Gamma splits into 2^n
integrals over Gamma_+, one per coset representative lambda^i, each with
weight 1/2^n.  Gamma_+ is (circle) x (finite factor) and its Haar measure is
the product measure, so each Gamma_+ integral is a finite average of exact
circle integrals.
"""

from __future__ import annotations

from typing import Optional

from .algebra import Mat, PowerSeries, haar, series_inv_det
from .group_model import (
    DEFAULT_CAP,
    FiniteGroup,
    GroupSpec,
    build_element,
    coset_reps,
    finite_factor_group,
)

DEFAULT_DEGREE = 16


def _average(total: PowerSeries, count: int) -> PowerSeries:
    return total / count


def _accumulate(total: Optional[PowerSeries], term: PowerSeries) -> PowerSeries:
    return term if total is None else total + term


def molien_finite(group: FiniteGroup, D: int = DEFAULT_DEGREE) -> PowerSeries:
    """(1/|G|) * sum over G of 1/det(I - t g), exact for rational matrices."""
    total = None
    for g in group:
        total = _accumulate(total, series_inv_det(g, D))
    return _average(total, group.order)


def circle_average(M: Mat, D: int) -> PowerSeries:
    """Haar integral over phi of the expansion of 1/det(I - t M(phi))."""
    return series_inv_det(M, D).map(haar)


def molien_fubini(spec: GroupSpec, D: int = DEFAULT_DEGREE, cap: int = DEFAULT_CAP) -> PowerSeries:
    """Molien series of the group described by ``spec``.

    Contributions are accumulated in lexicographic coset order, then in
    finite-factor enumeration order, so float results are reproducible.
    Coefficients stay exact rationals unless an involution carries float
    entries.
    """
    cosets = coset_reps(spec.involutions, dim=spec.dim)
    finite = finite_factor_group(spec, cap=cap)
    total = None
    for index, _ in cosets.items():
        for f in finite:
            M = build_element(spec, index, f)
            if not spec.circle_blocks:
                M = M.map(lambda x: x.constant)
            total = _accumulate(total, circle_average(M, D))
    return _average(total, len(cosets) * finite.order)


def molien_fubini_n1(spec: GroupSpec, D: int = DEFAULT_DEGREE, cap: int = DEFAULT_CAP) -> PowerSeries:
    """Index-2 case (one involution): (1/2) * (int f(gamma) + int f(lambda gamma))."""
    if spec.n_involutions != 1:
        raise ValueError(f"expected exactly one involution, got {spec.n_involutions}")
    return molien_fubini(spec, D, cap=cap)


def fubini_finite(sigma: FiniteGroup, involutions, D: int) -> PowerSeries:
    """(1/2^n) * sum_i (1/|Sigma|) * sum_sigma 1/det(I - t lambda^i sigma) over exact matrices."""
    cosets = coset_reps(list(involutions), dim=sigma.dim)
    total = None
    for rep in cosets.reps:
        for s in sigma:
            total = _accumulate(total, series_inv_det(rep @ s, D))
    return _average(total, len(cosets) * sigma.order)


__all__ = [
    "DEFAULT_DEGREE",
    "circle_average",
    "fubini_finite",
    "molien_finite",
    "molien_fubini",
    "molien_fubini_n1",
]
