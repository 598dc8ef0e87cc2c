"""Independent checks for the Molien computation.

* Reynolds projector rank on the degree-d monomial basis (exact).
* Trapezoid quadrature over the circle instead of exact Fourier integration,
  with 1/det(I - tM) expanded from numpy's characteristic polynomial rather
  than from power sums.
* Sampling-based invariance checks of explicit polynomials.
"""

from __future__ import annotations

import math
from fractions import Fraction
from math import comb
from typing import List, NamedTuple, Sequence, Tuple

import numpy as np

from .algebra import Mat, Polynomial, PowerSeries, bareiss_rank, monomial, monomial_basis
from .algebra.polynomial import Exponent, substitute
from .errors import SpecError
from .group_model import (
    DEFAULT_CAP,
    FiniteGroup,
    GroupSpec,
    build_element,
    close_group,
    coset_reps,
    finite_factor_group,
)

SEED = 0x4D4F4C49
DEFAULT_BASIS_CAP = 2000


class BasisCapError(ValueError):
    pass


# -- Reynolds operator -------------------------------------------------------


def reynolds_projector(group: FiniteGroup, d: int, basis_cap: int = DEFAULT_BASIS_CAP
                       ) -> Tuple[List[Exponent], List[List[Fraction]]]:
    """Matrix of f -> (1/|G|) sum_g f(g x) on the degree-d monomial basis.

    Column j holds the coordinates of the image of the j-th basis monomial.
    """
    n = group.dim
    size = comb(n + d - 1, d)
    if size > basis_cap:
        raise BasisCapError(f"degree-{d} basis in {n} variables has {size} monomials (cap {basis_cap})")
    basis = monomial_basis(n, d)
    position = {e: k for k, e in enumerate(basis)}
    P = [[Fraction(0)] * size for _ in range(size)]
    for g in group:
        forms = [Polynomial.linear_form(row) for row in g.rows]
        for j, exp in enumerate(basis):
            image = substitute(monomial(exp), forms)
            for e, c in image.terms.items():
                P[position[e]][j] += c
    order = group.order
    return basis, [[x / order for x in row] for row in P]


def reynolds_dim(group: FiniteGroup, d: int, basis_cap: int = DEFAULT_BASIS_CAP) -> int:
    """Dimension of the degree-d invariants, as the rank of the Reynolds projector."""
    if d == 0:
        return 1
    _, P = reynolds_projector(group, d, basis_cap)
    return bareiss_rank(P)


def finite_closure(spec: GroupSpec, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """The whole group of a spec without circle blocks."""
    if spec.circle_blocks:
        raise SpecError("spec has circle blocks; the group is not finite")
    if not spec.is_exact():
        raise SpecError("finite closure needs exact generators")
    return close_group(list(spec.finite_factor) + list(spec.involutions), cap=cap, dim=spec.dim)


def sample_finite_invariant_dims(spec, d_max: int, cap: int = DEFAULT_CAP) -> List[int]:
    group = spec if isinstance(spec, FiniteGroup) else finite_closure(spec, cap)
    return [reynolds_dim(group, d) for d in range(d_max + 1)]


# -- quadrature ---------------------------------------------------------------


def inv_det_series_numpy(M: np.ndarray, D: int) -> np.ndarray:
    """Coefficients of 1/det(I - tM) from the characteristic polynomial.

    det(I - tM) = 1 + a_1 t + ... + a_n t^n where det(xI - M) = x^n + a_1 x^(n-1) + ...;
    the reciprocal follows from the recurrence h_d = -sum_k a_k h_{d-k}.
    """
    a = np.real(np.poly(M))
    h = np.zeros(D + 1)
    h[0] = 1.0
    for d in range(1, D + 1):
        h[d] = -sum(a[k] * h[d - k] for k in range(1, min(d, len(a) - 1) + 1))
    return h


def quad_molien(spec: GroupSpec, D: int, N: int = 64, cap: int = DEFAULT_CAP) -> PowerSeries:
    """Molien series with the circle integral replaced by the N-node trapezoid rule."""
    if N < 1:
        raise ValueError("quadrature needs at least one node")
    cosets = coset_reps(spec.involutions, dim=spec.dim)
    finite = finite_factor_group(spec, cap=cap)
    nodes = [2 * math.pi * j / N for j in range(N)] if spec.circle_blocks else [0.0]
    total = np.zeros(D + 1)
    for index, _ in cosets.items():
        for f in finite:
            M = build_element(spec, index, f)
            for phi in nodes:
                M_phi = np.array([[float(x) for x in row] for row in M.at(phi).rows])
                total += inv_det_series_numpy(M_phi, D)
    total /= len(cosets) * finite.order * len(nodes)
    return PowerSeries(tuple(float(x) for x in total))


# -- invariance of explicit polynomials --------------------------------------


class InvarianceResult(NamedTuple):
    residual: float
    passed: bool


def _sample_angles(samples: int) -> List[float]:
    # equally spaced plus two angles that are irrational multiples of pi
    return [2 * math.pi * k / samples for k in range(samples)] + [1.0, math.sqrt(2.0)]


def check_invariant(f: Polynomial, gens: Sequence[Mat], samples: int = 16, tol: float = 1e-9,
                    seed: int = SEED) -> InvarianceResult:
    """Max of |f(g x) - f(x)| over generators, sampled angles and random points.

    Generators with TrigPoly entries are evaluated at the sampled angles;
    points are drawn uniformly from [-1, 1]^dim with a fixed seed.
    """
    rng = np.random.default_rng(seed)
    worst = 0.0
    mats = []
    for g in gens:
        if g.dim != f.nvars:
            raise ValueError("generator dimension does not match the polynomial")
        if g.is_trig():
            mats.extend(g.at(phi) for phi in _sample_angles(samples))
        else:
            mats.append(g)
    arrays = [np.array([[float(x) for x in row] for row in m.rows]) for m in mats]
    points = rng.uniform(-1.0, 1.0, size=(samples, f.nvars))
    for x in points:
        fx = f(x)
        for A in arrays:
            worst = max(worst, abs(f(A @ x) - fx))
    return InvarianceResult(float(worst), bool(worst < tol))
