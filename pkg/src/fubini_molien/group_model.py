"""Group specifications, finite closures, coset representatives and the
semidirect-structure checker."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import Mat, TrigPoly
from .algebra.scalar import ZERO
from .errors import ClosureError, SpecError

#: Tolerance for float involution / commutation checks.
INVOLUTION_TOL = 1e-12
#: Tolerance for the float path of :func:`check_preserves_form`.
FORM_TOL = 1e-10
DEFAULT_CAP = 4096


def _describe(kind: str, index: int) -> str:
    return f"{kind} {index + 1}"


@dataclass(frozen=True)
class GroupSpec:
    """Declarative description of Gamma = Gamma_+ x| (Z2(l_1) x ... x Z2(l_n)).

    ``circle_blocks`` holds 0-based coordinate pairs (i, j) that all carry the
    same rotation by phi; ``finite_factor`` generates the finite part of
    Gamma_+; ``involutions`` are the commuting coset generators.
    """

    dim: int
    circle_blocks: Tuple[Tuple[int, int], ...] = ()
    finite_factor: Tuple[Mat, ...] = ()
    involutions: Tuple[Mat, ...] = ()
    theta: Optional[float] = None
    signature: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "circle_blocks", tuple(tuple(b) for b in self.circle_blocks))
        object.__setattr__(self, "finite_factor", tuple(self.finite_factor))
        object.__setattr__(self, "involutions", tuple(self.involutions))
        if self.signature is not None:
            object.__setattr__(self, "signature", tuple(self.signature))
        self.validate()

    def validate(self) -> None:
        if self.dim < 1:
            raise SpecError("dim must be a positive integer")
        seen = set()
        for k, (i, j) in enumerate(self.circle_blocks):
            if i == j or not (0 <= i < self.dim and 0 <= j < self.dim):
                raise SpecError(f"circle block {k + 1} ({i + 1}, {j + 1}) is not a valid index pair")
            if i in seen or j in seen:
                raise SpecError(f"circle block {k + 1} overlaps an earlier block")
            seen.update((i, j))
        for kind, mats in (("finite generator", self.finite_factor), ("involution", self.involutions)):
            for k, m in enumerate(mats):
                if m.dim != self.dim:
                    raise SpecError(f"{_describe(kind, k)} is {m.dim}x{m.dim}, expected {self.dim}x{self.dim}")
                if m.is_trig():
                    raise SpecError(f"{_describe(kind, k)} must have scalar entries")
        for k, m in enumerate(self.finite_factor):
            if not m.is_exact():
                raise SpecError(f"{_describe('finite generator', k)} must have exact entries")
        check_involutions(self.involutions)
        if self.signature is not None:
            if len(self.signature) != self.dim or any(s not in (1, -1) for s in self.signature):
                raise SpecError("signature must be a list of +1/-1 of length dim")

    @property
    def n_involutions(self) -> int:
        return len(self.involutions)

    def is_exact(self) -> bool:
        return all(m.is_exact() for m in self.finite_factor + self.involutions)

    def is_finite(self) -> bool:
        return not self.circle_blocks


def _close(a: Mat, b: Mat) -> bool:
    if a.is_exact() and b.is_exact():
        return a == b
    return a.max_abs_diff(b) <= INVOLUTION_TOL


def check_involutions(involutions: Sequence[Mat]) -> None:
    """Raise :class:`SpecError` unless every matrix squares to I and all commute."""
    for k, lam in enumerate(involutions):
        if not _close(lam @ lam, Mat.identity(lam.dim)):
            raise SpecError(f"involution {k + 1} does not square to the identity: {lam}")
    for a in range(len(involutions)):
        for b in range(a + 1, len(involutions)):
            la, lb = involutions[a], involutions[b]
            if not _close(la @ lb, lb @ la):
                raise SpecError(f"involutions {a + 1} and {b + 1} do not commute")


# -- finite groups ----------------------------------------------------------


@dataclass(frozen=True)
class FiniteGroup:
    elements: Tuple[Mat, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def dim(self) -> int:
        return self.elements[0].dim

    def __contains__(self, m: Mat) -> bool:
        return m in self._members

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    @cached_property
    def _members(self) -> frozenset:
        return frozenset(self.elements)


def close_group(generators: Sequence[Mat], cap: int = DEFAULT_CAP, dim: Optional[int] = None) -> FiniteGroup:
    """Enumerate the finite matrix group generated by ``generators``.

    Breadth-first closure under right multiplication by generators; for a
    finite group this also yields all inverses.  Raises
    :class:`ClosureError` when more than ``cap`` elements appear.
    """
    if not generators and dim is None:
        raise ValueError("need a dimension to close an empty generator list")
    n = dim if dim is not None else generators[0].dim
    for k, g in enumerate(generators):
        if g.dim != n:
            raise ValueError(f"generator {k + 1} has dimension {g.dim}, expected {n}")
        if g.is_trig() or not g.is_exact():
            raise ClosureError(f"generator {k + 1} is not exact; float closure is refused")
        if g.determinant() == 0:
            raise ClosureError(f"generator {k + 1} is not invertible")
    ident = Mat.identity(n)
    elements: List[Mat] = [ident]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in generators:
                p = a @ g
                if p not in seen:
                    seen.add(p)
                    elements.append(p)
                    nxt.append(p)
                    if len(elements) > cap:
                        raise ClosureError(f"group order exceeds cap {cap}")
        frontier = nxt
    return FiniteGroup(tuple(elements))


# -- coset representatives --------------------------------------------------


@dataclass(frozen=True)
class CosetSystem:
    """Representatives lambda^i for i in {0,1}^n, lexicographic with i_1 most significant."""

    indices: Tuple[Tuple[int, ...], ...]
    reps: Tuple[Mat, ...]

    def __len__(self) -> int:
        return len(self.reps)

    def __getitem__(self, index) -> Mat:
        if isinstance(index, int):
            return self.reps[index]
        return self.reps[self.indices.index(tuple(index))]

    def items(self):
        return zip(self.indices, self.reps)


def coset_power(involutions: Sequence[Mat], index: Sequence[int], dim: int) -> Mat:
    if len(index) != len(involutions) or any(b not in (0, 1) for b in index):
        raise IndexError(f"coset index {tuple(index)} is not in {{0,1}}^{len(involutions)}")
    m = Mat.identity(dim)
    for lam, bit in zip(involutions, index):
        if bit:
            m = m @ lam
    return m


def coset_reps(involutions: Sequence[Mat], dim: Optional[int] = None) -> CosetSystem:
    check_involutions(involutions)
    if dim is None:
        if not involutions:
            raise ValueError("need a dimension when there are no involutions")
        dim = involutions[0].dim
    indices = tuple(product((0, 1), repeat=len(involutions)))
    reps = tuple(coset_power(involutions, i, dim) for i in indices)
    for a in range(len(reps)):
        for b in range(a):
            if _close(reps[a], reps[b]):
                raise SpecError(
                    f"coset representatives {indices[b]} and {indices[a]} coincide; "
                    "the involutions are not independent"
                )
    return CosetSystem(indices, reps)


# -- elements of Gamma -------------------------------------------------------


def circle_element(spec: GroupSpec) -> Mat:
    """gamma(phi): R_phi on each circle block, identity elsewhere, TrigPoly entries."""
    n = spec.dim
    rows = [[TrigPoly(1) if i == j else TrigPoly(0) for j in range(n)] for i in range(n)]
    for i, j in spec.circle_blocks:
        rows[i][i] = TrigPoly.cos_k(1)
        rows[i][j] = TrigPoly.sin_k(1, -1)
        rows[j][i] = TrigPoly.sin_k(1)
        rows[j][j] = TrigPoly.cos_k(1)
    return Mat.of(rows)


def build_element(spec: GroupSpec, coset_index: Sequence[int], finite_elem: Optional[Mat] = None) -> Mat:
    """lambda^i * gamma(phi) * finite_elem as a matrix over TrigPoly."""
    rep = coset_power(spec.involutions, coset_index, spec.dim)
    m = rep @ circle_element(spec)
    if finite_elem is not None:
        if finite_elem.dim != spec.dim:
            raise ValueError("finite element has the wrong dimension")
        m = m @ finite_elem
    return m.to_trig()


def finite_factor_group(spec: GroupSpec, cap: int = DEFAULT_CAP) -> FiniteGroup:
    return close_group(list(spec.finite_factor), cap=cap, dim=spec.dim)


def spec_generators(spec: GroupSpec) -> List[Mat]:
    """Topological generators of Gamma: gamma(phi), finite generators, involutions."""
    gens: List[Mat] = []
    if spec.circle_blocks:
        gens.append(circle_element(spec))
    gens.extend(spec.finite_factor)
    gens.extend(spec.involutions)
    return gens


def check_preserves_form(M: Mat, signature: Sequence[int]) -> Tuple[bool, float]:
    """Whether M^T J M = J for J = diag(signature); returns (ok, max residual)."""
    if len(signature) != M.dim:
        raise ValueError("signature length does not match the matrix dimension")
    J = Mat.diag(list(signature))
    residual_mat = M.transpose() @ J @ M - J
    residual = residual_mat.max_abs_diff(Mat.diag([ZERO] * M.dim))
    if M.is_exact():
        return residual == 0, residual
    return residual < FORM_TOL, residual


# -- semidirect structure ----------------------------------------------------


@dataclass
class DecompositionReport:
    sigma_normal: bool
    delta_normal: bool
    product_covers: bool
    intersections_trivial: bool
    sigma_order: int = 0
    gamma_order: int = 0
    delta_normal_each: List[bool] = field(default_factory=list)
    failures: List[str] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return self.sigma_normal and self.delta_normal and self.product_covers and self.intersections_trivial

    def flags(self) -> Dict[str, bool]:
        return {
            "sigma_normal": self.sigma_normal,
            "delta_normal": self.delta_normal,
            "product_covers": self.product_covers,
            "intersections_trivial": self.intersections_trivial,
            "overall": self.overall,
        }

    def to_dict(self) -> dict:
        out = self.flags()
        out.update(
            sigma_order=self.sigma_order,
            gamma_order=self.gamma_order,
            delta_normal_each=list(self.delta_normal_each),
            failures=list(self.failures),
        )
        return out


def is_normal(sub: FiniteGroup, group: FiniteGroup) -> bool:
    for g in group:
        g_inv = g.inverse()
        for s in sub:
            if g @ s @ g_inv not in sub:
                return False
    return True


def verify_semidirect(sigma_gens: Sequence[Mat], gammas: Sequence[Mat], cap: int = DEFAULT_CAP,
                      dim: Optional[int] = None) -> DecompositionReport:
    """Check Gamma = Sigma x| (Z2(g_1) x ... x Z2(g_n)) by brute force.

    Every element of the closures is visited, so this is only meant for
    small finite instantiations.
    """
    gens = list(sigma_gens) + list(gammas)
    if dim is None:
        if not gens:
            raise ValueError("need a dimension when no generators are given")
        dim = gens[0].dim
    ident = Mat.identity(dim)
    for k, g in enumerate(gammas):
        if g @ g != ident:
            raise SpecError(f"gamma {k + 1} is not an involution: {g}")

    sigma = close_group(list(sigma_gens), cap=cap, dim=dim)
    whole = close_group(gens, cap=cap, dim=dim)
    complement = close_group(list(gammas), cap=cap, dim=dim)
    failures: List[str] = []

    sigma_normal = is_normal(sigma, whole)
    if not sigma_normal:
        failures.append("sigma_normal: Sigma is not normal in Gamma")

    commute = all(a @ b == b @ a for a in gammas for b in gammas)
    outside = all(g not in sigma for g in gammas)
    covers = {s @ h for s in sigma for h in complement} == set(whole.elements)
    product_covers = commute and outside and covers
    if not commute:
        failures.append("product_covers: the gammas do not commute")
    if not outside:
        failures.append("product_covers: some gamma lies in Sigma")
    if not covers:
        failures.append("product_covers: Sigma * <gammas> does not exhaust Gamma")

    trivial = [m for m in complement if m in sigma] == [ident]
    independent = complement.order == 2 ** len(gammas)
    intersections_trivial = trivial and independent
    if not trivial:
        failures.append("intersections_trivial: Sigma and <gammas> share a non-identity element")
    if not independent:
        failures.append(
            f"intersections_trivial: <gammas> has order {complement.order}, expected {2 ** len(gammas)}"
        )

    delta_each = []
    for i in range(1, len(gammas) + 1):
        delta = close_group(list(sigma_gens) + list(gammas[:i]), cap=cap, dim=dim)
        ok = is_normal(delta, whole)
        delta_each.append(ok)
        if not ok:
            failures.append(f"delta_normal: Sigma*<g_1..g_{i}> is not normal in Gamma")

    return DecompositionReport(
        sigma_normal=sigma_normal,
        delta_normal=all(delta_each),
        product_covers=product_covers,
        intersections_trivial=intersections_trivial,
        sigma_order=sigma.order,
        gamma_order=whole.order,
        delta_normal_each=delta_each,
        failures=failures,
    )
