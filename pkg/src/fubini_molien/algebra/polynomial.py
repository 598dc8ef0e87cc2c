"""Sparse multivariate polynomials with Scalar coefficients."""

from __future__ import annotations

from itertools import combinations_with_replacement
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .matrix import Mat
from .scalar import Scalar, format_scalar, is_negligible, to_scalar

Exponent = Tuple[int, ...]


class Polynomial:
    """Polynomial in ``nvars`` variables x_1..x_n, stored as exponent -> coefficient."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], object] = ()):
        self.nvars = nvars
        clean: Dict[Exponent, Scalar] = {}
        for exp, coeff in dict(terms).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} does not have {nvars} entries")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            coeff = to_scalar(coeff)
            clean[exp] = clean[exp] + coeff if exp in clean else coeff
        self.terms = {e: c for e, c in clean.items() if not is_negligible(c)}

    @classmethod
    def constant(cls, nvars: int, c) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Polynomial":
        exp = [0] * nvars
        exp[i] = 1
        return cls(nvars, {tuple(exp): 1})

    @classmethod
    def linear_form(cls, coeffs: Sequence) -> "Polynomial":
        n = len(coeffs)
        return cls(n, {tuple(int(i == j) for j in range(n)): c for i, c in enumerate(coeffs)})

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return Polynomial(self.nvars, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            c = to_scalar(other)
            return Polynomial(self.nvars, {e: v * c for e, v in self.terms.items()})
        out: Dict[Exponent, Scalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = c1 * c2
                out[e] = out[e] + v if e in out else v
        return Polynomial(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        result = Polynomial.constant(self.nvars, 1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None

    def __call__(self, x: Sequence[float]) -> float:
        total = 0.0
        for exp, c in self.terms.items():
            term = float(c)
            for xi, e in zip(x, exp):
                if e:
                    term *= xi ** e
            total += term
        return total

    def compose_linear(self, M: Mat) -> "Polynomial":
        """The polynomial x -> f(Mx) for a Scalar matrix M."""
        if M.dim != self.nvars:
            raise ValueError("matrix dimension does not match the number of variables")
        forms = [Polynomial.linear_form(row) for row in M.rows]
        return substitute(self, forms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(exp) if e
            )
            parts.append(f"{format_scalar(c)}*{mono}" if mono else format_scalar(c))
        return " + ".join(parts)


def substitute(f: Polynomial, forms: Sequence[Polynomial]) -> Polynomial:
    """Replace x_i by ``forms[i]`` in ``f``, caching powers of each form."""
    nv = forms[0].nvars if forms else f.nvars
    cache: Dict[Tuple[int, int], Polynomial] = {}

    def power(i: int, e: int) -> Polynomial:
        key = (i, e)
        if key not in cache:
            cache[key] = Polynomial.constant(nv, 1) if e == 0 else power(i, e - 1) * forms[i]
        return cache[key]

    out = Polynomial(nv)
    for exp, c in f.terms.items():
        term = Polynomial.constant(nv, c)
        for i, e in enumerate(exp):
            if e:
                term = term * power(i, e)
        out = out + term
    return out


def monomial_basis(nvars: int, degree: int) -> List[Exponent]:
    """Exponent vectors of all degree-``degree`` monomials, in a fixed order."""
    basis = []
    for combo in combinations_with_replacement(range(nvars), degree):
        exp = [0] * nvars
        for i in combo:
            exp[i] += 1
        basis.append(tuple(exp))
    return basis


def monomial(exp: Iterable[int]) -> Polynomial:
    exp = tuple(exp)
    return Polynomial(len(exp), {exp: 1})
