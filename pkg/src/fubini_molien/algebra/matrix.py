"""Small dense square matrices over Scalars or TrigPolys."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence, Tuple

from .scalar import ONE, ZERO, is_exact, to_scalar
from .trigpoly import TrigPoly


def _coerce(entry):
    return entry if isinstance(entry, TrigPoly) else to_scalar(entry)


@dataclass(frozen=True)
class Mat:
    """Square matrix stored as a tuple of row tuples.

    Exact matrices are hashable, which the closure enumeration relies on.
    """

    rows: Tuple[tuple, ...]

    def __post_init__(self):
        rows = tuple(tuple(_coerce(x) for x in row) for row in self.rows)
        n = len(rows)
        if n == 0:
            raise ValueError("matrix must have positive dimension")
        for r in rows:
            if len(r) != n:
                raise ValueError(f"matrix is not square: row of length {len(r)} in {n}x{n}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def of(cls, rows: Iterable[Iterable]) -> "Mat":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def diag(cls, values: Sequence) -> "Mat":
        n = len(values)
        return cls(tuple(tuple(values[i] if i == j else ZERO for j in range(n)) for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def entries(self):
        for row in self.rows:
            yield from row

    def is_trig(self) -> bool:
        return any(isinstance(x, TrigPoly) for x in self.entries())

    def is_exact(self) -> bool:
        return all(x.is_exact() if isinstance(x, TrigPoly) else is_exact(x) for x in self.entries())

    def map(self, fn: Callable) -> "Mat":
        return Mat(tuple(tuple(fn(x) for x in row) for row in self.rows))

    def to_trig(self) -> "Mat":
        return self.map(TrigPoly.lift)

    def at(self, phi: float) -> "Mat":
        """Evaluate TrigPoly entries at the angle ``phi`` (floats out)."""
        return self.map(lambda x: x(phi) if isinstance(x, TrigPoly) else float(x))

    def transpose(self) -> "Mat":
        return Mat(tuple(zip(*self.rows)))

    def _check_dim(self, other: "Mat") -> None:
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __matmul__(self, other: "Mat") -> "Mat":
        if not isinstance(other, Mat):
            return NotImplemented
        self._check_dim(other)
        cols = list(zip(*other.rows))
        trig = self.is_trig() or other.is_trig()
        out = []
        for row in self.rows:
            out_row = []
            for col in cols:
                acc = None
                for a, b in zip(row, col):
                    if not isinstance(a, TrigPoly) and a == 0:
                        continue
                    if not isinstance(b, TrigPoly) and b == 0:
                        continue
                    term = a * b
                    acc = term if acc is None else acc + term
                if acc is None:
                    acc = ZERO
                out_row.append(TrigPoly.lift(acc) if trig else acc)
            out.append(tuple(out_row))
        return Mat(tuple(out))

    def __add__(self, other: "Mat") -> "Mat":
        self._check_dim(other)
        return Mat(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other: "Mat") -> "Mat":
        self._check_dim(other)
        return Mat(tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __neg__(self) -> "Mat":
        return self.map(lambda x: -x)

    def scale(self, c) -> "Mat":
        return self.map(lambda x: x * c)

    def __pow__(self, k: int) -> "Mat":
        result = Mat.identity(self.dim)
        for _ in range(k):
            result = result @ self
        return result

    def trace(self):
        acc = self.rows[0][0]
        for i in range(1, self.dim):
            acc = acc + self.rows[i][i]
        return acc

    def max_abs_diff(self, other: "Mat") -> float:
        self._check_dim(other)
        worst = 0.0
        for a, b in zip(self.entries(), other.entries()):
            if isinstance(a, TrigPoly) or isinstance(b, TrigPoly):
                d = TrigPoly.lift(a).max_abs_diff(b)
            else:
                d = abs(float(a - b))
            worst = max(worst, d)
        return worst

    def is_identity(self, tol: float = 0.0) -> bool:
        ident = Mat.identity(self.dim)
        if self.is_exact():
            return self == ident
        return self.max_abs_diff(ident) <= tol

    def block(self, i0: int, j0: int, size: int) -> "Mat":
        return Mat(tuple(tuple(self.rows[i][j0:j0 + size]) for i in range(i0, i0 + size)))

    def determinant(self):
        """Determinant of a Scalar matrix by Gaussian elimination."""
        if self.is_trig():
            raise TypeError("determinant is only defined here for scalar matrices")
        a = [list(r) for r in self.rows]
        n = self.dim
        det = ONE if self.is_exact() else 1.0
        for c in range(n):
            pivot = max(range(c, n), key=lambda r: abs(a[r][c]))
            if a[pivot][c] == 0:
                return ZERO if self.is_exact() else 0.0
            if pivot != c:
                a[c], a[pivot] = a[pivot], a[c]
                det = -det
            det = det * a[c][c]
            for r in range(c + 1, n):
                f = a[r][c] / a[c][c]
                if f != 0:
                    for k in range(c, n):
                        a[r][k] = a[r][k] - f * a[c][k]
        return det

    def inverse(self) -> "Mat":
        """Exact inverse of a rational matrix (Gauss-Jordan)."""
        if not self.is_exact() or self.is_trig():
            raise TypeError("inverse is only provided for exact scalar matrices")
        n = self.dim
        a = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(self.rows)]
        for c in range(n):
            pivot = next((r for r in range(c, n) if a[r][c] != 0), None)
            if pivot is None:
                raise ZeroDivisionError("matrix is singular")
            a[c], a[pivot] = a[pivot], a[c]
            p = a[c][c]
            a[c] = [x / p for x in a[c]]
            for r in range(n):
                if r != c and a[r][c] != 0:
                    f = a[r][c]
                    a[r] = [x - f * y for x, y in zip(a[r], a[c])]
        return Mat(tuple(tuple(row[n:]) for row in a))

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows) + "]"


def block_diag(*blocks: Mat) -> Mat:
    n = sum(b.dim for b in blocks)
    rows = [[ZERO] * n for _ in range(n)]
    offset = 0
    for b in blocks:
        for i in range(b.dim):
            for j in range(b.dim):
                rows[offset + i][offset + j] = b[i, j]
        offset += b.dim
    return Mat.of(rows)


def quarter_turn(k: int = 1) -> Mat:
    """Exact 2x2 rotation by ``k`` multiples of 90 degrees."""
    c, s = [(1, 0), (0, 1), (-1, 0), (0, -1)][k % 4]
    return Mat.of([[c, -s], [s, c]])
