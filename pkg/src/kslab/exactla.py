"""Dense exact linear algebra over any coefficient field.

Gauss-Jordan elimination with first-nonzero pivoting, so the reduced form,
the nullspace basis and the particular solution are all deterministic.
Prime fields run on plain ints; other fields use their element arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Any, Sequence

from .scalar import Field, PrimeField


class DimensionError(ValueError):
    pass


class ExactMatrix:
    """Row-major matrix whose entries all live in one field."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence[Any]], field: Field, cols: int | None = None):
        rows = [[field(x) for x in row] for row in entries]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != cols:
                raise DimensionError(f"ragged row: expected {cols} entries, got {len(row)}")
        self.field = field
        self.rows = len(rows)
        self.cols = cols
        self.entries = rows

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Any]], field: Field, rows: int) -> "ExactMatrix":
        for c in columns:
            if len(c) != rows:
                raise DimensionError("column length mismatch")
        return cls([[c[i] for c in columns] for i in range(rows)], field, cols=len(columns))

    @classmethod
    def identity(cls, n: int, field: Field) -> "ExactMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], field, cols=n)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            self.field,
            cols=self.rows,
        )

    def __matmul__(self, vec: Sequence[Any]) -> list:
        if len(vec) != self.cols:
            raise DimensionError(f"vector of length {len(vec)} against {self.cols} columns")
        zero = self.field.zero
        out = []
        for row in self.entries:
            acc = zero
            for a, x in zip(row, vec):
                if a and x:
                    acc = acc + a * x
            out.append(acc)
        return out

    def __eq__(self, other):
        return (
            isinstance(other, ExactMatrix)
            and self.field == other.field
            and (self.rows, self.cols) == (other.rows, other.cols)
            and self.entries == other.entries
        )

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols} over {self.field.name})"


# ----------------------------------------------------------------------------
# elimination kernels; both return (reduced rows, pivot columns, row origins)


def _rref_modp(rows: list[list[int]], npiv: int, p: int):
    origin = list(range(len(rows)))
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(npiv):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pr is None:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
            origin[r], origin[pr] = origin[pr], origin[r]
        inv = pow(rows[r][c], -1, p)
        prow = rows[r] = [x * inv % p for x in rows[r]]
        nz = [j for j, x in enumerate(prow) if x]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    row = rows[i]
                    for j in nz:
                        row[j] = (row[j] - f * prow[j]) % p
        pivots.append(c)
        r += 1
    return rows, pivots, origin


def _rref_generic(rows: list[list[Any]], npiv: int, one):
    origin = list(range(len(rows)))
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(npiv):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pr is None:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
            origin[r], origin[pr] = origin[pr], origin[r]
        inv = one / rows[r][c]
        prow = rows[r] = [x * inv if x else x for x in rows[r]]
        nz = [j for j, x in enumerate(prow) if x]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    row = rows[i]
                    for j in nz:
                        row[j] = row[j] - f * prow[j]
        pivots.append(c)
        r += 1
    return rows, pivots, origin


def _reduce(field: Field, rows: list[list[Any]], npiv: int):
    if isinstance(field, PrimeField):
        p = field.p
        raw = [[int(x) for x in row] for row in rows]
        red, pivots, origin = _rref_modp(raw, npiv, p)
        return [[field(x) for x in row] for row in red], pivots, origin
    return _rref_generic([list(row) for row in rows], npiv, field.one)


@dataclass
class Echelon:
    """Reduced row echelon form of a matrix, optionally with the row transform.

    ``transform @ M == reduced`` when the transform was requested.  ``origin[i]``
    is the original row that ended up at position ``i``.
    """

    field: Field
    cols: int
    reduced: list[list[Any]]
    pivots: list[int]
    origin: list[int]
    transform: list[list[Any]] | None = dc_field(default=None, repr=False)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def nullity(self) -> int:
        return self.cols - self.rank

    def free_columns(self) -> list[int]:
        piv = set(self.pivots)
        return [j for j in range(self.cols) if j not in piv]

    def nullspace(self) -> list[list[Any]]:
        zero, one = self.field.zero, self.field.one
        basis = []
        for free in self.free_columns():
            v = [zero] * self.cols
            v[free] = one
            for i, pc in enumerate(self.pivots):
                v[pc] = -self.reduced[i][free]
            basis.append(v)
        return basis

    def reduce_rhs(self, b: Sequence[Any]) -> list[Any]:
        if self.transform is None:
            raise ValueError("echelon form was computed without its transform")
        if len(b) != len(self.transform):
            raise DimensionError(f"right-hand side of length {len(b)} against {len(self.transform)} rows")
        b = [self.field(x) for x in b]
        zero = self.field.zero
        out = []
        for row in self.transform:
            acc = zero
            for t, x in zip(row, b):
                if t and x:
                    acc = acc + t * x
            out.append(acc)
        return out

    def solve(self, b: Sequence[Any]) -> list[Any] | None:
        tb = self.reduce_rhs(b)
        if any(tb[self.rank :]):
            return None
        x = [self.field.zero] * self.cols
        for i, pc in enumerate(self.pivots):
            x[pc] = tb[i]
        return x

    def inconsistent_rows(self, b: Sequence[Any]) -> list[int]:
        """Original indices of rows left as ``0 = nonzero`` after reduction."""
        tb = self.reduce_rhs(b)
        return [self.origin[i] for i in range(self.rank, len(tb)) if tb[i]]


def echelon(m: ExactMatrix, with_transform: bool = False) -> Echelon:
    f = m.field
    if with_transform:
        ident = [[f.one if i == j else f.zero for j in range(m.rows)] for i in range(m.rows)]
        rows = [m.entries[i] + ident[i] for i in range(m.rows)]
    else:
        rows = m.entries
    red, pivots, origin = _reduce(f, rows, m.cols)
    transform = None
    if with_transform:
        transform = [row[m.cols :] for row in red]
        red = [row[: m.cols] for row in red]
    return Echelon(f, m.cols, red, pivots, origin, transform)


def rank(m: ExactMatrix) -> int:
    return echelon(m).rank


def nullspace(m: ExactMatrix) -> list[list[Any]]:
    """Basis of {v : M v = 0}, one vector per free column with a 1 there."""
    return echelon(m).nullspace()


def solve(m: ExactMatrix, b: Sequence[Any]) -> list[Any] | None:
    """Some x with M x = b (free variables set to zero), or None."""
    if len(b) != m.rows:
        raise DimensionError(f"right-hand side of length {len(b)} against {m.rows} rows")
    f = m.field
    rows = [m.entries[i] + [f(b[i])] for i in range(m.rows)]
    red, pivots, _ = _reduce(f, rows, m.cols)
    if any(red[i][m.cols] for i in range(len(pivots), m.rows)):
        return None
    x = [f.zero] * m.cols
    for i, pc in enumerate(pivots):
        x[pc] = red[i][m.cols]
    return x


def monomial_basis(max_total_degree: int, mixed_only: bool = False) -> list[tuple[int, int]]:
    """Exponent pairs of total degree <= d, graded, z-exponent descending within a degree."""
    if max_total_degree < 0:
        return []
    out = []
    for t in range(max_total_degree + 1):
        for n in range(t, -1, -1):
            m = t - n
            if mixed_only and (n == 0 or m == 0):
                continue
            out.append((n, m))
    return out
