"""Dense exact linear algebra over any supported field.

Matrices are immutable row-major grids of field elements.  Subspaces are
stored through their unique reduced row echelon basis, which makes
subspace equality decidable by structural comparison.  Everything here is
small (at most 16 columns), so plain Gaussian elimination with zero
skipping is all that is needed.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .scalars import FieldDescriptor, FieldElement, inv


class ShapeMismatch(ValueError):
    """Operand dimensions are incompatible."""


Vector = tuple[FieldElement, ...]


class Matrix:
    """Immutable dense matrix with entries in a single field."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: FieldDescriptor, rows: Iterable[Sequence[FieldElement]]):
        rows = tuple(tuple(row) for row in rows)
        ncols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != ncols:
                raise ShapeMismatch("ragged rows")
            for x in row:
                if x.field != field:
                    raise ShapeMismatch("entry from a different field")
        self.field = field
        self.nrows = len(rows)
        self.ncols = ncols
        self.rows = rows

    @classmethod
    def identity(cls, field: FieldDescriptor, n: int) -> Matrix:
        zero, one = field.zero(), field.one()
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field: FieldDescriptor, nrows: int, ncols: int) -> Matrix:
        zero = field.zero()
        return cls(field, [[zero] * ncols for _ in range(nrows)])

    @classmethod
    def diagonal(cls, field: FieldDescriptor, entries: Sequence[FieldElement]) -> Matrix:
        zero = field.zero()
        n = len(entries)
        return cls(field, [[entries[i] if i == j else zero for j in range(n)] for i in range(n)])

    def entry(self, i: int, j: int) -> FieldElement:
        return self.rows[i][j]

    def transpose(self) -> Matrix:
        return Matrix(self.field, zip(*self.rows)) if self.nrows else Matrix(self.field, [])

    def __add__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        return Matrix(
            self.field,
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
        )

    def __sub__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        return Matrix(
            self.field,
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
        )

    def __neg__(self) -> Matrix:
        return Matrix(self.field, [[-a for a in row] for row in self.rows])

    def scale(self, s: FieldElement) -> Matrix:
        return Matrix(self.field, [[s * a for a in row] for row in self.rows])

    def __mul__(self, other: Matrix) -> Matrix:
        if self.ncols != other.nrows:
            raise ShapeMismatch(
                f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}"
            )
        zero = self.field.zero()
        cols = other.transpose().rows
        out = []
        for row in self.rows:
            out_row = []
            for col in cols:
                acc = zero
                for a, b in zip(row, col):
                    if not a.is_zero() and not b.is_zero():
                        acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return Matrix(self.field, out)

    def mul_vector(self, v: Sequence[FieldElement]) -> Vector:
        if len(v) != self.ncols:
            raise ShapeMismatch("vector length does not match column count")
        zero = self.field.zero()
        out = []
        for row in self.rows:
            acc = zero
            for a, b in zip(row, v):
                if not a.is_zero() and not b.is_zero():
                    acc = acc + a * b
            out.append(acc)
        return tuple(out)

    def flatten(self) -> Vector:
        return tuple(x for row in self.rows for x in row)

    def is_zero(self) -> bool:
        return all(x.is_zero() for row in self.rows for x in row)

    def is_symmetric(self) -> bool:
        return self.nrows == self.ncols and all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(self.nrows)
            for j in range(i + 1, self.ncols)
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.field, self.rows))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self.rows)
        return f"Matrix({self.nrows}x{self.ncols}: {body})"

    def _check_same_shape(self, other: Matrix) -> None:
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise ShapeMismatch("shape mismatch")


def _eliminate(rows: list[list[FieldElement]]) -> tuple[list[int], int]:
    """In-place reduced row echelon form; returns (pivot columns, swaps)."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    swaps = 0
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if not rows[i][c].is_zero():
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != r:
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
            swaps += 1
        pv = rows[r][c]
        if not pv.is_one():
            pv_inv = inv(pv)
            rows[r] = [pv_inv * x for x in rows[r]]
        for i in range(nrows):
            if i == r:
                continue
            factor = rows[i][c]
            if factor.is_zero():
                continue
            rows[i] = [
                x - factor * y if not y.is_zero() else x
                for x, y in zip(rows[i], rows[r])
            ]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots, swaps


def rref(m: Matrix) -> tuple[Matrix, int, tuple[int, ...]]:
    """Unique reduced row echelon form with rank and pivot columns."""
    rows = [list(row) for row in m.rows]
    pivots, _ = _eliminate(rows)
    return Matrix(m.field, rows), len(pivots), tuple(pivots)


def det(m: Matrix) -> FieldElement:
    """Determinant by elimination; exact in any field."""
    if m.nrows != m.ncols:
        raise ShapeMismatch("determinant of a non-square matrix")
    n = m.nrows
    if n == 0:
        return m.field.one()
    rows = [list(row) for row in m.rows]
    result = m.field.one()
    sign_flip = False
    for c in range(n):
        pivot_row = None
        for i in range(c, n):
            if not rows[i][c].is_zero():
                pivot_row = i
                break
        if pivot_row is None:
            return m.field.zero()
        if pivot_row != c:
            rows[c], rows[pivot_row] = rows[pivot_row], rows[c]
            sign_flip = not sign_flip
        pv = rows[c][c]
        result = result * pv
        pv_inv = inv(pv)
        for i in range(c + 1, n):
            factor = rows[i][c]
            if factor.is_zero():
                continue
            factor = factor * pv_inv
            rows[i] = [
                x - factor * y if not y.is_zero() else x
                for x, y in zip(rows[i], rows[c])
            ]
    return -result if sign_flip else result


def inverse(m: Matrix) -> Matrix:
    """Matrix inverse via an augmented elimination."""
    if m.nrows != m.ncols:
        raise ShapeMismatch("inverse of a non-square matrix")
    n = m.nrows
    ident = Matrix.identity(m.field, n)
    rows = [list(row) + list(irow) for row, irow in zip(m.rows, ident.rows)]
    pivots, _ = _eliminate(rows)
    if tuple(pivots) != tuple(range(n)):
        raise ShapeMismatch("matrix is singular")
    return Matrix(m.field, [row[n:] for row in rows])


def solve(m: Matrix, rhs: Sequence[FieldElement]) -> Optional[Vector]:
    """One exact solution of m x = rhs, free variables set to zero.

    Returns None when the system is inconsistent.
    """
    if len(rhs) != m.nrows:
        raise ShapeMismatch("right-hand side length does not match row count")
    rows = [list(row) + [b] for row, b in zip(m.rows, rhs)]
    if not rows:
        return ()
    pivots, _ = _eliminate(rows)
    n = m.ncols
    # A pivot in the augmented column marks an inconsistent system.
    if n in pivots:
        return None
    solution = [m.field.zero()] * n
    for r, c in enumerate(pivots):
        solution[c] = rows[r][n]
    return tuple(solution)


class Subspace:
    """Subspace of F^n stored by its canonical reduced echelon basis."""

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field: FieldDescriptor, ambient_dim: int, basis: Matrix,
                 pivots: tuple[int, ...]):
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = pivots

    @property
    def dim(self) -> int:
        return self.basis.nrows

    def is_zero(self) -> bool:
        return self.dim == 0

    def reduce(self, v: Sequence[FieldElement]) -> Vector:
        """Remainder of v after elimination against the canonical basis."""
        if len(v) != self.ambient_dim:
            raise ShapeMismatch("vector length does not match ambient dimension")
        w = list(v)
        for row, c in zip(self.basis.rows, self.pivots):
            factor = w[c]
            if factor.is_zero():
                continue
            for j in range(c, self.ambient_dim):
                if not row[j].is_zero():
                    w[j] = w[j] - factor * row[j]
        return tuple(w)

    def contains(self, v: Sequence[FieldElement]) -> bool:
        return all(x.is_zero() for x in self.reduce(v))

    def coordinates(self, v: Sequence[FieldElement]) -> Optional[Vector]:
        """Coordinates of v in the canonical basis, or None if outside."""
        if not self.contains(v):
            return None
        return tuple(v[c] for c in self.pivots)

    def contains_subspace(self, other: Subspace) -> bool:
        return all(self.contains(row) for row in other.basis.rows)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((self.field, self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim} of F^{self.ambient_dim})"


def canonicalize_subspace(field: FieldDescriptor, vectors: Iterable[Sequence[FieldElement]],
                          ambient_dim: int) -> Subspace:
    """Canonical subspace spanned by the given vectors; idempotent."""
    vectors = [tuple(v) for v in vectors]
    for v in vectors:
        if len(v) != ambient_dim:
            raise ShapeMismatch("vector length does not match ambient dimension")
    if not vectors:
        return Subspace(field, ambient_dim, Matrix(field, []), ())
    rows = [list(v) for v in vectors]
    pivots, _ = _eliminate(rows)
    basis = Matrix(field, rows[: len(pivots)])
    return Subspace(field, ambient_dim, basis, tuple(pivots))


def zero_subspace(field: FieldDescriptor, ambient_dim: int) -> Subspace:
    return canonicalize_subspace(field, [], ambient_dim)


def full_subspace(field: FieldDescriptor, ambient_dim: int) -> Subspace:
    return canonicalize_subspace(
        field, Matrix.identity(field, ambient_dim).rows, ambient_dim
    )


def kernel(m: Matrix) -> Subspace:
    """Canonical basis of the right kernel {v : m v = 0}."""
    reduced, rank, pivots = rref(m)
    n = m.ncols
    free_cols = [c for c in range(n) if c not in pivots]
    zero, one = m.field.zero(), m.field.one()
    vectors = []
    for fc in free_cols:
        v = [zero] * n
        v[fc] = one
        for r, pc in enumerate(pivots):
            v[pc] = -reduced.rows[r][fc]
        vectors.append(v)
    return canonicalize_subspace(m.field, vectors, n)


def subspace_meet_join(a: Subspace, b: Subspace) -> tuple[Subspace, Subspace]:
    """(intersection, sum) of two subspaces of the same ambient space.

    The sum is the span of both bases; the intersection comes from the
    Zassenhaus block trick: rows of [A|A] and [B|0] whose left half
    eliminates to zero have right halves spanning the intersection.
    """
    if a.field != b.field or a.ambient_dim != b.ambient_dim:
        raise ShapeMismatch("subspaces live in different ambient spaces")
    n = a.ambient_dim
    joined = canonicalize_subspace(
        a.field, list(a.basis.rows) + list(b.basis.rows), n
    )
    zero = a.field.zero()
    block = [list(row) + list(row) for row in a.basis.rows]
    block += [list(row) + [zero] * n for row in b.basis.rows]
    if not block:
        return zero_subspace(a.field, n), joined
    _eliminate(block)
    meet_vectors = [
        row[n:] for row in block
        if all(x.is_zero() for x in row[:n]) and not all(x.is_zero() for x in row[n:])
    ]
    meet = canonicalize_subspace(a.field, meet_vectors, n)
    return meet, joined
