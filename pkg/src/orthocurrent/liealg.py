"""Structure-constant Lie algebras built from bilinear forms.

The central object is `LieAlgebraSC`: a finite-dimensional Lie algebra
given by its structure constants c[i][j][k], optionally carrying a
faithful matrix realization.  Construction always checks antisymmetry
(including [x,x] = 0, which is the correct reading in characteristic 2),
the Jacobi identity on all basis triples, and agreement of the bracket
with matrix commutators whenever a realization is present.

Algebras of skew-adjoint endomorphisms are produced by solving the linear
system x^T G + G x = 0.  For a 4-dimensional nondegenerate form the
distinguished basis f1, f2, f3, h1, h2, h3 of the derived algebra aligns
it positionally with (3-dimensional core) tensor (quadratic quotient),
which is what the verification and classification layers exploit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .exact_linalg import (
    Matrix,
    ShapeMismatch,
    Subspace,
    canonicalize_subspace,
    full_subspace,
    inverse,
    kernel,
    rref,
)
from .forms import AlternatingChar2, BilinearForm, Degenerate
from .scalars import DescriptorMismatch, FieldDescriptor, FieldElement


class NotClosed(ValueError):
    """A bracket escapes the span of the proposed basis."""


class NotIndependent(ValueError):
    """The proposed basis vectors are linearly dependent."""


class ZeroEntry(ValueError):
    """A diagonal entry that must be nonzero is zero."""


class WrongDimension(ValueError):
    """The operation is only defined in a specific dimension."""


class InvalidStructure(ValueError):
    """Structure constants violate antisymmetry or the Jacobi identity."""


Vector = tuple[FieldElement, ...]
Tensor = tuple[tuple[Vector, ...], ...]


def _sparse(vec: Vector) -> tuple[tuple[int, FieldElement], ...]:
    return tuple((k, x) for k, x in enumerate(vec) if not x.is_zero())


class LieAlgebraSC:
    """Lie algebra over an exact field given by structure constants.

    `constants[i][j]` is the coordinate vector of the bracket of basis
    elements i and j.  `realization`, when given, is one matrix per basis
    element whose commutators must reproduce the constants exactly.
    """

    __slots__ = ("field", "dim", "constants", "realization", "_sparse_rows")

    def __init__(self, field: FieldDescriptor, dim: int, constants: Sequence[Sequence[Sequence[FieldElement]]],
                 realization: Optional[Sequence[Matrix]] = None, check: bool = True):
        self.field = field
        self.dim = dim
        self.constants: Tensor = tuple(
            tuple(tuple(entry) for entry in row) for row in constants
        )
        self.realization = tuple(realization) if realization is not None else None
        self._sparse_rows = tuple(
            tuple(_sparse(self.constants[i][j]) for j in range(dim))
            for i in range(dim)
        )
        if check:
            self._check_shape()
            self._check_antisymmetry()
            self._check_jacobi()
            if self.realization is not None:
                self._check_realization()

    # -- construction-time invariants ----------------------------------

    def _check_shape(self) -> None:
        n = self.dim
        if len(self.constants) != n or any(
            len(row) != n or any(len(entry) != n for entry in row)
            for row in self.constants
        ):
            raise InvalidStructure("constants tensor has the wrong shape")

    def _check_antisymmetry(self) -> None:
        n = self.dim
        zero = self.field.zero()
        for i in range(n):
            if any(x != zero for x in self.constants[i][i]):
                raise InvalidStructure(f"[e{i}, e{i}] != 0")
            for j in range(i + 1, n):
                if any(
                    x != -y
                    for x, y in zip(self.constants[i][j], self.constants[j][i])
                ):
                    raise InvalidStructure(f"[e{i}, e{j}] != -[e{j}, e{i}]")

    def _check_jacobi(self) -> None:
        # With antisymmetry verified, triples with repeats are automatic
        # and the Jacobi sum is permutation-stable, so i < j < k suffices.
        n = self.dim
        zero = self.field.zero()
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    acc = [zero] * n
                    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                        for m, coeff in self._sparse_rows[a][b]:
                            for r, coeff2 in self._sparse_rows[m][c]:
                                acc[r] = acc[r] + coeff * coeff2
                    if any(not x.is_zero() for x in acc):
                        raise InvalidStructure(
                            f"Jacobi identity fails on basis triple ({i},{j},{k})"
                        )

    def _check_realization(self) -> None:
        mats = self.realization
        if len(mats) != self.dim:
            raise InvalidStructure("realization size does not match dimension")
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                comm = mats[i] * mats[j] - mats[j] * mats[i]
                combo = _combine_matrices(self.field, self.constants[i][j], mats)
                if comm != combo:
                    raise InvalidStructure(
                        f"commutator of realization matrices {i},{j} disagrees"
                    )

    # -- basic operations ----------------------------------------------

    def bracket(self, u: Sequence[FieldElement], v: Sequence[FieldElement]) -> Vector:
        """Bilinear extension of the structure constants to coordinates."""
        n = self.dim
        if len(u) != n or len(v) != n:
            raise ShapeMismatch("coordinate length does not match dimension")
        zero = self.field.zero()
        acc = [zero] * n
        for i, ui in enumerate(u):
            if ui.is_zero():
                continue
            row = self._sparse_rows[i]
            for j, vj in enumerate(v):
                if vj.is_zero():
                    continue
                scale = ui * vj
                for k, coeff in row[j]:
                    acc[k] = acc[k] + scale * coeff
        return tuple(acc)

    def basis_vector(self, i: int) -> Vector:
        zero, one = self.field.zero(), self.field.one()
        return tuple(one if k == i else zero for k in range(self.dim))

    def matrix_for(self, coords: Sequence[FieldElement]) -> Matrix:
        if self.realization is None:
            raise InvalidStructure("algebra carries no matrix realization")
        return _combine_matrices(self.field, coords, self.realization)

    def __repr__(self) -> str:
        return f"LieAlgebraSC(dim={self.dim} over {self.field!r})"


def _combine_matrices(field: FieldDescriptor, coords: Sequence[FieldElement],
                      mats: Sequence[Matrix]) -> Matrix:
    out = Matrix.zeros(field, mats[0].nrows, mats[0].ncols)
    for c, m in zip(coords, mats):
        if not c.is_zero():
            out = out + m.scale(c)
    return out


# ---------------------------------------------------------------------------
# Skew-adjoint algebras.
# ---------------------------------------------------------------------------


def skew_adjoint_algebra(form: BilinearForm) -> LieAlgebraSC:
    """All endomorphisms x with x^T G + G x = 0, as a Lie algebra.

    The solution space of the n^2 x n^2 linear system becomes the basis
    (canonical echelon order) and the structure constants come from
    matrix commutators.  For a 4-dimensional form the dimension is 6 in
    characteristic != 2 and 10 in characteristic 2.
    """
    if not form.nondegenerate:
        raise Degenerate("skew-adjoint algebra requires a nondegenerate form")
    field = form.field
    if field.characteristic() == 2 and form.alternating and form.dim > 0:
        raise AlternatingChar2("alternating form in characteristic 2")
    n = form.dim
    g = form.gram
    zero = field.zero()
    equations = []
    for i in range(n):
        for j in range(n):
            row = [zero] * (n * n)
            for k in range(n):
                # coefficient of x[k][i] from (x^T G) and x[k][j] from (G x)
                row[k * n + i] = row[k * n + i] + g.rows[k][j]
                row[k * n + j] = row[k * n + j] + g.rows[i][k]
            equations.append(row)
    sol = kernel(Matrix(field, equations))
    mats = [
        Matrix(field, [row[r * n:(r + 1) * n] for r in range(n)])
        for row in sol.basis.rows
    ]
    return algebra_from_matrices(field, mats)


class SpanSolver:
    """Coordinates of vectors in the span of a fixed independent basis.

    Writing the basis rows as C times their reduced echelon form, pivot
    extraction gives echelon coordinates and one multiplication by the
    inverse of C converts them to coordinates in the original order.
    """

    __slots__ = ("space", "c_inv", "dim")

    def __init__(self, field: FieldDescriptor, rows: Sequence[Vector], ambient: int):
        self.dim = len(rows)
        self.space = canonicalize_subspace(field, rows, ambient)
        if self.space.dim != self.dim:
            raise NotIndependent("basis vectors are linearly dependent")
        change = Matrix(field, [[row[p] for p in self.space.pivots] for row in rows])
        self.c_inv = inverse(change)

    def coordinates(self, w: Sequence[FieldElement]) -> Optional[Vector]:
        if not self.space.contains(w):
            return None
        echelon = [w[p] for p in self.space.pivots]
        out = []
        for k in range(self.dim):
            acc = self.space.field.zero()
            for j, wj in enumerate(echelon):
                if not wj.is_zero():
                    entry = self.c_inv.rows[j][k]
                    if not entry.is_zero():
                        acc = acc + wj * entry
            out.append(acc)
        return tuple(out)


def _antisymmetric_fill(field: FieldDescriptor, dim: int, upper) -> list[list[Vector]]:
    """Full constants tensor from the strictly upper triangle."""
    zero_vec = tuple(field.zero() for _ in range(dim))
    constants = [[zero_vec] * dim for _ in range(dim)]
    for (i, j), coords in upper.items():
        constants[i][j] = coords
        constants[j][i] = tuple(-x for x in coords)
    return constants


def algebra_from_matrices(field: FieldDescriptor, mats: Sequence[Matrix]) -> LieAlgebraSC:
    """Lie algebra spanned by commutator-closed, independent matrices."""
    dim = len(mats)
    if dim == 0:
        return LieAlgebraSC(field, 0, [])
    size = mats[0].nrows * mats[0].ncols
    solver = SpanSolver(field, [m.flatten() for m in mats], size)
    upper = {}
    for i in range(dim):
        for j in range(i + 1, dim):
            comm = mats[i] * mats[j] - mats[j] * mats[i]
            coords = solver.coordinates(comm.flatten())
            if coords is None:
                raise NotClosed(f"commutator of matrices {i},{j} escapes the span")
            upper[(i, j)] = coords
    constants = _antisymmetric_fill(field, dim, upper)
    return LieAlgebraSC(field, dim, constants, realization=mats)


# ---------------------------------------------------------------------------
# Derived series, ideals, center.
# ---------------------------------------------------------------------------


def bracket_span(alg: LieAlgebraSC, space: Subspace) -> Subspace:
    """Span of all brackets of pairs from the subspace's basis."""
    rows = space.basis.rows
    vectors = [
        alg.bracket(rows[a], rows[b])
        for a in range(len(rows))
        for b in range(a + 1, len(rows))
    ]
    return canonicalize_subspace(alg.field, vectors, alg.dim)


def derived_series_of_subspace(alg: LieAlgebraSC, space: Subspace) -> list[Subspace]:
    """Chain S > [S,S] > ... inside the ambient algebra until stable."""
    series = [space]
    while True:
        nxt = bracket_span(alg, series[-1])
        if nxt.dim >= series[-1].dim:
            return series
        series.append(nxt)
        if nxt.dim == 0:
            return series


def derived_series(alg: LieAlgebraSC) -> list[Subspace]:
    """Chain L > [L,L] > ... of strictly decreasing terms until stable."""
    return derived_series_of_subspace(alg, full_subspace(alg.field, alg.dim))


def is_perfect(alg: LieAlgebraSC) -> bool:
    return len(derived_series(alg)) == 1


def is_solvable(alg: LieAlgebraSC) -> bool:
    return derived_series(alg)[-1].dim == 0


def is_abelian(alg: LieAlgebraSC) -> bool:
    return derived_subspace(alg).dim == 0


def structure_constants(alg: LieAlgebraSC, basis: Sequence[Sequence[FieldElement]]) -> Tensor:
    """Constants of the subalgebra spanned by `basis`, in that order.

    Raises NotIndependent for dependent input and NotClosed when some
    bracket leaves the span.
    """
    rows = [tuple(v) for v in basis]
    m = len(rows)
    if m == 0:
        return ()
    solver = SpanSolver(alg.field, rows, alg.dim)
    upper = {}
    for a in range(m):
        for b in range(a + 1, m):
            w = alg.bracket(rows[a], rows[b])
            coords = solver.coordinates(w)
            if coords is None:
                raise NotClosed(f"bracket of basis vectors {a},{b} escapes the span")
            upper[(a, b)] = coords
    return tuple(tuple(row) for row in _antisymmetric_fill(alg.field, m, upper))


def subalgebra(alg: LieAlgebraSC, basis: Sequence[Sequence[FieldElement]]) -> LieAlgebraSC:
    """Standalone algebra on the given bracket-closed basis."""
    constants = structure_constants(alg, basis)
    realization = None
    if alg.realization is not None:
        realization = [alg.matrix_for(v) for v in basis]
    return LieAlgebraSC(alg.field, len(basis), constants, realization=realization)


def derived_subalgebra(alg: LieAlgebraSC) -> LieAlgebraSC:
    """[L, L] repackaged on the canonical basis of the bracket span."""
    series = derived_series(alg)
    space = series[1] if len(series) > 1 else series[0]
    return subalgebra(alg, space.basis.rows)


def derived_subspace(alg: LieAlgebraSC) -> Subspace:
    series = derived_series(alg)
    return series[1] if len(series) > 1 else series[0]


def ideal_closure(alg: LieAlgebraSC, seed: Sequence[Sequence[FieldElement]]) -> Subspace:
    """Smallest ideal containing the seed vectors (worklist closure)."""
    space = canonicalize_subspace(alg.field, [tuple(v) for v in seed], alg.dim)
    while True:
        new_vectors = []
        for i in range(alg.dim):
            e = alg.basis_vector(i)
            for row in space.basis.rows:
                w = alg.bracket(e, row)
                if not space.contains(w):
                    new_vectors.append(w)
        if not new_vectors:
            return space
        space = canonicalize_subspace(
            alg.field, list(space.basis.rows) + new_vectors, alg.dim
        )


def center(alg: LieAlgebraSC) -> Subspace:
    """Kernel of the stacked adjoint operators."""
    if alg.dim == 0:
        return full_subspace(alg.field, 0)
    rows = []
    for i in range(alg.dim):
        for k in range(alg.dim):
            rows.append([alg.constants[i][j][k] for j in range(alg.dim)])
    return kernel(Matrix(alg.field, rows))


def is_ideal(alg: LieAlgebraSC, space: Subspace) -> bool:
    return all(
        space.contains(alg.bracket(alg.basis_vector(i), row))
        for i in range(alg.dim)
        for row in space.basis.rows
    )


def is_subalgebra(alg: LieAlgebraSC, space: Subspace) -> bool:
    rows = space.basis.rows
    return all(
        space.contains(alg.bracket(rows[a], rows[b]))
        for a in range(len(rows))
        for b in range(a + 1, len(rows))
    )


def quotient_algebra(alg: LieAlgebraSC, ideal: Subspace) -> LieAlgebraSC:
    """Quotient by an ideal, on the coordinates complementary to its pivots.

    Representatives are the standard basis vectors at non-pivot positions;
    brackets are reduced against the ideal's echelon basis, which is the
    linear projection onto the complement.
    """
    if not is_ideal(alg, ideal):
        raise InvalidStructure("quotient requires an ideal")
    complement = [j for j in range(alg.dim) if j not in ideal.pivots]
    dim = len(complement)
    constants = []
    for a in complement:
        row = []
        for b in complement:
            w = ideal.reduce(alg.bracket(alg.basis_vector(a), alg.basis_vector(b)))
            row.append(tuple(w[j] for j in complement))
        constants.append(row)
    return LieAlgebraSC(alg.field, dim, constants)


def is_simple_3dim(alg: LieAlgebraSC) -> bool:
    """Simplicity test for 3-dimensional algebras.

    A perfect 3-dimensional Lie algebra is simple: a proper nonzero ideal
    would give a quotient of dimension 1 or 2, and no such algebra is
    perfect, contradicting perfection of the whole.
    """
    if alg.dim != 3:
        raise WrongDimension("test applies to 3-dimensional algebras only")
    return derived_subspace(alg).dim == 3


# ---------------------------------------------------------------------------
# The distinguished basis of the derived algebra in dimension 4.
# ---------------------------------------------------------------------------


def _unit(field: FieldDescriptor, n: int, i: int, j: int) -> Matrix:
    zero, one = field.zero(), field.one()
    return Matrix(
        field,
        [[one if (r, c) == (i - 1, j - 1) else zero for c in range(n)] for r in range(n)],
    )


@dataclass(frozen=True)
class CurrentBasis:
    """Basis f1, f2, f3, h1, h2, h3 of the derived algebra of a diagonal
    4-dimensional form, ordered to align with core tensor coefficient
    algebra coordinates (f_i at position i, h_i at position 3 + i)."""

    f1: Matrix
    f2: Matrix
    f3: Matrix
    h1: Matrix
    h2: Matrix
    h3: Matrix

    def matrices(self) -> tuple[Matrix, ...]:
        return (self.f1, self.f2, self.f3, self.h1, self.h2, self.h3)

    @staticmethod
    def names() -> tuple[str, ...]:
        return ("f1", "f2", "f3", "h1", "h2", "h3")


def _check_skew(mats: Sequence[Matrix], gram: Matrix) -> None:
    for m in mats:
        if not (m.transpose() * gram + gram * m).is_zero():
            raise InvalidStructure("basis matrix is not skew-adjoint")


def current_basis(a: FieldElement, b: FieldElement, c: FieldElement,
                  d: FieldElement) -> CurrentBasis:
    """Distinguished basis of the derived algebra for diag(a, b, c, d).

    Each matrix is verified skew-adjoint for the diagonal Gram matrix and
    the six are checked linearly independent.
    """
    field = a.field
    for name, x in zip("abcd", (a, b, c, d)):
        if x.field != field:
            raise DescriptorMismatch("diagonal entries live in different fields")
        if x.is_zero():
            raise ZeroEntry(f"diagonal entry {name} must be nonzero")
    e = lambda i, j: _unit(field, 4, i, j)
    f1 = e(1, 2).scale(b) - e(2, 1).scale(a)
    f2 = e(2, 3).scale(c) - e(3, 2).scale(b)
    f3 = e(1, 3).scale(c) - e(3, 1).scale(a)
    h1 = (e(3, 4).scale(d) - e(4, 3).scale(c)).scale(a * b)
    h2 = (e(1, 4).scale(d) - e(4, 1).scale(a)).scale(b * c)
    h3 = (e(4, 2).scale(b) - e(2, 4).scale(d)).scale(a * c)
    basis = CurrentBasis(f1, f2, f3, h1, h2, h3)
    gram = Matrix.diagonal(field, [a, b, c, d])
    _check_skew(basis.matrices(), gram)
    stacked = Matrix(field, [m.flatten() for m in basis.matrices()])
    _, rank, _ = rref(stacked)
    if rank != 6:
        raise InvalidStructure("distinguished basis is linearly dependent")
    return basis


def core_basis(a: FieldElement, b: FieldElement, c: FieldElement) -> tuple[Matrix, ...]:
    """Basis f1, f2, f3 of the derived algebra for diag(a, b, c)."""
    field = a.field
    for name, x in zip("abc", (a, b, c)):
        if x.is_zero():
            raise ZeroEntry(f"diagonal entry {name} must be nonzero")
    e = lambda i, j: _unit(field, 3, i, j)
    f1 = e(1, 2).scale(b) - e(2, 1).scale(a)
    f2 = e(2, 3).scale(c) - e(3, 2).scale(b)
    f3 = e(1, 3).scale(c) - e(3, 1).scale(a)
    _check_skew((f1, f2, f3), Matrix.diagonal(field, [a, b, c]))
    return (f1, f2, f3)


# ---------------------------------------------------------------------------
# Coefficient algebras and current algebras.
# ---------------------------------------------------------------------------


class CoefficientAlgebra:
    """Commutative associative unital algebra used as tensor coefficients.

    Basis products are given by `table[i][j]`; the unit must be basis
    element 0.  `generator` marks the distinguished element (the residue
    of X in a quotient construction) when one exists.
    """

    __slots__ = ("field", "dim", "table", "generator")

    def __init__(self, field: FieldDescriptor, table: Sequence[Sequence[Sequence[FieldElement]]],
                 generator: Optional[Vector] = None):
        self.field = field
        self.dim = len(table)
        self.table = tuple(tuple(tuple(entry) for entry in row) for row in table)
        self.generator = tuple(generator) if generator is not None else None
        self._check()

    def _check(self) -> None:
        n = self.dim
        if n == 0:
            raise InvalidStructure("coefficient algebra must contain a unit")
        unit = self.unit()
        for i in range(n):
            if self.multiply(unit, self.basis_vector(i)) != self.basis_vector(i):
                raise InvalidStructure("basis element 0 is not a unit")
        for i in range(n):
            for j in range(i + 1, n):
                if self.table[i][j] != self.table[j][i]:
                    raise InvalidStructure("multiplication is not commutative")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    left = self.multiply(self.table[i][j], self.basis_vector(k))
                    right = self.multiply(self.basis_vector(i), self.table[j][k])
                    if left != right:
                        raise InvalidStructure("multiplication is not associative")

    def basis_vector(self, i: int) -> Vector:
        zero, one = self.field.zero(), self.field.one()
        return tuple(one if k == i else zero for k in range(self.dim))

    def unit(self) -> Vector:
        return self.basis_vector(0)

    def multiply(self, u: Sequence[FieldElement], v: Sequence[FieldElement]) -> Vector:
        zero = self.field.zero()
        acc = [zero] * self.dim
        for i, ui in enumerate(u):
            if ui.is_zero():
                continue
            for j, vj in enumerate(v):
                if vj.is_zero():
                    continue
                scale = ui * vj
                for k, coeff in enumerate(self.table[i][j]):
                    if not coeff.is_zero():
                        acc[k] = acc[k] + scale * coeff
        return tuple(acc)

    def __repr__(self) -> str:
        return f"CoefficientAlgebra(dim={self.dim} over {self.field!r})"


def scalar_coefficients(field: FieldDescriptor) -> CoefficientAlgebra:
    """The base field itself as a 1-dimensional coefficient algebra."""
    return CoefficientAlgebra(field, [[(field.one(),)]])


def tensor_current(alg: LieAlgebraSC, coeff: CoefficientAlgebra) -> LieAlgebraSC:
    """Current algebra L (x) A with [l (x) a, l' (x) a'] = [l,l'] (x) aa'.

    Basis order is coefficient-major: l_1 (x) a_0, ..., l_n (x) a_0,
    l_1 (x) a_1, ... so that position j * dim(L) + i holds l_i (x) a_j.
    """
    if alg.field != coeff.field:
        raise DescriptorMismatch("algebra and coefficients over different fields")
    nl, na = alg.dim, coeff.dim
    dim = nl * na
    zero = alg.field.zero()
    constants = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]
    for i in range(nl):
        for k in range(nl):
            bracket = alg.constants[i][k]
            for j in range(na):
                for m in range(na):
                    prod = coeff.table[j][m]
                    row, col = j * nl + i, m * nl + k
                    entry = constants[row][col]
                    for r, br in enumerate(bracket):
                        if br.is_zero():
                            continue
                        for s, pr in enumerate(prod):
                            if not pr.is_zero():
                                entry[s * nl + r] = entry[s * nl + r] + br * pr
    return LieAlgebraSC(alg.field, dim, constants)


def tables_equal(t1: Tensor, t2: Tensor) -> bool:
    """Exact entrywise equality of two structure constant tensors."""
    if len(t1) != len(t2):
        raise ShapeMismatch("tensors have different dimensions")
    for r1, r2 in zip(t1, t2):
        if len(r1) != len(r2):
            raise ShapeMismatch("tensors have different dimensions")
        for e1, e2 in zip(r1, r2):
            if len(e1) != len(e2):
                raise ShapeMismatch("tensors have different dimensions")
            if e1 != e2:
                return False
    return True
