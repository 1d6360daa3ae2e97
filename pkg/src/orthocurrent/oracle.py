"""Brute-force ground truth over tiny prime fields.

Subspaces of F_q^n are enumerated once each through their canonical
echelon form: choose pivot columns, then run an odometer over the free
positions.  Ideal detection multiplies candidate basis vectors by the
precomputed adjoint matrices and reduces against the echelon rows,
bailing out at the first escape.  The inner loops work on plain integers
mod q; field elements are only materialized for returned subspaces.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, Sequence

from .exact_linalg import Matrix, Subspace
from .liealg import LieAlgebraSC
from .scalars import KIND_PRIME, prime_field


class UnsupportedField(ValueError):
    """The oracle is limited to F_2, F_3, F_5 and ambient dimension 6."""


SUPPORTED_Q = (2, 3, 5)
MAX_AMBIENT = 6


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def _validate(q: int, n: int) -> None:
    if q not in SUPPORTED_Q:
        raise UnsupportedField(f"q must be one of {SUPPORTED_Q}")
    if n > MAX_AMBIENT or n < 0:
        raise UnsupportedField(f"ambient dimension must be at most {MAX_AMBIENT}")


def _iter_echelon(q: int, n: int, k: int) -> Iterator[tuple[tuple[int, ...], list[tuple[int, ...]]]]:
    """All canonical echelon bases as (pivots, integer rows)."""
    if k == 0:
        yield (), []
        return
    for pivots in combinations(range(n), k):
        pivot_set = set(pivots)
        free = [
            (i, j)
            for i in range(k)
            for j in range(pivots[i] + 1, n)
            if j not in pivot_set
        ]
        base = [[0] * n for _ in range(k)]
        for i, p in enumerate(pivots):
            base[i][p] = 1
        total = q ** len(free)
        for counter in range(total):
            rows = [row[:] for row in base]
            rem = counter
            for i, j in free:
                rows[i][j] = rem % q
                rem //= q
            yield pivots, [tuple(row) for row in rows]


def _to_subspace(field, pivots: Sequence[int], rows: Sequence[Sequence[int]], n: int) -> Subspace:
    basis = Matrix(field, [[field.from_int(x) for x in row] for row in rows])
    return Subspace(field, n, basis, tuple(pivots))


def enumerate_subspaces(q: int, n: int, k: int) -> Iterator[Subspace]:
    """Stream every k-dimensional subspace of F_q^n exactly once."""
    _validate(q, n)
    if k < 0 or k > n:
        raise UnsupportedField("dimension out of range")
    field = prime_field(q)
    for pivots, rows in _iter_echelon(q, n, k):
        yield _to_subspace(field, pivots, rows, n)


def count_subspaces(q: int, n: int, k: int) -> int:
    return sum(1 for _ in enumerate_subspaces(q, n, k))


def _adjoint_matrices(alg: LieAlgebraSC) -> list[tuple[tuple[int, ...], ...]]:
    """Integer matrices of ad(e_i): row k, column j holds c[i][j][k]."""
    n = alg.dim
    ads = []
    for i in range(n):
        ad = tuple(
            tuple(alg.constants[i][j][k].payload for j in range(n))
            for k in range(n)
        )
        ads.append(ad)
    return ads


def _is_invariant(rows: Sequence[Sequence[int]], pivots: Sequence[int],
                  ads, q: int, n: int) -> bool:
    for v in rows:
        for ad in ads:
            w = [0] * n
            for k in range(n):
                acc = 0
                row_k = ad[k]
                for j in range(n):
                    vj = v[j]
                    if vj:
                        acc += row_k[j] * vj
                w[k] = acc % q
            for idx, p in enumerate(pivots):
                t = w[p]
                if t:
                    rv = rows[idx]
                    for c in range(p, n):
                        if rv[c]:
                            w[c] = (w[c] - t * rv[c]) % q
            if any(w):
                return False
    return True


def enumerate_ideals(alg: LieAlgebraSC) -> list[Subspace]:
    """Every ideal of a small algebra over F_q, in canonical order."""
    field = alg.field
    if field.kind != KIND_PRIME:
        raise UnsupportedField("ideal enumeration runs over prime fields")
    _validate(field.p, alg.dim)
    q, n = field.p, alg.dim
    ads = _adjoint_matrices(alg)
    found = []
    for k in range(n + 1):
        for pivots, rows in _iter_echelon(q, n, k):
            if _is_invariant(rows, pivots, ads, q, n):
                found.append((k, pivots, rows))
    found.sort(key=lambda item: (item[0], item[1], item[2]))
    return [_to_subspace(field, pivots, rows, n) for _, pivots, rows in found]


def ideal_dimension_histogram(ideals: Sequence[Subspace]) -> dict[int, int]:
    hist: dict[int, int] = {}
    for space in ideals:
        hist[space.dim] = hist.get(space.dim, 0) + 1
    return hist
