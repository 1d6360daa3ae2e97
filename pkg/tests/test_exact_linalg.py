import random

import pytest

from orthocurrent.exact_linalg import (
    Matrix,
    ShapeMismatch,
    canonicalize_subspace,
    det,
    full_subspace,
    inverse,
    kernel,
    rref,
    solve,
    subspace_meet_join,
    zero_subspace,
)
from orthocurrent.scalars import (
    function_field,
    prime_field,
    random_element,
    rationals,
)

Q = rationals()
F2 = prime_field(2)
F3 = prime_field(3)


def mat(field, grid):
    return Matrix(field, [[field.from_int(x) for x in row] for row in grid])


def vec(field, entries):
    return tuple(field.from_int(x) for x in entries)


def test_rref_identity_and_zero():
    ident = Matrix.identity(Q, 3)
    r, rank, pivots = rref(ident)
    assert r == ident and rank == 3 and pivots == (0, 1, 2)
    z = Matrix.zeros(Q, 2, 4)
    r, rank, _ = rref(z)
    assert r == z and rank == 0


def test_rref_f2():
    m = mat(F2, [[1, 1], [1, 0]])
    r, rank, _ = rref(m)
    assert r == Matrix.identity(F2, 2) and rank == 2


def test_rref_idempotent_and_congruence_invariant():
    rng = random.Random(1)
    fields = [Q, F2, F3, function_field(2, "t")]
    for field in fields:
        for _ in range(10):
            m = Matrix(field, [[random_element(field, rng) for _ in range(4)] for _ in range(3)])
            r1, rank, _ = rref(m)
            r2, _, _ = rref(r1)
            assert r1 == r2
            # invariance under left multiplication by a random invertible matrix
            while True:
                p = Matrix(field, [[random_element(field, rng) for _ in range(3)] for _ in range(3)])
                if not det(p).is_zero():
                    break
            r3, _, _ = rref(p * m)
            assert r3 == r1


def test_kernel_examples():
    assert kernel(Matrix.identity(Q, 3)).dim == 0
    assert kernel(Matrix.zeros(Q, 2, 3)) == full_subspace(Q, 3)
    k = kernel(mat(F2, [[1, 1]]))
    assert k.dim == 1 and k.contains(vec(F2, [1, 1]))


def test_rank_nullity_randomized():
    rng = random.Random(2)
    for field in [Q, F2, F3]:
        for _ in range(15):
            nrows, ncols = rng.randint(1, 5), rng.randint(1, 5)
            m = Matrix(field, [[random_element(field, rng) for _ in range(ncols)] for _ in range(nrows)])
            _, rank, _ = rref(m)
            assert rank + kernel(m).dim == ncols


def test_solve_examples():
    v = vec(Q, [3, 1, 4])
    assert solve(Matrix.identity(Q, 3), v) == v
    assert solve(mat(Q, [[1, 1]]), vec(Q, [1])) == vec(Q, [1, 0])
    assert solve(mat(Q, [[1], [1]]), vec(Q, [1, 2])) is None
    with pytest.raises(ShapeMismatch):
        solve(mat(Q, [[1, 1]]), vec(Q, [1, 2]))


def test_solve_verifies_exactly():
    rng = random.Random(4)
    for field in [Q, F3]:
        for _ in range(20):
            nrows, ncols = rng.randint(1, 4), rng.randint(1, 4)
            m = Matrix(field, [[random_element(field, rng) for _ in range(ncols)] for _ in range(nrows)])
            rhs = tuple(random_element(field, rng) for _ in range(nrows))
            x = solve(m, rhs)
            if x is not None:
                assert m.mul_vector(x) == rhs


def test_canonicalize_examples():
    s = canonicalize_subspace(Q, [vec(Q, [2, 0]), vec(Q, [0, 2])], 2)
    assert s == full_subspace(Q, 2)
    assert canonicalize_subspace(Q, [], 2) == zero_subspace(Q, 2)
    s = canonicalize_subspace(
        F2, [vec(F2, [1, 1, 0]), vec(F2, [0, 1, 1]), vec(F2, [1, 0, 1])], 3
    )
    assert s.dim == 2


def test_canonicalize_idempotent():
    rng = random.Random(9)
    for field in [Q, F3]:
        for _ in range(10):
            vectors = [tuple(random_element(field, rng) for _ in range(4)) for _ in range(3)]
            s = canonicalize_subspace(field, vectors, 4)
            again = canonicalize_subspace(field, s.basis.rows, 4)
            assert s == again


def test_meet_join_examples():
    a = canonicalize_subspace(Q, [vec(Q, [1, 0, 0, 0]), vec(Q, [0, 1, 0, 0])], 4)
    b = canonicalize_subspace(Q, [vec(Q, [0, 0, 1, 0]), vec(Q, [0, 0, 0, 1])], 4)
    meet, join = subspace_meet_join(a, b)
    assert meet.is_zero() and join == full_subspace(Q, 4)
    meet, join = subspace_meet_join(a, a)
    assert meet == a and join == a
    l1 = canonicalize_subspace(F3, [vec(F3, [1, 0])], 2)
    l2 = canonicalize_subspace(F3, [vec(F3, [1, 1])], 2)
    meet, join = subspace_meet_join(l1, l2)
    assert meet.is_zero() and join == full_subspace(F3, 2)


def test_meet_join_dimension_formula():
    rng = random.Random(6)
    for field in [Q, F2, F3]:
        for _ in range(15):
            a = canonicalize_subspace(
                field, [[random_element(field, rng) for _ in range(5)] for _ in range(rng.randint(0, 4))], 5
            )
            b = canonicalize_subspace(
                field, [[random_element(field, rng) for _ in range(5)] for _ in range(rng.randint(0, 4))], 5
            )
            meet, join = subspace_meet_join(a, b)
            assert a.dim + b.dim == meet.dim + join.dim
            assert join.contains_subspace(a) and join.contains_subspace(b)
            assert a.contains_subspace(meet) and b.contains_subspace(meet)


def test_det_and_inverse():
    m = mat(Q, [[0, 1], [1, 0]])
    assert det(m) == Q.from_int(-1)
    assert det(mat(Q, [[1, 2], [2, 4]])).is_zero()
    rng = random.Random(8)
    for field in [Q, F2, F3]:
        for _ in range(10):
            m = Matrix(field, [[random_element(field, rng) for _ in range(3)] for _ in range(3)])
            if det(m).is_zero():
                with pytest.raises(ShapeMismatch):
                    inverse(m)
            else:
                assert m * inverse(m) == Matrix.identity(field, 3)


def test_subspace_coordinates():
    s = canonicalize_subspace(Q, [vec(Q, [1, 0, 2]), vec(Q, [0, 1, 3])], 3)
    v = vec(Q, [2, 5, 19])
    coords = s.coordinates(v)
    assert coords == (Q.from_int(2), Q.from_int(5))
    assert s.coordinates(vec(Q, [0, 0, 1])) is None
