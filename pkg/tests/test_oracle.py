import os
import random

import pytest

from orthocurrent.liealg import algebra_from_matrices, current_basis, ideal_closure
from orthocurrent.oracle import (
    UnsupportedField,
    count_subspaces,
    enumerate_ideals,
    enumerate_subspaces,
    gaussian_binomial,
    ideal_dimension_histogram,
)
from orthocurrent.exact_linalg import subspace_meet_join
from orthocurrent.scalars import prime_field, rationals

F2 = prime_field(2)
F3 = prime_field(3)


def derived_orthogonal(field, values):
    entries = [field.from_int(v) for v in values]
    return algebra_from_matrices(field, current_basis(*entries).matrices())


def test_gaussian_binomial_values():
    assert gaussian_binomial(2, 1, 2) == 3
    assert gaussian_binomial(4, 0, 2) == 1
    assert gaussian_binomial(6, 3, 3) == 33880


def test_counts_match_gaussian_binomials_small():
    for q in (2, 3):
        for n in range(5):
            for k in range(n + 1):
                assert count_subspaces(q, n, k) == gaussian_binomial(n, k, q)


def test_enumeration_yields_distinct_canonical_subspaces():
    seen = set()
    for space in enumerate_subspaces(2, 4, 2):
        key = space.basis.rows
        assert key not in seen
        seen.add(key)
    assert len(seen) == gaussian_binomial(4, 2, 2)


def test_unsupported_parameters():
    with pytest.raises(UnsupportedField):
        list(enumerate_subspaces(7, 3, 1))
    with pytest.raises(UnsupportedField):
        list(enumerate_subspaces(2, 8, 1))
    with pytest.raises(UnsupportedField):
        list(enumerate_subspaces(2, 3, 4))
    zero = rationals().zero()
    from orthocurrent.liealg import LieAlgebraSC

    with pytest.raises(UnsupportedField):
        enumerate_ideals(LieAlgebraSC(rationals(), 1, [[[zero]]]))


def test_ideals_f3_split_form():
    alg = derived_orthogonal(F3, [1, 1, 1, 1])
    ideals = enumerate_ideals(alg)
    assert len(ideals) == 4
    assert ideal_dimension_histogram(ideals) == {0: 1, 3: 2, 6: 1}


def test_ideals_f3_simple_form():
    alg = derived_orthogonal(F3, [1, 1, 1, 2])
    ideals = enumerate_ideals(alg)
    assert len(ideals) == 2
    assert ideal_dimension_histogram(ideals) == {0: 1, 6: 1}


def test_ideals_f2_semidirect_form():
    alg = derived_orthogonal(F2, [1, 1, 1, 1])
    ideals = enumerate_ideals(alg)
    dims = ideal_dimension_histogram(ideals)
    assert dims.get(3, 0) >= 1
    # N = span{f1,f2,f3} is a subalgebra but not an ideal
    n_span = [alg.basis_vector(i) for i in range(3)]
    from orthocurrent.exact_linalg import canonicalize_subspace

    n_space = canonicalize_subspace(F2, n_span, 6)
    assert n_space not in ideals
    # every 3-dimensional ideal in the list is abelian
    from orthocurrent.liealg import bracket_span

    for space in ideals:
        if space.dim == 3:
            assert bracket_span(alg, space).dim == 0


def test_ideal_lattice_closed_under_meet_join():
    for field, values in [(F3, [1, 1, 1, 1]), (F2, [1, 1, 1, 1])]:
        alg = derived_orthogonal(field, values)
        ideals = enumerate_ideals(alg)
        for a in ideals:
            for b in ideals:
                meet, join = subspace_meet_join(a, b)
                assert meet in ideals and join in ideals


def test_ideal_closure_member_and_minimal():
    alg = derived_orthogonal(F3, [1, 1, 1, 1])
    ideals = enumerate_ideals(alg)
    rng = random.Random(12)
    for _ in range(6):
        v = tuple(F3.from_int(rng.randrange(3)) for _ in range(6))
        closure = ideal_closure(alg, [v])
        assert closure in ideals
        for space in ideals:
            if space.contains(v):
                assert space.dim >= closure.dim


@pytest.mark.skipif(
    os.environ.get("ORTHOCURRENT_ORACLE_Q5") != "1",
    reason="q=5 scan is gated behind ORTHOCURRENT_ORACLE_Q5=1",
)
def test_ideals_f5_simple_form():
    f5 = prime_field(5)
    alg = derived_orthogonal(f5, [1, 1, 1, 2])
    ideals = enumerate_ideals(alg)
    assert len(ideals) == 2
