import json
import random

import pytest

from orthocurrent.liealg import LieAlgebraSC
from orthocurrent.scalars import (
    function_field,
    lift_to_extension,
    parse_scalar,
    prime_field,
    quadratic_extension,
    random_element,
    rationals,
    render_scalar,
)
from orthocurrent.structure import (
    CASE_SEMIDIRECT,
    CASE_SIMPLE,
    CASE_TWO_IDEALS,
    DescriptorMismatch,
    NotPerfect,
    UnsupportedPrime,
    build_pipeline,
    certificate_to_json,
    certify_simple_via_descent,
    classify,
    inseparable_counterexample,
    recheck_certificate,
    recheck_certificate_json,
    verify_current_form,
)

Q = rationals()
F2 = prime_field(2)
F3 = prime_field(3)
F5 = prime_field(5)
F2T = function_field(2, "t")


def ints(field, values):
    return [field.from_int(v) for v in values]


def test_verify_q_1234():
    report = verify_current_form(Q, ints(Q, [1, 2, 3, 4]))
    assert report.equal and report.ok
    assert report.disc == Q.from_int(24)
    assert report.dims == {
        "skew_adjoint": 6,
        "derived": 6,
        "core_skew_adjoint": 3,
        "core_derived": 3,
    }
    assert report.random_w.equal


def test_verify_f2_char2_dims():
    report = verify_current_form(F2, ints(F2, [1, 1, 1, 1]))
    assert report.equal and report.ok
    assert report.dims["skew_adjoint"] == 10
    assert report.dims["derived"] == 6
    assert report.dims["core_skew_adjoint"] == 6
    assert report.dims["core_derived"] == 3


def test_verify_f3():
    report = verify_current_form(F3, ints(F3, [1, 1, 1, 1]))
    assert report.equal and report.ok and report.disc == F3.one()


def test_verify_seed_determinism():
    r1 = verify_current_form(Q, ints(Q, [1, 2, 3, 4]), seed=5)
    r2 = verify_current_form(Q, ints(Q, [1, 2, 3, 4]), seed=5)
    assert r1.random_w.subspace == r2.random_w.subspace
    assert r1.random_w.diagonal == r2.random_w.diagonal


def test_classify_split_over_q():
    cert = classify(Q, ints(Q, [1, 1, 1, 1]))
    assert cert.case == CASE_TWO_IDEALS and cert.ok
    i1, i2 = cert.witnesses["I1"], cert.witnesses["I2"]
    assert i1.dim == 3 and i2.dim == 3 and i1 != i2


def test_classify_semidirect_over_f2():
    cert = classify(F2, ints(F2, [1, 1, 1, 1]))
    assert cert.case == CASE_SEMIDIRECT and cert.ok
    assert cert.witnesses["R"].dim == 3


def test_classify_simple_over_f3():
    cert = classify(F3, ints(F3, [1, 1, 1, 2]))
    assert cert.case == CASE_SIMPLE and cert.ok
    descent = cert.witnesses["descent"]
    assert descent.derived_dim == 3 and descent.ok


def test_classify_simple_over_function_field():
    entries = [parse_scalar(x, F2T) for x in ("1", "1", "1", "t")]
    cert = classify(F2T, entries)
    assert cert.case == CASE_SIMPLE and cert.ok


def test_classify_variant_function_of_char_and_square_class():
    rng = random.Random(23)
    from orthocurrent.scalars import is_square

    for field in [Q, F2, F3, F5, F2T]:
        char2 = field.characteristic() == 2
        for _ in range(4):
            entries = [random_element(field, rng, nonzero=True) for _ in range(4)]
            cert = classify(field, entries)
            d = cert.disc
            if is_square(d) is None:
                assert cert.case == CASE_SIMPLE
            elif char2:
                assert cert.case == CASE_SEMIDIRECT
            else:
                assert cert.case == CASE_TWO_IDEALS
            assert cert.ok


def test_certificates_recheck_independently():
    for field, values in [(Q, [1, 1, 1, 1]), (F2, [1, 1, 1, 1]), (F3, [1, 1, 1, 2])]:
        cert = classify(field, ints(field, values))
        rechecked = recheck_certificate(cert)
        assert all(c.ok for c in rechecked)


def test_certificate_json_round_trip():
    cert = classify(F3, ints(F3, [1, 1, 1, 2]))
    blob = json.dumps(certificate_to_json(cert))
    data = json.loads(blob)
    assert data["case"] == CASE_SIMPLE
    checks = recheck_certificate_json(data)
    assert all(c.ok for c in checks)
    # determinism: classifying twice serializes identically
    again = classify(F3, ints(F3, [1, 1, 1, 2]))
    assert certificate_to_json(again) == certificate_to_json(cert)


def test_recheck_catches_tampering():
    cert = classify(Q, ints(Q, [1, 1, 1, 1]))
    data = certificate_to_json(cert)
    data["witnesses"]["I1"][0][0] = "7"
    checks = recheck_certificate_json(data)
    assert not all(c.ok for c in checks)


def test_descent_certificate_rejects_non_perfect():
    ext = quadratic_extension(F3, F3.from_int(2))
    zero = ext.zero()
    constants = [[[zero] * 3 for _ in range(3)] for _ in range(3)]
    abelian = LieAlgebraSC(ext, 3, constants)
    with pytest.raises(NotPerfect):
        certify_simple_via_descent(abelian, F3)


def test_descent_certificate_over_quadratic_extension():
    pipe = build_pipeline(F3, ints(F3, [1, 1, 1, 2]))
    ext = quadratic_extension(F3, pipe.disc)
    from orthocurrent.liealg import algebra_from_matrices, core_basis

    core = algebra_from_matrices(F3, core_basis(*pipe.entries[:3]))
    lifted = tuple(
        tuple(tuple(lift_to_extension(x, ext) for x in entry) for entry in row)
        for row in core.constants
    )
    cert = certify_simple_via_descent(LieAlgebraSC(ext, 3, lifted), F3)
    assert cert.ok and cert.extension_kind == "quadratic"


def test_descent_rejects_unrelated_fields():
    zero, one = Q.zero(), Q.one()
    c = [[[zero] * 3 for _ in range(3)] for _ in range(3)]
    c[0][1][2], c[1][0][2] = one, -one
    c[1][2][0], c[2][1][0] = one, -one
    c[2][0][1], c[0][2][1] = one, -one
    alg = LieAlgebraSC(Q, 3, c)
    with pytest.raises(DescriptorMismatch):
        certify_simple_via_descent(alg, F3)


def test_counterexample_p2():
    report = inseparable_counterexample(2)
    assert report.ok
    assert report.current_dim == 6
    assert report.radical.dim == 3
    assert report.abelian_ideal == report.radical
    assert report.quotient_perfect and report.quotient_dim == 3
    assert report.descent.extension_kind == "inseparable_degree_p"
    assert render_scalar(report.s) == "t"


def test_counterexample_p3():
    report = inseparable_counterexample(3)
    assert report.ok
    assert report.current_dim == 9
    assert report.radical.dim == 6
    assert report.abelian_ideal.dim == 3
    assert report.quotient_perfect and report.quotient_dim == 3


def test_counterexample_rejects_other_primes():
    with pytest.raises(UnsupportedPrime):
        inseparable_counterexample(5)


def test_split_ideal_closure_regenerates_each_ideal():
    rng = random.Random(77)
    cert = classify(Q, ints(Q, [1, 1, 1, 1]))
    alg = LieAlgebraSC(Q, 6, cert.table)
    for name in ("I1", "I2"):
        space = cert.witnesses[name]
        for _ in range(5):
            coeffs = [random_element(Q, rng) for _ in range(3)]
            v = tuple(
                sum((c * x for c, x in zip(coeffs, col)), Q.zero())
                for col in zip(*space.basis.rows)
            )
            if all(x.is_zero() for x in v):
                continue
            from orthocurrent.liealg import ideal_closure

            assert ideal_closure(alg, [v]) == space


def test_semidirect_bracket_relations():
    from orthocurrent.liealg import bracket_span, derived_series_of_subspace

    cert = classify(F2, ints(F2, [1, 1, 1, 1]))
    alg = LieAlgebraSC(F2, 6, cert.table)
    n_space, r_space = cert.witnesses["N"], cert.witnesses["R"]
    # [N, R] lands in R and [R, R] = 0
    for n_row in n_space.basis.rows:
        for r_row in r_space.basis.rows:
            assert r_space.contains(alg.bracket(n_row, r_row))
    assert bracket_span(alg, r_space).dim == 0
    chain = derived_series_of_subspace(alg, r_space)
    assert [s.dim for s in chain] == [3, 0]


def test_ideal_closure_zero_seed():
    from orthocurrent.liealg import ideal_closure

    cert = classify(Q, ints(Q, [1, 1, 1, 1]))
    alg = LieAlgebraSC(Q, 6, cert.table)
    zero_vec = tuple(Q.zero() for _ in range(6))
    assert ideal_closure(alg, [zero_vec]).dim == 0


def test_random_w_retry_and_exhaustion():
    from orthocurrent.structure import NondegenerateWRequired

    ones = [F2.one()] * 4
    report = verify_current_form(F2, ones, seed=0)
    assert report.random_w.attempts == 4 and report.ok
    with pytest.raises(NondegenerateWRequired):
        verify_current_form(F2, ones, seed=0, max_tries=1)


def test_verify_randomized_smoke():
    rng = random.Random(99)
    for field in [Q, F3, F2T]:
        entries = [random_element(field, rng, nonzero=True) for _ in range(4)]
        report = verify_current_form(field, entries, seed=1)
        assert report.ok, [c for c in report.checks if not c.ok]
