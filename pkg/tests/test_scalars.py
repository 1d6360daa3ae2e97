import random

import pytest

from orthocurrent.scalars import (
    DivisionByZero,
    DomainError,
    DescriptorMismatch,
    ParseError,
    Poly,
    function_field,
    inv,
    is_square,
    parse_field,
    parse_scalar,
    poly_gcd,
    poly_squarefree,
    prime_field,
    pth_root,
    quadratic_extension,
    random_element,
    rationals,
    render_field,
    render_scalar,
)

Q = rationals()
F2 = prime_field(2)
F3 = prime_field(3)
F5 = prime_field(5)
F2T = function_field(2, "t")
F3T = function_field(3, "t")


def el(lit, field):
    return parse_scalar(lit, field)


def test_parse_reduces_fractions():
    assert el("3/6", Q) == el("1/2", Q)
    assert render_scalar(el("3/6", Q)) == "1/2"


def test_parse_prime_residue():
    assert el("5", F3) == F3.from_int(2)
    assert el("-1", F3) == F3.from_int(2)


def test_parse_funfield_division():
    # (t^2+t)/t = t+1 over F_2
    assert el("(t^2+t)/(t)", F2T) == el("t+1", F2T)


def test_parse_fraction_with_zero_denominator_rejected():
    with pytest.raises(DomainError):
        el("1/2", F2)


def test_parse_malformed():
    for bad in ["", "t++1", "(t", "x+1", "1/2/3"]:
        with pytest.raises((ParseError, DomainError)):
            el(bad, F2T)


def test_parse_render_round_trip():
    rng = random.Random(7)
    qext = quadratic_extension(Q, Q.from_int(2))
    f3ext = quadratic_extension(F3, F3.from_int(2))
    f2text = quadratic_extension(F2T, el("t", F2T))
    for field in [Q, F2, F3, F5, F2T, F3T, qext, f3ext, f2text]:
        for _ in range(50):
            x = random_element(field, rng)
            assert parse_scalar(render_scalar(x), field) == x


def test_field_literal_round_trip():
    for lit in ["Q", "F3", "F2(t)", "F5(u)", "Q[sqrt 2]", "F2(t)[sqrt t]"]:
        assert render_field(parse_field(lit)) == lit


def test_prime_field_requires_prime():
    with pytest.raises(DomainError):
        prime_field(6)
    with pytest.raises(ParseError):
        parse_field("F4")


def test_inv_examples():
    assert inv(F5.from_int(2)) == F5.from_int(3)
    t = el("t", F2T)
    assert inv(t) == el("1/t", F2T) == el("(1)/(t)", F2T)
    qext = quadratic_extension(Q, Q.from_int(2))
    x = el("1+1*r", qext)
    assert inv(x) == el("-1+1*r", qext)
    assert x * inv(x) == qext.one()
    with pytest.raises(DivisionByZero):
        inv(Q.zero())


def test_cross_field_arithmetic_rejected():
    with pytest.raises(DescriptorMismatch):
        Q.one() + F3.one()


def test_is_square_rationals():
    assert is_square(el("4/9", Q)) == el("2/3", Q)
    assert is_square(el("-1", Q)) is None
    assert is_square(el("2", Q)) is None
    assert is_square(Q.zero()) == Q.zero()


def test_is_square_prime_agrees_with_enumeration():
    for p in (2, 3, 5, 7, 11):
        field = prime_field(p)
        squares = {(r * r) % p: None for r in range(p)}
        for x in range(p):
            root = is_square(field.from_int(x))
            if x in squares:
                assert root is not None and root * root == field.from_int(x)
            else:
                assert root is None
    # squares mod 3 are {0, 1}
    assert is_square(F3.from_int(2)) is None


def test_is_square_funfield():
    assert is_square(el("t^2", F2T)) == el("t", F2T)
    assert is_square(el("t", F2T)) is None
    assert is_square(el("t^2+1", F2T)) == el("t+1", F2T)
    assert is_square(el("(t^2)/(t^2+1)", F2T)) == el("(t)/(t+1)", F2T)
    # over F_3: unit part must be a square residue as well
    assert is_square(el("t^2", F3T)) == el("t", F3T)
    assert is_square(el("2*t^2", F3T)) is None


def test_is_square_quadratic_extension():
    qext = quadratic_extension(Q, Q.from_int(2))
    # (1+r)^2 = 3+2r
    x = el("3+2*r", qext)
    root = is_square(x)
    assert root is not None and root * root == x
    assert is_square(el("2", qext)) is not None  # adjoined root of 2
    f2text = quadratic_extension(F2T, el("t", F2T))
    # in characteristic 2 anything along r is a non-square
    assert is_square(el("(t)*r", f2text)) is None
    # and every base element becomes a square: t+1 = (1+r)^2 with r^2 = t
    y = el("t+1", f2text)
    root = is_square(y)
    assert root is not None and root * root == y


def test_every_f2_element_is_a_square():
    for x in (F2.zero(), F2.one()):
        root = is_square(x)
        assert root is not None and root * root == x


def test_pth_root():
    assert pth_root(el("t^2", F2T)) == el("t", F2T)
    assert pth_root(el("t", F2T)) is None
    assert pth_root(el("t^3", F3T)) == el("t", F3T)
    assert pth_root(el("t", F3T)) is None
    assert pth_root(F5.from_int(3)) == F5.from_int(3)


def test_poly_gcd_examples():
    t2t = Poly(2, (0, 1, 1))  # t^2+t
    t = Poly(2, (0, 1))
    assert poly_gcd(t2t, t) == t
    # t^2+1 = (t+1)^2 in characteristic 2
    assert poly_gcd(Poly(2, (1, 0, 1)), Poly(2, (1, 1))) == Poly(2, (1, 1))
    f = Poly(5, (2, 4))
    assert poly_gcd(f, Poly(5, ())) == f.monic()
    with pytest.raises(DomainError):
        poly_gcd(Poly(5, ()), Poly(5, ()))


def test_poly_squarefree_examples():
    t = Poly(2, (0, 1))
    assert poly_squarefree(Poly(2, (0, 0, 1))) == [(t, 2)]
    # derivative vanishes: t^2+1 = (t+1)^2
    assert poly_squarefree(Poly(2, (1, 0, 1))) == [(Poly(2, (1, 1)), 2)]
    assert poly_squarefree(Poly(2, (0, 1, 1))) == [(Poly(2, (0, 1, 1)), 1)]
    # mixed multiplicities over F_3: t^2 (t+1)^3
    f = Poly(3, (0, 0, 1)) * Poly(3, (1, 1)).pow(3)
    decomp = poly_squarefree(f)
    rebuilt = Poly.const(3, 1)
    for g, m in decomp:
        rebuilt = rebuilt * g.pow(m)
    assert rebuilt == f.monic()
    assert sorted(m for _, m in decomp) == [2, 3]


def test_canonical_idempotence_and_hash():
    rng = random.Random(3)
    for field in [Q, F3, F2T]:
        for _ in range(30):
            x = random_element(field, rng)
            y = parse_scalar(render_scalar(x), field)
            assert x == y and hash(x) == hash(y)


def test_field_axioms_randomized():
    rng = random.Random(11)
    qext = quadratic_extension(Q, Q.from_int(2))
    f2text = quadratic_extension(F2T, el("t", F2T))
    for field in [Q, F2, F3, F5, F2T, F3T, qext, f2text]:
        one = field.one()
        for _ in range(25):
            x = random_element(field, rng)
            y = random_element(field, rng)
            z = random_element(field, rng)
            assert (x + y) + z == x + (y + z)
            assert (x * y) * z == x * (y * z)
            assert x + y == y + x
            assert x * y == y * x
            assert x * (y + z) == x * y + x * z
            assert x + (-x) == field.zero()
            if not x.is_zero():
                assert x * inv(x) == one


def test_is_square_root_squares_back():
    rng = random.Random(5)
    for field in [Q, F3, F5, F2T, F3T]:
        for _ in range(40):
            x = random_element(field, rng)
            root = is_square(x)
            if root is not None:
                assert root * root == x
            sq = x * x
            root2 = is_square(sq)
            assert root2 is not None and root2 * root2 == sq


def test_quadratic_extension_requires_non_square():
    with pytest.raises(DomainError):
        quadratic_extension(Q, Q.from_int(4))
    with pytest.raises(DomainError):
        quadratic_extension(Q, Q.zero())
