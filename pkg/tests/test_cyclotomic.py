"""Tests for exact cyclotomic field arithmetic."""

import json
import random
from fractions import Fraction
from math import gcd

import pytest

from qlhopf.cyclotomic import (
    Cyclotomic,
    arith,
    embed,
    order,
    parse_scalar,
    qbinomial,
)

zeta = Cyclotomic.root_of_unity


def test_i_squared_is_minus_one():
    assert zeta(4) * zeta(4) == Cyclotomic(-1)


def test_cube_roots_sum_to_zero():
    assert (Cyclotomic(1) + zeta(3) + zeta(3, 2)).is_zero


def test_inverse_axiom():
    a = Cyclotomic(1) - zeta(5)
    assert (a.inverse() * a).is_one
    assert (arith(Cyclotomic(1), a, "div") * a).is_one


def test_arith_dispatch():
    a, b = zeta(3), zeta(4)
    assert arith(a, b, "add") == a + b
    assert arith(a, b, "sub") == a - b
    assert arith(a, b, "mul") == a * b
    assert arith(a, b, "div") == a / b
    with pytest.raises(ValueError):
        arith(a, b, "pow")
    with pytest.raises(ZeroDivisionError):
        arith(a, Cyclotomic(0), "div")


def test_order_examples():
    assert order(zeta(9, 3)) == 3
    assert order(Cyclotomic(1)) == 1
    assert order(Cyclotomic(-1)) == 2
    # oracle by direct exponentiation: least n with (zeta_9^4)^n = 1
    a = zeta(9, 4)
    power = a
    n = 1
    while not power.is_one:
        power = power * a
        n += 1
    assert n == 9
    assert order(a) == 9


def test_order_gcd_table():
    for N in range(1, 25):
        for k in range(1, N + 1):
            assert order(zeta(N, k)) == N // gcd(N, k)


def test_non_roots_of_unity():
    assert order(Cyclotomic(0)) is None
    assert order(Cyclotomic(2)) is None
    assert order(Cyclotomic(Fraction(1, 2))) is None
    assert order(Cyclotomic(1) - zeta(5)) is None


def test_embed_minus_one_at_level_six():
    vec = embed(Cyclotomic(-1), 6)
    # zeta_6^3 = -1, and x^3 mod Phi_6 = x^2 - x + 1 reduces to -1
    assert vec == (Fraction(-1), Fraction(0))
    assert Cyclotomic.from_coeffs(6, vec) == Cyclotomic(-1)


def test_embed_cube_root_at_level_nine():
    vec = embed(zeta(3), 9)
    assert vec == (0, 0, 0, 1, 0, 0)
    assert Cyclotomic.from_coeffs(9, vec) == zeta(3)


def test_embed_identity_case():
    for a in (zeta(5) + 2, Cyclotomic(Fraction(3, 7)), zeta(8, 3)):
        assert embed(a, a.level) == a.coeffs()


def test_embed_rejects_non_divisible_level():
    with pytest.raises(ValueError):
        embed(zeta(4), 6)


def _random_element(rng):
    level = rng.choice([1, 3, 4, 5, 8, 12])
    out = Cyclotomic(rng.randint(-3, 3))
    for _ in range(2):
        out = out + Fraction(rng.randint(-4, 4), rng.randint(1, 3)) * zeta(
            level, rng.randrange(level)
        )
    return out


def test_field_axioms_on_random_triples():
    rng = random.Random(20260822)
    for _ in range(25):
        a, b, c = (_random_element(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert (a - a).is_zero
        if not a.is_zero:
            assert (a * a.inverse()).is_one


def test_canonical_minimal_level():
    assert zeta(6).level == 3
    assert zeta(6) == Cyclotomic(1) + zeta(3)
    assert zeta(9, 3) == zeta(3)
    assert zeta(8, 2) == zeta(4)
    assert zeta(12, 4) == zeta(3)
    assert (zeta(5) - zeta(5)).level == 1
    mixed = zeta(3) + zeta(4)
    assert mixed.level == 12
    assert mixed - zeta(4) == zeta(3)


def test_powers():
    assert zeta(5) ** 0 == Cyclotomic(1)
    assert zeta(5) ** -1 == zeta(5, 4)
    assert zeta(7) ** 10 == zeta(7, 3)


def test_hash_and_equality_with_rationals():
    assert Cyclotomic(2) == 2
    assert Cyclotomic(Fraction(3, 2)) == Fraction(3, 2)
    assert hash(Cyclotomic(Fraction(3, 2))) == hash(Fraction(3, 2))
    assert len({zeta(6), Cyclotomic(1) + zeta(3)}) == 1


def test_immutability():
    a = zeta(5)
    with pytest.raises(AttributeError):
        a.level = 10


def test_qbinomial_two_choose_one():
    for q in (zeta(3), zeta(5), Cyclotomic(2)):
        assert qbinomial(2, 1, q) == Cyclotomic(1) + q


def test_qbinomial_edges_are_one():
    q = zeta(7)
    for n in range(6):
        assert qbinomial(n, 0, q).is_one
        assert qbinomial(n, n, q).is_one


def _qfactorial_quotient(n, i, q):
    """Oracle: (n)_q! / ((i)_q! (n-i)_q!) with (k)_q = (q^k-1)/(q-1)."""
    one = Cyclotomic(1)

    def qfact(m):
        out = one
        for k in range(1, m + 1):
            out = out * ((q ** k - one) / (q - one))
        return out

    return qfact(n) / (qfact(i) * qfact(n - i))


def test_qbinomial_four_choose_two_at_fifth_root():
    # independent oracle from the factorial quotient, valid since 4 < ord(q)
    q = zeta(5)
    expected = _qfactorial_quotient(4, 2, q)
    assert expected == (1 + q ** 2) * (1 + q + q ** 2)
    assert expected == zeta(5, 2)
    assert qbinomial(4, 2, q) == expected


def test_qbinomial_matches_factorial_formula():
    for q in (zeta(7), zeta(12), Cyclotomic(3)):
        for n in range(2, 7):
            for i in range(n + 1):
                assert qbinomial(n, i, q) == _qfactorial_quotient(n, i, q)


def test_qbinomial_vanishes_at_order():
    for N in (2, 3, 4, 5, 6, 9):
        q = zeta(N)
        assert qbinomial(N, 0, q).is_one
        assert qbinomial(N, N, q).is_one
        for i in range(1, N):
            assert qbinomial(N, i, q).is_zero


def test_qbinomial_rejections():
    with pytest.raises(ValueError):
        qbinomial(2, 3, zeta(5))
    with pytest.raises(ValueError):
        qbinomial(2, -1, zeta(5))
    with pytest.raises(ValueError):
        qbinomial(2, 1, Cyclotomic(1))
    with pytest.raises(ValueError):
        qbinomial(4, 1, zeta(3))


def test_json_roundtrip():
    values = [
        Cyclotomic(0),
        Cyclotomic(Fraction(-7, 3)),
        zeta(5) / 3 + 1,
        (Cyclotomic(1) + zeta(8)) / 5,
    ]
    for v in values:
        data = v.to_json()
        assert Cyclotomic.from_json(data) == v
        s1 = json.dumps(data, sort_keys=True)
        s2 = json.dumps(Cyclotomic.from_json(data).to_json(), sort_keys=True)
        assert s1 == s2


def test_parse_scalar():
    assert parse_scalar("2/3") == Cyclotomic(Fraction(2, 3))
    assert parse_scalar("-4") == Cyclotomic(-4)
    assert parse_scalar("z5^2") == zeta(5, 2)
    assert parse_scalar("z6") == zeta(6)
    assert parse_scalar("1/2*z8^3") == Fraction(1, 2) * zeta(8, 3)
    with pytest.raises(ValueError):
        parse_scalar("q*z3")
