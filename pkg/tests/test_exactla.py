"""Tests for exact sparse linear algebra."""

import random
from fractions import Fraction

import pytest

from qlhopf.cyclotomic import Cyclotomic
from qlhopf.exactla import Subspace, algebra_radical, kernel, rref, solve

zeta = Cyclotomic.root_of_unity
one = Cyclotomic(1)


def _cy(n):
    return Cyclotomic(n)


def test_kernel_of_identity_is_zero():
    identity = [{j: one} for j in range(4)]
    assert kernel(identity, 4) == Subspace.zero(4)


def test_kernel_basic():
    # x0 + x1 = 0 in k^3
    ker = kernel([{0: one, 1: one}], 3)
    assert ker.dim == 2
    assert ker.contains({0: one, 1: _cy(-1)})
    assert ker.contains({2: zeta(5)})
    assert not ker.contains({0: one})


def test_annihilator_of_zero_is_full():
    assert Subspace.zero(5).annihilator() == Subspace.full(5)
    assert Subspace.full(5).annihilator() == Subspace.zero(5)


def _random_vec(rng, width):
    return {
        j: Cyclotomic(rng.randint(-2, 2)) + zeta(3, rng.randrange(3))
        for j in rng.sample(range(width), rng.randint(1, width))
    }


def _random_space(rng, width):
    return Subspace(width, [_random_vec(rng, width) for _ in range(rng.randint(0, width))])


def test_subspace_identities_random():
    rng = random.Random(11)
    for _ in range(15):
        U = _random_space(rng, 5)
        V = _random_space(rng, 5)
        assert U.intersect(U) == U
        assert U.add(U) == U
        assert U.annihilator().annihilator() == U
        assert U.annihilator().dim == 5 - U.dim
        both = U.intersect(V)
        assert both <= U and both <= V
        total = U.add(V)
        assert U <= total and V <= total
        assert total.dim + both.dim == U.dim + V.dim


def test_rref_is_canonical():
    rows1 = [{0: one, 1: one}, {1: one, 2: one}]
    rows2 = [{0: one, 2: _cy(-1)}, {1: one, 2: one}, {0: one, 1: one}]
    assert Subspace(3, rows1) == Subspace(3, rows2)
    assert rref(rows1) == rref(list(reversed(rows1)))


def test_solve():
    rows = [{0: one, 1: one}, {1: one}]
    x = solve(rows, 2, [Cyclotomic(3), Cyclotomic(1)])
    assert x == {0: _cy(2), 1: one}
    assert solve([{0: one}, {0: one}], 1, [one, _cy(2)]) is None


def test_solve_with_free_variables():
    x = solve([{0: one, 2: one}], 3, [zeta(3)])
    assert x == {0: zeta(3)}


def test_annihilator_with_pairing():
    # pairing <f, u> = sum f_i P_ij u_j with P swapping the two coordinates
    P = [{1: one}, {0: one}]
    U = Subspace(2, [{0: one}])
    ann = U.annihilator(pairing=P)
    assert ann.dim == 1
    assert ann.contains({0: one})


def test_radical_of_cyclic_group_algebra_is_zero():
    # group algebra of Z/3: e_i e_j = e_{i+j mod 3}
    rad = algebra_radical(3, lambda i, j: {(i + j) % 3: one})
    assert rad.dim == 0


def test_radical_of_dual_numbers():
    # k[x]/(x^2) on basis 1, x
    def mult(i, j):
        return {i + j: one} if i + j < 2 else {}

    rad = algebra_radical(2, mult)
    assert rad.dim == 1
    assert rad.contains({1: one})


def test_radical_of_truncated_polynomials_nilpotence():
    # k[x]/(x^3) on basis 1, x, x^2: J = span{x, x^2}, J^2 = span{x^2}, J^3 = 0
    def mult(i, j):
        return {i + j: one} if i + j < 3 else {}

    rad = algebra_radical(3, mult)
    assert rad.dim == 2
    assert rad.contains({1: one}) and rad.contains({2: one})

    def multiply_vecs(u, v):
        out = {}
        for i, a in u.items():
            for j, b in v.items():
                for k, c in mult(i, j).items():
                    out[k] = out.get(k, Cyclotomic(0)) + a * b * c
        return {k: c for k, c in out.items() if not c.is_zero}

    basis = rad.basis()
    # J*J inside J, and J^3 = 0
    squares = [multiply_vecs(u, v) for u in basis for v in basis]
    for s in squares:
        assert rad.contains(s)
    for s in squares:
        for u in basis:
            assert multiply_vecs(s, u) == {}


def test_radical_with_cyclotomic_structure_constants():
    # twisted Z/3 algebra: e_i e_j = zeta_3^{ij} e_{i+j}; still semisimple
    def mult(i, j):
        return {(i + j) % 3: zeta(3, i * j)}

    assert algebra_radical(3, mult).dim == 0
