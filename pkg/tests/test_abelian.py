"""Tests for finite abelian groups and exact character evaluation."""

import random
from itertools import product

import pytest

from qlhopf.abelian import AbelianGroup, Automorphism, automorphisms, evaluate
from qlhopf.cyclotomic import Cyclotomic

zeta = Cyclotomic.root_of_unity


def test_element_orders():
    G = AbelianGroup([9, 3])
    assert G.element((1, 0)).order() == 9
    assert G.element((0, 1)).order() == 3
    assert G.element((3, 1)).order() == 3
    assert G.identity().order() == 1


def test_enumeration_sizes_and_determinism():
    G = AbelianGroup([3, 5])
    assert len(G.elements()) == 15
    assert len(G.characters()) == 15
    assert [g.exponents for g in G.elements()] == sorted(
        g.exponents for g in G.elements()
    )
    assert G.elements() == G.elements()


def test_group_arithmetic():
    G = AbelianGroup([4])
    g = G.element((3,))
    assert (g * g).exponents == (2,)
    assert (g * g.inverse()).is_identity
    assert (g ** 6).exponents == (2,)


def test_evaluate_examples():
    G = AbelianGroup([3])
    assert evaluate(G.trivial_character(), G.element((2,))).is_one
    assert evaluate(G.character((1,)), G.element((1,))) == zeta(3)
    K = AbelianGroup([9, 9])
    assert evaluate(K.character((2, 3)), K.element((1, 1))) == zeta(9, 5)


def test_evaluate_rejects_group_mismatch():
    G, H = AbelianGroup([3]), AbelianGroup([9])
    with pytest.raises(ValueError):
        evaluate(G.trivial_character(), H.identity())


def test_evaluate_multiplicative():
    G = AbelianGroup([9, 3])
    rng = random.Random(7)
    for _ in range(20):
        chi = G.character((rng.randrange(9), rng.randrange(3)))
        g = G.element((rng.randrange(9), rng.randrange(3)))
        h = G.element((rng.randrange(9), rng.randrange(3)))
        assert evaluate(chi, g * h) == evaluate(chi, g) * evaluate(chi, h)
        psi = G.character((rng.randrange(9), rng.randrange(3)))
        assert evaluate(chi * psi, g) == evaluate(chi, g) * evaluate(psi, g)


def _small_groups(max_order):
    """All factor sequences (each >= 2, ascending) with product <= max_order."""
    out = []

    def extend(prefix, start, remaining):
        if prefix:
            out.append(AbelianGroup(prefix))
        for m in range(start, remaining + 1):
            extend(prefix + [m], m, remaining // m)

    extend([], 2, max_order)
    return out


def test_characters_separate_points_and_value_orders():
    for G in _small_groups(60):
        chars = G.characters()
        for g in G.elements():
            values = [evaluate(chi, g) for chi in chars]
            if not g.is_identity:
                assert any(not v.is_one for v in values)
            for v in values:
                assert (v ** g.order()).is_one


def test_character_order():
    G = AbelianGroup([9, 3])
    assert G.trivial_character().order() == 1
    assert G.character((3, 1)).order() == 3
    assert G.character((1, 1)).order() == 9


def test_automorphism_counts():
    assert len(automorphisms(AbelianGroup([5]))) == 4
    assert len(automorphisms(AbelianGroup([9]))) == 6
    # invertible 2x2 matrices mod 3: (9-1)(9-3)
    assert len(automorphisms(AbelianGroup([3, 3]))) == 48


def test_automorphisms_bound():
    with pytest.raises(ValueError):
        automorphisms(AbelianGroup([129]), bound=128)


def test_automorphisms_closed_under_composition():
    auts = automorphisms(AbelianGroup([9]))
    pool = set(auts)
    for a in auts:
        for b in auts:
            assert a.compose(b) in pool
        assert a.inverse() in pool
        assert a.compose(a.inverse()).is_identity()


def test_automorphism_is_homomorphism():
    G = AbelianGroup([9, 3])
    phi = automorphisms(G)[17]
    for g, h in product(G.elements()[:6], repeat=2):
        assert phi.apply(g * h) == phi.apply(g) * phi.apply(h)


def test_character_transport():
    G = AbelianGroup([9, 3])
    chi = G.character((4, 2))
    for phi in automorphisms(G)[:10]:
        moved = phi.apply_character(chi)
        for g in G.elements():
            assert evaluate(moved, g) == evaluate(chi, phi.apply(g))


def test_spec_string_roundtrip():
    G = AbelianGroup.from_spec("9,3")
    assert G.factors == (9, 3)
    assert AbelianGroup.from_spec(G.spec_string()) == G
    with pytest.raises(ValueError):
        AbelianGroup([1])
