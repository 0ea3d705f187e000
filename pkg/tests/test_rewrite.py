"""Tests for normal forms, overlap resolution, and scalar constraints."""

import random

import pytest

from qlhopf.abelian import AbelianGroup
from qlhopf.cyclotomic import Cyclotomic
from qlhopf.rewrite import (
    Presentation,
    ScalarPoly,
    check_overlaps,
    constraint_sets_equivalent,
    irreducible_basis,
    reference_constraints,
    violated_constraints,
)

zeta = Cyclotomic.root_of_unity
one = Cyclotomic(1)


def taft_presentation(mu=0):
    G = AbelianGroup([3])
    return Presentation(G, [G.element((1,))], [G.character((1,))], [mu], {})


def family_presentation(lam, mu=1):
    # two skew letters over Z/6 with chi_1 of value z3 and chi_2 its inverse
    G = AbelianGroup([6])
    y = G.element((1,))
    return Presentation(
        G,
        [y, y],
        [G.character((2,)), G.character((4,))],
        [mu, mu],
        {(0, 1): lam},
    )


def test_taft_normal_forms():
    P = taft_presentation()
    a, h = P.a_letter(0), P.h_letter(0)
    assert P.normal_form((a, h)) == {(h, a): zeta(3, 2)}
    assert P.normal_form((h, h, h)) == {(): one}
    assert P.normal_form((a, a, a)) == {}


def test_family_normal_forms():
    P = family_presentation(lam=one)
    a1, a2, h = P.a_letter(0), P.a_letter(1), P.h_letter(0)
    assert P.normal_form((a2, a1)) == {
        (a1, a2): zeta(3),
        (): one,
        (h, h): Cyclotomic(-1),
    }
    assert P.normal_form((a1, a1, a1)) == {(): one, (h, h, h): Cyclotomic(-1)}
    # scalars multiply through reductions of longer words
    nf = P.normal_form((a2, h, a1))
    assert set(nf) == {(h, a1, a2), (h,), (h, h, h)}


def test_normal_form_of_combination():
    P = taft_presentation()
    a, h = P.a_letter(0), P.h_letter(0)
    combo = {(a, h): one, (h, a): -zeta(3, 2)}
    assert P.normal_form(combo) == {}


def test_termination_bound_on_random_words():
    P = family_presentation(lam=one)
    rng = random.Random(3)
    letters = [0, P.a_letter(0), P.a_letter(1)]
    for _ in range(50):
        w = tuple(rng.choice(letters) for _ in range(rng.randint(0, 8)))
        assert P.reduction_steps(w, bound=20000) < 20000


def _rightmost_nf(P, word, max_steps=50000):
    combo = {word: P.one}
    for _ in range(max_steps):
        target = None
        for w in combo:
            for p in range(len(w) - 1, -1, -1):
                m = P._match(w, p)
                if m is not None:
                    target = (w, p, m)
                    break
            if target:
                break
        if target is None:
            return combo
        w, p, m = target
        c = combo.pop(w)
        for coeff, w2 in P._apply(w, p, m):
            s = combo.get(w2)
            total = coeff * c if s is None else s + coeff * c
            if total.is_zero:
                combo.pop(w2, None)
            else:
                combo[w2] = total
    raise AssertionError("rightmost reduction did not terminate")


def test_strategy_independence_on_confluent_presentation():
    P = family_presentation(lam=zeta(3))
    rng = random.Random(5)
    letters = [0, P.a_letter(0), P.a_letter(1)]
    for _ in range(100):
        w = tuple(rng.choice(letters) for _ in range(rng.randint(0, 7)))
        assert P.normal_form(w) == _rightmost_nf(P, w)


def test_compatible_data_are_confluent():
    for P in (taft_presentation(0), family_presentation(one), family_presentation(Cyclotomic(0))):
        report = check_overlaps(P)
        assert report.confluent
        assert violated_constraints(P) == []


def test_symbolic_compatible_datum_confluent():
    # the pair conditions hold identically, so even symbolic scalars resolve
    G = AbelianGroup([6])
    y = G.element((1,))
    P = Presentation(
        G, [y, y], [G.character((2,)), G.character((4,))], None, None, symbolic=True
    )
    assert check_overlaps(P).confluent


def test_symbolic_generic_rank_two_constraint_set():
    # two skew letters over Z/9 whose character product is nontrivial
    G = AbelianGroup([9])
    y = G.element((1,))
    P = Presentation(
        G,
        [y, y ** 2],
        [G.character((3,)), G.character((3,))],
        None,
        None,
        symbolic=True,
    )
    report = check_overlaps(P)
    assert not report.confluent
    emitted = report.residual_polys()
    reference = reference_constraints(P)
    assert [name for name, _, _ in reference] == ["pair_scalar_vanishes"]
    assert constraint_sets_equivalent(emitted, reference)


def test_violating_datum_power_scalar():
    # carrier of order 9 with a character whose cube is nontrivial
    K = AbelianGroup([9, 9])
    g = K.element((1, 0))
    chi = K.character((3, 1))
    P = Presentation(K, [g], [chi], [1], {})
    report = check_overlaps(P)
    assert not report.confluent
    assert {c.family for c in report.unresolved()} == {"letter_power_group"}
    assert ("power_scalar_vanishes", (0,)) in violated_constraints(P)
    fixed = Presentation(K, [g], [chi], [0], {})
    assert check_overlaps(fixed).confluent


def test_violating_datum_pair_scalar():
    # lambda nonzero although the character product is nontrivial
    G = AbelianGroup([9])
    y = G.element((1,))
    P = Presentation(
        G, [y, y ** 2], [G.character((3,)), G.character((3,))], [0, 0], {(0, 1): one}
    )
    report = check_overlaps(P)
    assert not report.confluent
    assert "pair_group" in {c.family for c in report.unresolved()}
    assert ("pair_scalar_vanishes", (0, 1)) in violated_constraints(P)


def test_violating_datum_mixed_power_in_pair():
    # mu on the second letter although chi_1(g_2) has nontrivial cube
    K = AbelianGroup([9, 9])
    g1, g2 = K.element((1, 0)), K.element((0, 1))
    chi1, chi2 = K.character((3, 1)), K.character((8, 3))
    P = Presentation(K, [g1, g2], [chi1, chi2], [0, 1], {})
    report = check_overlaps(P)
    assert not report.confluent
    assert "pair_power_left" in {c.family for c in report.unresolved()}
    assert ("power_scalar_vanishes", (1,)) in violated_constraints(P)


def test_irreducible_basis_counts():
    assert len(irreducible_basis(taft_presentation())) == 9
    assert len(irreducible_basis(family_presentation(one))) == 54
    G = AbelianGroup([3])
    y = G.element((1,))
    P = Presentation(G, [y, y], [G.character((1,)), G.character((2,))], [0, 0], {})
    assert len(irreducible_basis(P)) == 27


def test_irreducible_basis_rejects_non_confluent():
    G = AbelianGroup([9])
    y = G.element((1,))
    P = Presentation(
        G, [y, y ** 2], [G.character((3,)), G.character((3,))], [0, 0], {(0, 1): one}
    )
    with pytest.raises(ValueError):
        irreducible_basis(P)


def test_basis_words_are_irreducible():
    P = family_presentation(zeta(3))
    for w in irreducible_basis(P):
        assert P.normal_form(w) == {w: one}


def test_scalar_poly_arithmetic():
    x = ScalarPoly.variable("x")
    y = ScalarPoly.variable("y")
    p = (x + y) * (x - y)
    assert p == x * x - y * y
    assert (x - x).is_zero
    assert ScalarPoly.constant(1).is_one
    q = x * zeta(3) + 2
    assert q.substitute({"x": zeta(3, 2)}) == Cyclotomic(3)
    assert p.max_exponent() == 2
    assert sorted(p.variables()) == ["x", "y"]


def test_presentation_rejects_trivial_q():
    G = AbelianGroup([3])
    with pytest.raises(ValueError):
        Presentation(G, [G.element((1,))], [G.trivial_character()], [0], {})
