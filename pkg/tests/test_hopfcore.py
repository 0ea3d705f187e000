"""Tests for structure-constant Hopf algebras and their invariants."""

import pytest

from qlhopf.abelian import AbelianGroup
from qlhopf.cyclotomic import Cyclotomic
from qlhopf.hopfcore import (
    StructureHopf,
    associated_graded,
    coradical_filtration,
    dual,
    graded_degrees,
    group_algebra,
    grouplikes,
    invariant_record,
    multiply_tensor,
    one_dim_reps,
    skew_primitives,
    verify_axioms,
)

zeta = Cyclotomic.root_of_unity
one = Cyclotomic(1)
minus = Cyclotomic(-1)


def four_dim_example():
    # basis 1, g, x, gx with g*g = 1, x*x = 0, x*g = -g*x, x skew-primitive
    names = ("1", "g", "x", "gx")
    mult = {
        (0, 0): {0: one}, (0, 1): {1: one}, (0, 2): {2: one}, (0, 3): {3: one},
        (1, 0): {1: one}, (1, 1): {0: one}, (1, 2): {3: one}, (1, 3): {2: one},
        (2, 0): {2: one}, (2, 1): {3: minus}, (3, 0): {3: one}, (3, 1): {2: minus},
    }
    comult = {
        0: {(0, 0): one},
        1: {(1, 1): one},
        2: {(2, 0): one, (1, 2): one},
        3: {(3, 1): one, (0, 3): one},
    }
    unit = {0: one}
    counit = {0: one, 1: one}
    antipode = {0: {0: one}, 1: {1: one}, 2: {3: minus}, 3: {2: one}}
    return StructureHopf(names, mult, comult, unit, counit, antipode)


def braided_line():
    # k[x]/(x^3) with x of degree g and diagonal action of value zeta_3
    G = AbelianGroup([3])
    q = zeta(3)
    names = ("1", "x", "x2")
    mult = {(0, 0): {0: one}, (0, 1): {1: one}, (0, 2): {2: one},
            (1, 0): {1: one}, (2, 0): {2: one}, (1, 1): {2: one}}
    comult = {
        0: {(0, 0): one},
        1: {(1, 0): one, (0, 1): one},
        2: {(2, 0): one, (1, 1): one + q, (0, 2): one},
    }
    unit = {0: one}
    counit = {0: one}
    antipode = {0: {0: one}, 1: {1: minus}, 2: {2: q}}
    degrees = [G.identity(), G.element((1,)), G.element((2,))]
    characters = [G.trivial_character(), G.character((1,)), G.character((2,))]
    return StructureHopf(names, mult, comult, unit, counit, antipode,
                         kind="braided", group=G, degrees=degrees,
                         characters=characters)


def test_group_algebra_axioms():
    H = group_algebra(AbelianGroup([6]))
    assert verify_axioms(H).ok


def test_four_dim_axioms():
    assert verify_axioms(four_dim_example()).ok


def test_braided_line_axioms():
    assert verify_axioms(braided_line()).ok


def test_perturbed_associativity_fails_with_witness():
    H = four_dim_example()
    mult = {k: dict(v) for k, v in H.mult.items()}
    mult[(1, 1)] = {0: one, 2: one}
    bad = StructureHopf(H.names, mult, H.comult, H.unit, H.counit, H.antipode)
    report = verify_axioms(bad)
    assert not report.ok
    assert report.checks["associativity"] is not None


def test_multiply_tensor_braided_picks_up_crossing():
    R = braided_line()
    left = {(1, 0): one}
    right = {(0, 1): one}
    assert multiply_tensor(R, left, right) == {(1, 1): one}
    assert multiply_tensor(R, right, left) == {(1, 1): zeta(3)}


def test_dual_of_group_algebra():
    H = group_algebra(AbelianGroup([6]))
    D = dual(H)
    assert verify_axioms(D).ok
    rep = grouplikes(D)
    assert rep.count == 6
    assert rep.invariant_factors == (6,)


def test_dual_is_involutive_on_tables():
    H = four_dim_example()
    DD = dual(dual(H))
    assert DD.mult == H.mult
    assert DD.comult == H.comult
    assert DD.antipode == H.antipode


def test_dual_counit_is_evaluation_at_unit():
    H = four_dim_example()
    assert dual(H).counit == H.unit


def test_coradical_filtration_group_algebra():
    H = group_algebra(AbelianGroup([3, 3]))
    chain = coradical_filtration(H)
    assert [s.dim for s in chain] == [9]


def test_coradical_filtration_four_dim():
    chain = coradical_filtration(four_dim_example())
    assert [s.dim for s in chain] == [2, 4]


def test_grouplikes_of_group_algebras():
    rep = grouplikes(group_algebra(AbelianGroup([9])))
    assert rep.count == 9
    assert rep.invariant_factors == (9,)
    assert rep.pointed
    rep2 = grouplikes(group_algebra(AbelianGroup([2, 2])))
    assert rep2.invariant_factors == (2, 2)


def test_grouplikes_four_dim():
    H = four_dim_example()
    rep = grouplikes(H)
    assert rep.count == 2
    assert rep.invariant_factors == (2,)
    assert rep.pointed
    assert rep.complete


def test_grouplike_group_structure():
    H = group_algebra(AbelianGroup([2, 3]))
    rep = grouplikes(H)
    assert rep.count == 6
    # 2 x 3 is cyclic of order 6
    assert rep.invariant_factors == (6,)
    for i in range(rep.count):
        inv = rep.inverse_index[i]
        assert rep.mult_index[i][inv] == rep.identity_index


def test_skew_primitives_four_dim():
    H = four_dim_example()
    rep = grouplikes(H)
    gidx = next(i for i in range(rep.count) if rep.orders[i] == 2)
    g = rep.vector(gidx)
    skew = skew_primitives(H, g, H.unit, rep)
    assert skew.space.dim == 2
    dims = sorted((chi.is_trivial, d) for chi, d, _ in skew.components)
    assert [d for _, d in dims] == [1, 1]
    # the trivial-character component is spanned by g - 1
    trivial = next(basis for chi, _, basis in skew.components if chi.is_trivial)
    vec = dict(trivial[0])
    span = {0: one, 1: minus}
    anchor = next(iter(span))
    scale = vec[anchor] / span[anchor]
    assert vec == {k: scale * c for k, c in span.items()}


def test_skew_primitives_absent_pair():
    H = group_algebra(AbelianGroup([5]))
    rep = grouplikes(H)
    g = rep.vector((rep.identity_index + 1) % 5)
    skew = skew_primitives(H, g, H.unit, rep)
    assert skew.space.dim == 1  # only the line through g - 1


def test_associated_graded_four_dim():
    H = four_dim_example()
    gr = associated_graded(H)
    assert gr.dim == 4
    assert sorted(graded_degrees(gr)) == [0, 0, 1, 1]
    assert verify_axioms(gr).ok
    chain = coradical_filtration(gr)
    assert [s.dim for s in chain] == [2, 4]


def test_associated_graded_of_cosemisimple_is_itself():
    H = group_algebra(AbelianGroup([4]))
    gr = associated_graded(H)
    assert gr.mult == H.mult
    assert gr.comult == H.comult


def test_one_dim_reps():
    assert one_dim_reps(group_algebra(AbelianGroup([2, 3]))).count == 6
    assert one_dim_reps(four_dim_example()).count == 2


def test_one_dim_reps_match_dual_grouplikes():
    H = four_dim_example()
    assert one_dim_reps(H).count == grouplikes(dual(H)).count


def test_invariant_record_separates_easy_cases():
    r1 = invariant_record(group_algebra(AbelianGroup([4])))
    r2 = invariant_record(group_algebra(AbelianGroup([2, 2])))
    assert r1 != r2
    assert "invariant_factors" in r1.differences(r2)
    r3 = invariant_record(four_dim_example())
    assert r3.dimension == 4
    assert r3.filtration_dims == (2, 4)
    assert r3.pointed and r3.dual_pointed
    assert r3.one_dim_count == 2


def test_json_round_trip():
    H = four_dim_example()
    data = H.to_json_dict()
    back = StructureHopf.from_json_dict(data)
    assert back.mult == H.mult
    assert back.comult == H.comult
    assert back.unit == H.unit
    assert back.counit == H.counit
    assert back.antipode == H.antipode
    R = braided_line()
    back_r = StructureHopf.from_json_dict(R.to_json_dict())
    assert back_r.kind == "braided"
    assert back_r.degrees == R.degrees
    assert back_r.characters == R.characters
    assert verify_axioms(back_r).ok


def test_unit_recovery_rejects_unitless_table():
    names = ("a", "b")
    mult = {(0, 0): {1: one}}  # no identity exists
    comult = {0: {(0, 0): one}, 1: {(1, 1): one}}
    with pytest.raises(ValueError):
        StructureHopf.from_json_dict(
            StructureHopf(names, mult, comult, {0: one}, {0: one}).to_json_dict()
        )
