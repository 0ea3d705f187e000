"""Tests for the dimension p^3 census, rank search, and shape enumeration."""

from collections import Counter

import pytest

from qlhopf.abelian import AbelianGroup
from qlhopf.classify import (CensusEntry, ThetaResult, build_p3_list,
                             distinguish, enumerate_theorem_0_2, theta_search)
from qlhopf.hopfcore import verify_axioms
from qlhopf.isosearch import find_isomorphism
from qlhopf.lifting import CompatibleDatum, build_lifting
from qlhopf.qls import QLSDatum, validate_datum


@pytest.fixture(scope="module")
def census():
    return build_p3_list(3)


def test_census_has_fourteen_entries(census):
    assert len(census) == 14
    assert Counter(e.kind for e in census) == {
        "a": 2, "b": 2, "c": 2, "d": 2, "e": 2, "f": 4}
    assert census[0].label == "(a) q=zeta_3^1"
    assert census[-1].label == "(f) q=zeta_3^2 m=2"


def test_census_group_invariants(census):
    expected = {"a": (3, 3), "b": (9,), "c": (9,), "d": (9,), "e": (3,), "f": (3,)}
    for entry in census:
        record = entry.record
        assert record.dimension == 27
        assert record.pointed
        assert record.invariant_factors == expected[entry.kind]
        assert record.grouplike_count == (9 if entry.kind in "abcd" else 3)


def test_census_entries_satisfy_axioms(census):
    for entry in census:
        assert verify_axioms(entry.algebra).ok, entry.label


def test_census_fingerprints(census):
    for entry in census:
        record = entry.record
        if entry.kind == "d":
            assert not record.dual_pointed
            assert record.one_dim_count == 3
        elif entry.kind == "e":
            assert record.one_dim_count == 1
        elif entry.kind == "f":
            assert record.one_dim_count == 3
        else:
            assert record.dual_pointed
            assert record.one_dim_count == 9


def test_distinguish_matrix(census):
    matrix = distinguish(census)
    labels = [e.label for e in census]
    isomorphic = set()
    for i in range(len(census)):
        assert matrix[i][i] == ("same", "")
        for j in range(i + 1, len(census)):
            kind, witness = matrix[i][j]
            assert matrix[j][i] == (kind, witness)
            assert kind != "undecided"
            if kind == "isomorphic":
                assert witness == "verified map"
                isomorphic.add((labels[i], labels[j]))
    # the linked pair fuses q with q^-1; unlinked pairs follow the m-power rule
    assert isomorphic == {
        ("(e) q=zeta_3^1", "(e) q=zeta_3^2"),
        ("(f) q=zeta_3^1 m=1", "(f) q=zeta_3^2 m=1"),
        ("(f) q=zeta_3^1 m=2", "(f) q=zeta_3^2 m=2"),
    }


def test_order_nine_character_root_choice_immaterial():
    # chi(y) = zeta_9 and zeta_9^4 both cube to the same q: one algebra
    G = AbelianGroup([9])
    g = G.element((6,))
    variants = []
    for exp in (1, 4):
        datum = validate_datum(G, [g], [G.character((exp,))])
        assert isinstance(datum, QLSDatum)
        variants.append(build_lifting(CompatibleDatum(datum, [0])))
    assert find_isomorphism(*variants).status == "isomorphism"


def test_theta_cyclic_prime_square():
    result = theta_search(AbelianGroup([9]))
    assert (result.theta, result.exact) == (2, True)
    assert isinstance(result.witness, QLSDatum)
    assert result.witness.theta == 2


def test_theta_product_of_primes():
    result = theta_search(AbelianGroup([3, 5]))
    assert (result.theta, result.exact) == (4, True)
    assert isinstance(result.witness, QLSDatum)
    # additivity over coprime factors: 2 + 2
    assert result.theta == theta_search(AbelianGroup([3])).theta + \
        theta_search(AbelianGroup([5])).theta


def test_theta_order_two_lower_bound():
    result = theta_search(AbelianGroup([2]), max_rank=5)
    assert (result.theta, result.exact) == (5, False)
    assert isinstance(result.witness, QLSDatum)
    assert result.witness.theta == 5


def test_theta_respects_order_bound():
    with pytest.raises(ValueError):
        theta_search(AbelianGroup([3, 5, 7]), order_bound=64)


def test_enumerate_index_three():
    entries, classes = enumerate_theorem_0_2(AbelianGroup([3]), 3)
    assert len(entries) == 4
    assert all(e.kind == "A" and e.algebra.dim == 9 for e in entries)
    # two classes, one per value of q
    assert sorted(len(c) for c in classes) == [2, 2]


def test_enumerate_index_nine_over_cyclic_three(census):
    entries, classes = enumerate_theorem_0_2(AbelianGroup([3]), 9)
    assert len(entries) == 6
    assert all(e.kind == "B2" and e.algebra.dim == 27 for e in entries)
    assert sorted(len(c) for c in classes) == [2, 2, 2]
    linked = [e for e in entries if e.datum.lams]
    assert len(linked) == 2
    # the linked entries recover the census type with a non-trivial pair scalar
    target = next(e for e in census if e.label == "(e) q=zeta_3^1")
    assert find_isomorphism(linked[0].algebra, target.algebra).status == "isomorphism"


def test_enumerate_cyclic_nine_shapes():
    entries, classes = enumerate_theorem_0_2(
        AbelianGroup([9]), 9, g_exponents=[(1,)],
        chi_exponents=[(2,), (3,), (6,)], group_isomorphism=False)
    assert classes == ()
    kinds = Counter(e.kind for e in entries)
    assert kinds == {"B1": 1, "B2": 8}
    b1 = next(e for e in entries if e.kind == "B1")
    assert b1.datum.mus == (0,)
    assert all(e.algebra.dim == 81 for e in entries)
    mus = sorted(tuple(0 if m.is_zero else 1 for m in e.datum.mus)
                 for e in entries if e.kind == "B2")
    assert mus == [(0, 0), (0, 0), (0, 1), (0, 1), (1, 0), (1, 0), (1, 1), (1, 1)]


def test_enumerate_rejects_oversized_request():
    with pytest.raises(ValueError):
        enumerate_theorem_0_2(AbelianGroup([9]), 9, max_dimension=80)


def test_census_rejects_non_odd_prime():
    for bad in (2, 4, 9):
        with pytest.raises(ValueError):
            build_p3_list(bad)


def test_census_entry_repr(census):
    assert "(a) q=zeta_3^1" in repr(census[0])
    assert isinstance(census[0], CensusEntry)
    assert isinstance(theta_search(AbelianGroup([3])), ThetaResult)
