import pytest

from src.errors import BudgetExhaustedError, DimensionMismatchError, NotInGroupError
from src.groups import (Permutation, alternating_group, alternating_subgroup, carmichael_group,
                        ordered_pair_coset_reps, pair_coset_reps, pair_list, pointwise_pair_stabilizer,
                        presentation_of, symmetric_group, young_pair_stabilizer)
from src.groups.pairs import coset_rep_for, pair_of
from src.groups.todd_coxeter import todd_coxeter_order


def test_right_action_product():
    g = Permutation.from_cycles([(1, 2, 3)], 5)
    h = Permutation.from_cycles([(1, 2)], 5)
    # first g, then h
    assert g * h == Permutation.from_cycles([(2, 3)], 5)
    assert h * g == Permutation.from_cycles([(1, 3)], 5)
    assert (g * g.inverse()).is_identity()
    assert g ** 3 == Permutation.identity(5)
    assert g ** -1 == g.inverse()


def test_permutation_properties():
    g = Permutation.from_cycles([(1, 2), (3, 4, 5)], 6)
    assert g.order == 6
    assert g.parity == 1
    assert g.cycles() == [(0, 1), (2, 3, 4)]
    assert Permutation.from_cycles([(1, 2), (3, 4)], 6).parity == 0


def test_parse_and_print():
    g = Permutation.parse("(1 2)(3 4 5)", 5)
    assert g.to_cycle_string() == "(1 2)(3 4 5)"
    assert Permutation.parse("()", 4).is_identity()
    assert Permutation.identity(4).to_cycle_string() == "()"
    assert Permutation.parse("(1,3)", 3) == Permutation.from_cycles([(1, 3)], 3)
    with pytest.raises(ValueError):
        Permutation.parse("(1 2", 4)
    with pytest.raises(ValueError):
        Permutation.parse("(1 9)", 4)
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])


def test_degree_mismatch():
    with pytest.raises(DimensionMismatchError):
        Permutation.identity(3) * Permutation.identity(4)


def test_restricted_and_extended():
    g = Permutation.from_cycles([(3, 4, 5)], 5)
    small = g.restricted([2, 3, 4])
    assert small == Permutation.from_cycles([(1, 2, 3)], 3)
    assert small.extended(5, [2, 3, 4]) == g
    with pytest.raises(ValueError):
        Permutation.from_cycles([(1, 3)], 5).restricted([2, 3, 4])


def test_group_orders():
    assert alternating_group(5).order() == 60
    assert alternating_group(7).order() == 2520
    assert symmetric_group(5).order() == 120
    assert carmichael_group(4).order() == 12
    assert young_pair_stabilizer(7).order() == 120
    assert pointwise_pair_stabilizer(7).order() == 60
    assert alternating_subgroup(5, 7).order() == 60


def test_small_alternating_rejected():
    with pytest.raises(ValueError):
        alternating_group(4)


def test_generators_follow_presentations():
    a7 = alternating_group(7)
    assert a7.ngens == 5
    assert a7.generators[0] == Permutation.from_cycles([(1, 2, 3)], 7)
    assert a7.presentation.failing_relators() == []
    y = young_pair_stabilizer(7)
    assert y.generators[0] == Permutation.from_cycles([(3, 4), (1, 2)], 7)
    assert y.presentation.failing_relators() == []
    assert pointwise_pair_stabilizer(7).presentation.failing_relators() == []
    assert alternating_subgroup(5, 7).generators == a7.generators[:3]


def test_factor_round_trip(rng):
    for group in (alternating_group(7), young_pair_stabilizer(7), pointwise_pair_stabilizer(7),
                  symmetric_group(6)):
        for _ in range(10):
            g = group.random_element(rng)
            assert group.evaluate(group.factor(g)) == g


@pytest.mark.slow
def test_factor_round_trip_a9(rng):
    group = alternating_group(9)
    for _ in range(1000):
        g = group.random_element(rng)
        assert group.evaluate(group.factor(g)) == g


def test_factor_rejects_outsiders():
    with pytest.raises(NotInGroupError):
        alternating_group(7).factor(Permutation.from_cycles([(1, 2)], 7))
    with pytest.raises(NotInGroupError):
        pointwise_pair_stabilizer(7).factor(Permutation.from_cycles([(1, 3, 4)], 7))
    with pytest.raises(NotInGroupError):
        young_pair_stabilizer(7).factor(Permutation.from_cycles([(2, 3, 4)], 7))


def test_membership():
    a7 = alternating_group(7)
    assert a7.contains(Permutation.from_cycles([(1, 5, 7)], 7))
    assert not a7.contains(Permutation.from_cycles([(1, 5)], 7))


def test_orbits():
    assert alternating_group(7).is_transitive()
    y = young_pair_stabilizer(7)
    assert not y.is_transitive()
    assert sorted(sorted(orbit) for orbit in y.orbits()) == [[0, 1], [2, 3, 4, 5, 6]]


def test_pair_coset_reps():
    k = 7
    reps = pair_coset_reps(k)
    assert len(reps) == len(pair_list(k)) == 21
    for pair, g in reps.items():
        assert g.parity == 0
        assert pair_of(g) == pair
    assert coset_rep_for(5, 3, k) == reps[(2, 4)]
    with pytest.raises(ValueError):
        coset_rep_for(3, 3, k)


def test_ordered_pair_coset_reps():
    k = 7
    reps = ordered_pair_coset_reps(k)
    assert len(reps) == k * (k - 1)
    for (a, b), g in reps.items():
        assert g.parity == 0
        assert (g(0), g(1)) == (a, b)


def test_todd_coxeter_matches_schreier_sims():
    for n in (4, 5, 6):
        presentation = presentation_of("alternating", n)
        assert todd_coxeter_order(presentation) == carmichael_group(n).order()
    assert todd_coxeter_order(presentation_of("symmetric", 4)) == 24
    assert todd_coxeter_order(presentation_of("symmetric", 5)) == symmetric_group(5).order()


@pytest.mark.slow
def test_todd_coxeter_orders_up_to_eight():
    for n in (7, 8):
        assert todd_coxeter_order(presentation_of("alternating", n), max_cosets=1_000_000) == \
            carmichael_group(n).order()
    for n in (6, 7, 8):
        assert todd_coxeter_order(presentation_of("symmetric", n), max_cosets=1_000_000) == \
            symmetric_group(n).order()


def test_todd_coxeter_budget():
    with pytest.raises(BudgetExhaustedError):
        todd_coxeter_order(presentation_of("alternating", 6), max_cosets=50)
