import numpy as np
import pytest

from src.cohomology import (SIGN_CARRY, SPIN, SUM, class_invariants, coboundary, coboundary_test,
                            connecting_cocycle, coset_decomposition, derivation_space, induce_cocycle,
                            inner_derivation, pullback_to_young, relator_tails, sign_carry_cocycle,
                            spin_cocycle, word_cochain, y_class_cocycles, zero_cocycle)
from src.config import COCYCLE_IDENTITY_TRIALS
from src.groups import (Permutation, alternating_group, carmichael_group, pair_list, symmetric_group,
                        young_pair_stabilizer)
from src.linalg import Subspace, solve
from src.modules import natural_module, pair_permutation_module, sign_induced_module, theta_module, trivial_module
from src.pipelines.min_degree import ElementTable

TRIALS = 30


def test_explicit_classes_satisfy_cocycle_identity(rng):
    for eps in y_class_cocycles(5).values():
        assert eps.failing_triples(rng, TRIALS) == []
    assert sign_carry_cocycle(4).failing_triples(rng, TRIALS) == []


@pytest.mark.slow
def test_explicit_classes_full_cocycle_trials(rng):
    for eps in y_class_cocycles(5).values():
        assert eps.failing_triples(rng, COCYCLE_IDENTITY_TRIALS) == []
    k = 7
    module, _ = pair_permutation_module(k, 2)
    eps = pullback_to_young(spin_cocycle(k - 2), young_pair_stabilizer(k))
    assert induce_cocycle(eps, module).failing_triples(rng, COCYCLE_IDENTITY_TRIALS) == []


def test_explicit_classes_are_normalized():
    eps = spin_cocycle(5)
    g = Permutation.from_cycles([(1, 3, 2)], 5)
    e = Permutation.identity(5)
    assert eps.scalar(g, e) == 0 and eps.scalar(e, g) == 0


def test_class_invariants():
    invariants = {kind: class_invariants(eps) for kind, eps in y_class_cocycles(5).items()}
    assert invariants == {SIGN_CARRY: (1, 0), SPIN: (0, 1), SUM: (1, 1)}
    with pytest.raises(ValueError):
        spin_cocycle(3)


def test_explicit_classes_are_not_coboundaries():
    for eps in y_class_cocycles(4).values():
        system = coboundary_test(eps)
        assert not system.feasible
        assert system.unknowns == 3


def test_zero_cocycle_splits():
    group = alternating_group(5)
    module = natural_module(group, 2)
    system = coboundary_test(zero_cocycle(group, module))
    assert system.feasible
    assert system.unknowns == 3 * 5
    assert not np.any(system.solution)


def test_coboundaries_are_detected(rng):
    group = alternating_group(5)
    module = natural_module(group, 2)
    values = rng.integers(0, 2, size=(group.ngens, module.dim))
    delta = coboundary(group, module, word_cochain(group, module, values))
    assert delta.failing_triples(rng, TRIALS) == []
    assert coboundary_test(delta).feasible


def test_relator_tails_vanish_for_zero_cocycle():
    group = symmetric_group(4)
    tails = relator_tails(group, zero_cocycle(group, trivial_module(group, 2)))
    assert len(tails) == len(group.presentation.relators)
    assert not any(np.any(t) for t in tails)


def test_first_cohomology_of_s4():
    group = symmetric_group(4)
    space = derivation_space(group, trivial_module(group, 2))
    assert space.h1_dimension == 1
    assert len(space.non_inner) == 1
    assert space.non_inner[0].satisfies_relators()
    assert not space.is_inner(space.non_inner[0])


def test_inner_derivations(rng):
    group = alternating_group(5)
    module = natural_module(group, 2)
    space = derivation_space(group, module)
    assert space.h1_dimension == 0
    d = inner_derivation(group, module, np.array([1, 0, 1, 1, 0]))
    assert d.satisfies_relators()
    assert space.is_inner(d)
    g = group.random_element(rng)
    h = group.random_element(rng)
    expected = np.mod(module.act(d(g), h).astype(np.int16) + d(h), 2)
    assert np.array_equal(d(g * h), expected)


def test_connecting_cocycle_of_inner_derivation_is_coboundary(rng):
    group = alternating_group(5)
    ambient = natural_module(group, 2)
    ones = Subspace.span(2, 5, np.ones(5, dtype=np.uint8))
    quotient_module, quo = ambient.quotient(ones)
    target = ambient.submodule(ones, name="M")
    d = inner_derivation(group, quotient_module, np.array([1, 0, 0, 0]))
    delta = connecting_cocycle(d, ambient, quo, ones, target)
    assert delta.failing_triples(rng, TRIALS) == []
    assert coboundary_test(delta).feasible


def test_coset_decomposition_lands_in_young_subgroup(rng):
    k = 7
    group = alternating_group(k)
    young = young_pair_stabilizer(k)
    for _ in range(10):
        g = group.random_element(rng)
        for pair in pair_list(k)[:5]:
            y, image = coset_decomposition(g, pair, k)
            assert {y(0), y(1)} == {0, 1}
            assert young.evaluate(young.factor(y)) == y


def test_induced_cocycle(rng):
    k = 7
    module, _ = pair_permutation_module(k, 2)
    young = young_pair_stabilizer(k)
    eps = pullback_to_young(spin_cocycle(k - 2), young)
    assert eps.failing_triples(rng, TRIALS) == []
    delta = induce_cocycle(eps, module)
    assert delta.module is module
    assert delta.failing_triples(rng, TRIALS) == []


def test_induction_into_the_sign_twisted_module(rng):
    k, p = 7, 3
    young = young_pair_stabilizer(k)
    theta = theta_module(young, p)
    values = rng.integers(0, p, size=(young.ngens, 1))
    eps = coboundary(young, theta, word_cochain(young, theta, values))
    delta = induce_cocycle(eps, sign_induced_module(k, p))
    assert delta.failing_triples(rng, TRIALS) == []


def test_induction_needs_matching_coefficients():
    k = 7
    young = young_pair_stabilizer(k)
    theta = theta_module(young, 3)
    twisted = coboundary(young, theta, word_cochain(young, theta, [[1]] * young.ngens))
    untwisted = pullback_to_young(spin_cocycle(k - 2), young)
    with pytest.raises(ValueError):
        induce_cocycle(twisted, pair_permutation_module(k, 3)[0])
    with pytest.raises(ValueError):
        induce_cocycle(untwisted, sign_induced_module(k, 3))
    with pytest.raises(ValueError):
        induce_cocycle(untwisted, natural_module(alternating_group(k), 2))


def test_pullback_needs_matching_degree():
    with pytest.raises(ValueError):
        pullback_to_young(spin_cocycle(4), young_pair_stabilizer(7))


def _table_coboundary_solvable(delta):
    """Solve c(g) + c(h) - c(gh) = delta(g, h) over the full multiplication table"""
    table = ElementTable(delta.group)
    n, p = len(table.elements), delta.p
    rows = np.zeros((n * n, n), dtype=np.int64)
    rhs = np.zeros(n * n, dtype=np.int64)
    for i, g in enumerate(table.elements):
        for j, h in enumerate(table.elements):
            r = i * n + j
            rows[r, i] += 1
            rows[r, j] += 1
            rows[r, table.index[(g * h).key]] -= 1
            rhs[r] = delta.scalar(g, h)
    return solve(np.mod(rows, p), np.mod(rhs, p), p) is not None


def _oracle_cases():
    s3, s4 = symmetric_group(3), symmetric_group(4)
    a4 = carmichael_group(4)
    spin = spin_cocycle(4)
    return [
        ("S3 sign carry", sign_carry_cocycle(3)),
        ("S3 zero", zero_cocycle(s3, trivial_module(s3, 2))),
        ("S4 spin", spin),
        ("S4 sign carry", sign_carry_cocycle(4)),
        ("S4 sum", y_class_cocycles(4)[SUM]),
        ("A4 spin", spin.restricted(a4)),
        ("A4 sign carry", sign_carry_cocycle(4).restricted(a4)),
        ("A4 zero mod 3", zero_cocycle(a4, trivial_module(a4, 3))),
    ]


def test_coboundary_test_matches_full_table():
    expected = {"S3 sign carry": False, "S3 zero": True, "S4 spin": False, "S4 sign carry": False,
                "S4 sum": False, "A4 spin": False, "A4 sign carry": True, "A4 zero mod 3": True}
    for label, delta in _oracle_cases():
        assert _table_coboundary_solvable(delta) == expected[label], label
        assert coboundary_test(delta).feasible == expected[label], label


def test_random_coboundaries_match_full_table(rng):
    for group, p in ((symmetric_group(3), 2), (carmichael_group(4), 3), (symmetric_group(4), 3)):
        module = trivial_module(group, p)
        values = rng.integers(0, p, size=(group.ngens, 1))
        delta = coboundary(group, module, word_cochain(group, module, values))
        assert _table_coboundary_solvable(delta)
        assert coboundary_test(delta).feasible
