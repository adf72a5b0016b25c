import numpy as np
import pytest

from src.cohomology import coboundary, spin_cocycle, word_cochain, zero_cocycle
from src.config import ASSOCIATIVITY_TRIALS
from src.errors import MathematicalCheckFailed
from src.extensions import (ExtGroup, build_extension, coset_action, nonsplit_certificate, order4_sweep,
                            restrict_to_subextension, splitting_over)
from src.groups import Permutation, alternating_group, pointwise_pair_stabilizer
from src.modules import natural_module, pair_permutation_module

TRIALS = 30


@pytest.fixture
def twisted_split_extension(rng):
    group = alternating_group(5)
    module = natural_module(group, 2)
    values = rng.integers(0, 2, size=(group.ngens, module.dim))
    return ExtGroup(coboundary(group, module, word_cochain(group, module, values)), name="split")


def test_group_laws(twisted_split_extension, rng):
    ext = twisted_split_extension
    assert ext.associativity_failures(rng, TRIALS) == 0
    for _ in range(10):
        x = ext.random_element(rng)
        assert ext.multiply(x, ext.inverse(x)) == ext.identity()
        assert ext.multiply(ext.identity(), x) == x
        assert ext.power(x, -1) == ext.inverse(x)


@pytest.mark.slow
def test_group_laws_full_trials(twisted_split_extension, rng):
    assert twisted_split_extension.associativity_failures(rng, ASSOCIATIVITY_TRIALS) == 0
    ext = build_extension(spin_cocycle(6), rng=rng)
    assert ext.associativity_failures(rng, ASSOCIATIVITY_TRIALS) == 0


def test_projection_is_a_homomorphism(twisted_split_extension, rng):
    ext = twisted_split_extension
    x, y = ext.random_element(rng), ext.random_element(rng)
    assert ext.multiply(x, y).g == x.g * y.g


def test_generators_and_embedding(twisted_split_extension):
    ext = twisted_split_extension
    assert len(ext.generators) == 3 + 5
    m = np.array([1, 0, 0, 1, 0])
    embedded = ext.embed(m)
    assert embedded.g.is_identity()
    assert np.array_equal(ext.multiply(embedded, embedded).m, np.zeros(5))


def test_element_orders_in_split_extension():
    group = alternating_group(5)
    ext = ExtGroup(zero_cocycle(group, natural_module(group, 2)))
    assert ext.element_order(ext.lift(Permutation.from_cycles([(1, 2, 3)], 5))) == 3
    assert ext.element_order(ext.embed([1, 1, 0, 0, 0])) == 2
    assert ext.element_order(ext.identity()) == 1


def test_split_extension_reports_complement():
    group = alternating_group(5)
    ext = build_extension(zero_cocycle(group, natural_module(group, 2)))
    record = nonsplit_certificate(ext)
    assert record.feasible
    assert not record.nonsplit
    assert len(record.complement) == group.ngens


def test_spin_double_cover_of_s4(rng):
    delta = spin_cocycle(4)
    ext = build_extension(delta, rng=rng)
    nu = Permutation.from_cycles([(1, 2), (3, 4)], 4)
    tau = Permutation.from_cycles([(1, 2)], 4)
    assert ext.element_order(ext.lift(nu)) == 4
    assert ext.element_order(ext.lift(tau)) == 2
    report = order4_sweep(ext, nu, rng, samples=10)
    assert report.passed
    assert report.exhaustive and report.exhaustive_all_order4
    record = nonsplit_certificate(ext, rng, involution=nu)
    assert not record.feasible
    assert record.nonsplit


def test_order4_sweep_needs_an_involution(rng):
    ext = ExtGroup(spin_cocycle(4))
    with pytest.raises(ValueError):
        order4_sweep(ext, Permutation.from_cycles([(1, 2, 3)], 4), rng)


def test_section_and_coset_action_of_split_extension(rng):
    k = 7
    module, vectors = pair_permutation_module(k, 2)
    group = alternating_group(k)
    ext = build_extension(zero_cocycle(group, module), rng=rng)
    section = splitting_over(ext, pointwise_pair_stabilizer(k), vectors.u)
    assert section.is_central
    assert section.values == [0, 0, 0]
    assert section.kernel.dim == module.dim - 1
    for y in pointwise_pair_stabilizer(k).generators:
        assert section.contains(ext.lift(y))
    space, image = coset_action(section, ordered=True)
    assert space.degree == 2 * k * (k - 1)
    assert image.is_transitive()


def test_section_needs_equivariant_functional(rng):
    k = 7
    module, _ = pair_permutation_module(k, 2)
    ext = ExtGroup(zero_cocycle(alternating_group(k), module))
    e13 = np.zeros(module.dim, dtype=np.uint8)
    e13[1] = 1
    with pytest.raises(MathematicalCheckFailed):
        splitting_over(ext, pointwise_pair_stabilizer(k), e13)


def test_split_restriction_uses_the_twisted_image(rng):
    k = 7
    module, vectors = pair_permutation_module(k, 2)
    group = alternating_group(k)
    values = np.zeros((group.ngens, module.dim), dtype=np.uint8)
    values[0, 0] = 1
    ext = build_extension(coboundary(group, module, word_cochain(group, module, values)), rng=rng)
    section = splitting_over(ext, pointwise_pair_stabilizer(k), vectors.u)
    space, image = coset_action(section, ordered=True)
    report = restrict_to_subextension(ext, space, list(image.generators), 6, rng)
    assert report.degree == 60
    assert report.fallback_used
    assert report.nonsplit.feasible
    faithful = report.faithful
    assert faithful.expected_order == 2 ** report.extension.module.dim * 360
    assert faithful.computed_order == faithful.expected_order
    assert report.image.order() == faithful.expected_order
