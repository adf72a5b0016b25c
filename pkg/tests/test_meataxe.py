import numpy as np
import pytest

from src.errors import BudgetExhaustedError
from src.groups import alternating_group
from src.linalg import nullspace
from src.modules import (composition_factors, is_indecomposable, is_irreducible, meataxe_split, natural_module,
                         pair_permutation_module, radical, socle, socle_series, standard_module_L,
                         trivial_module)
from src.modules.meataxe import charpoly, evaluate_poly, factor_poly, is_isomorphic


def test_charpoly_small_cases():
    assert charpoly(np.array([[0, 1], [1, 0]]), 2) == [1, 0, 1]
    assert charpoly(np.array([[1, 1], [0, 1]]), 3) == [1, 1, 1]
    assert charpoly(np.eye(3, dtype=np.uint8), 2) == [1, 1, 1, 1]


def test_cayley_hamilton(rng):
    for p in (2, 3, 5):
        matrix = rng.integers(0, p, size=(6, 6)).astype(np.uint8)
        assert not np.any(evaluate_poly(charpoly(matrix, p), matrix, p))


def test_factor_poly():
    assert factor_poly([1, 0, 1], 2) == [([1, 1], 2)]
    assert factor_poly([1, 1, 1], 2) == [([1, 1, 1], 1)]
    assert factor_poly([2, 0, 1], 3) == [([1, 1], 1), ([2, 1], 1)]


def test_pair_module_splits(rng):
    module, _ = pair_permutation_module(7, 2)
    result = meataxe_split(module, rng)
    assert not result.irreducible
    assert 0 < result.submodule.dim < module.dim
    assert module.is_invariant(result.submodule)


def test_irreducible_modules(rng):
    assert is_irreducible(trivial_module(alternating_group(5), 2), rng)
    assert is_irreducible(standard_module_L(6, 3), rng)
    assert not is_irreducible(natural_module(alternating_group(6), 3), rng)


def test_pair_module_composition_factors(rng):
    module, _ = pair_permutation_module(7, 2)
    factors = composition_factors(module, rng)
    assert sorted((f.module.dim, f.multiplicity) for f in factors) == [(1, 1), (6, 1), (14, 1)]


def test_pair_module_decomposes(rng):
    module, _ = pair_permutation_module(7, 2)
    report = is_indecomposable(module, rng)
    assert not report.indecomposable
    assert report.endomorphism_dim == 3
    assert report.exhaustive


def test_uniserial_natural_module(rng):
    natural = natural_module(alternating_group(6), 3)
    simples = [trivial_module(natural.group, 3), standard_module_L(6, 3)]
    assert socle(natural, simples).dim == 1
    assert [layer.dim for layer in socle_series(natural, simples)] == [1, 5, 6]
    assert radical(natural, simples) == nullspace(np.ones((1, 6), dtype=np.uint8), 3)
    assert is_indecomposable(natural, rng).indecomposable


def test_isomorphism_of_irreducibles():
    first = standard_module_L(6, 3)
    assert is_isomorphic(first, standard_module_L(6, 3))
    assert not is_isomorphic(first, trivial_module(first.group, 3))


def test_zero_module_rejected():
    module = natural_module(alternating_group(5), 2)
    empty = module.submodule(nullspace(np.eye(5, dtype=np.uint8), 2))
    with pytest.raises(ValueError):
        meataxe_split(empty)


def test_indecomposable_permutation_module_of_a4(rng):
    module = natural_module(alternating_group(4), 2)
    report = is_indecomposable(module, rng)
    assert report.indecomposable
    assert report.endomorphism_dim == 2
    assert report.exhaustive


def test_sampled_endomorphisms_never_certify_indecomposability(rng, monkeypatch):
    monkeypatch.setattr("src.modules.meataxe.ENDOMORPHISM_ENUMERATION_LIMIT", 1)
    module = natural_module(alternating_group(4), 2)
    with pytest.raises(BudgetExhaustedError):
        is_indecomposable(module, rng)
    report = is_indecomposable(module, rng, irreducibles=[trivial_module(module.group, 2)])
    assert report.indecomposable
    assert report.exhaustive
    assert report.method == "simple socle"


def test_sampled_witness_still_shows_decomposition(rng, monkeypatch):
    monkeypatch.setattr("src.modules.meataxe.ENDOMORPHISM_ENUMERATION_LIMIT", 1)
    module, _ = pair_permutation_module(7, 2)
    report = is_indecomposable(module, rng)
    assert not report.indecomposable
    assert not report.exhaustive
    assert report.method == "sampled witness"
