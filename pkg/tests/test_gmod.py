import numpy as np
import pytest

from src.errors import DimensionMismatchError, HypothesisError
from src.groups import alternating_group, pointwise_pair_stabilizer, young_pair_stabilizer
from src.linalg import Subspace, subspace_sum
from src.modules import (GModule, ModuleMap, fixed_points, g_core, hom_space, natural_module,
                         pair_permutation_module, sign_induced_module, spin, standard_module_L, theta_module,
                         trivial_module, wedge_square)
from src.modules.hom import hom_dimension


@pytest.fixture(scope="module")
def pair_module():
    return pair_permutation_module(7, 2)


def test_pair_module_shape(pair_module):
    module, vectors = pair_module
    assert module.dim == 21
    assert module.orthonormal
    assert module.failing_relators() == []
    assert len(vectors.x) == 7
    assert int(vectors.u.sum()) == 10
    assert int(vectors.f.sum()) == 21


def test_fixed_points_of_young_subgroup(pair_module):
    module, vectors = pair_module
    fixed = fixed_points(module.restrict(young_pair_stabilizer(7)))
    assert fixed == Subspace.span(2, 21, np.array([vectors.u, vectors.f, vectors.y12]))
    assert fixed_points(module) == Subspace.span(2, 21, vectors.f)


def test_rank_three_endomorphisms(pair_module):
    module, _ = pair_module
    assert hom_dimension(module, module) == 3


def test_spin_and_g_core(pair_module):
    module, vectors = pair_module
    e12 = np.zeros(21, dtype=np.uint8)
    e12[0] = 1
    assert spin(module, e12).dim == 21
    line = Subspace.span(2, 21, e12)
    assert g_core(module, line).dim == 0
    full = Subspace.full(2, 21)
    assert g_core(module, full) == full
    lower = subspace_sum(Subspace.span(2, 21, vectors.f), Subspace.span(2, 21, np.array(vectors.x)))
    assert lower.dim == 7
    assert g_core(module, lower) == lower


def test_submodule_and_quotient(pair_module):
    module, vectors = pair_module
    lower = subspace_sum(Subspace.span(2, 21, vectors.f), Subspace.span(2, 21, np.array(vectors.x)))
    sub = module.submodule(lower)
    quotient, quo = module.quotient(lower)
    assert (sub.dim, quotient.dim, quo.dim) == (7, 14, 14)
    assert sub.failing_relators() == []
    assert quotient.failing_relators() == []
    with pytest.raises(ValueError):
        module.submodule(Subspace.span(2, 21, vectors.u))


def test_restriction(pair_module):
    module, _ = pair_module
    restricted = module.restrict(pointwise_pair_stabilizer(7))
    assert restricted.ngens == 3
    assert restricted.failing_relators() == []


def test_self_duality_of_permutation_like_modules(pair_module):
    module, _ = pair_module
    assert ModuleMap(module, module.dual(), module.identity_matrix()).is_intertwining()
    v = sign_induced_module(7, 3)
    assert ModuleMap(v, v.dual(), v.identity_matrix()).is_intertwining()


def test_sign_induced_module():
    v = sign_induced_module(7, 3)
    assert v.dim == 21
    assert v.failing_relators() == []
    with pytest.raises(ValueError):
        sign_induced_module(7, 2)
    with pytest.raises(ValueError):
        sign_induced_module(6, 3)


def test_theta_on_young_generators():
    theta = theta_module(young_pair_stabilizer(7), 3)
    assert [int(a[0, 0]) for a in theta.action] == [2, 2, 2, 2]
    assert theta.failing_relators() == []


def test_standard_module_and_wedge():
    natural = standard_module_L(6, 3)
    assert natural.dim == 4
    assert natural.failing_relators() == []
    wedge = wedge_square(natural)
    assert wedge.dim == 6
    assert wedge.failing_relators() == []
    with pytest.raises(HypothesisError):
        standard_module_L(7, 3)


def test_hom_spaces(pair_module):
    module, _ = pair_module
    trivial = trivial_module(module.group, 2)
    into = hom_space(trivial, module)
    assert len(into) == 1 and into[0].is_intertwining()
    out = hom_space(module, trivial)
    assert len(out) == 1
    assert out[0].rank == 1
    assert out[0].kernel().dim == 20
    with pytest.raises(DimensionMismatchError):
        hom_space(trivial_module(module.group, 3), module)


def test_module_rejects_wrong_shapes():
    group = alternating_group(5)
    with pytest.raises(DimensionMismatchError):
        GModule(2, group, [np.eye(2)] * 2)
    with pytest.raises(DimensionMismatchError):
        GModule(2, group, [np.eye(2), np.eye(2), np.eye(3)])
    assert natural_module(group, 2).dim == 5
