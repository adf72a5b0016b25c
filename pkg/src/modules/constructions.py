"""
Module Constructions
The pair permutation module P, the induced sign module V, L, its exterior square and small modules
"""
from dataclasses import dataclass
from typing import Callable, List, Sequence, Tuple

import numpy as np

from src.errors import HypothesisError
from src.groups.named_groups import alternating_group
from src.groups.pairs import pair_coset_reps, pair_index, pair_list, pair_of
from src.groups.perm_group import PermGroup
from src.groups.permutation import Permutation
from src.linalg.subspace import Subspace, nullspace
from src.modules.gmodule import GModule


@dataclass(frozen=True)
class PairVectors:
    """
    Distinguished vectors of P: x_i = sum_j e_ij, f = sum of all e_ij and
    u = sum of e_ij over pairs inside {3..k}.
    """

    x: Tuple[np.ndarray, ...]
    f: np.ndarray
    u: np.ndarray

    @property
    def y12(self) -> np.ndarray:
        """x_1 + x_2"""
        return np.mod(self.x[0].astype(np.int16) + self.x[1], 2).astype(np.uint8)


def y_component(g: Permutation, pair: Tuple[int, int], k: int) -> Tuple[Permutation, Tuple[int, int]]:
    """
    Split g_t·g = y·g_{t·g} with y in Y.

    Returns:
        tuple: (y, t·g)
    """
    reps = pair_coset_reps(k)
    image = pair_of(reps[pair] * g)
    y = reps[pair] * g * reps[image].inverse()
    return y, image


def _induced_pair_module(k: int, p: int, character: Callable[[Permutation], int], name: str) -> GModule:
    group = alternating_group(k)
    pairs = pair_list(k)
    index = pair_index(k)
    mats = []
    for g in group.generators:
        a = np.zeros((len(pairs), len(pairs)), dtype=np.uint8)
        for i, pair in enumerate(pairs):
            y, image = y_component(g, pair, k)
            a[i, index[image]] = character(y) % p
        mats.append(a)
    labels = [f"e{{{a + 1},{b + 1}}}" for a, b in pairs]
    return GModule(p, group, mats, name=name, labels=labels, orthonormal=True)


def theta(y: Permutation) -> int:
    """The sign character of Y: -1 exactly when y swaps 1 and 2"""
    return -1 if y(0) == 1 else 1


def pair_permutation_module(k: int, p: int = 2) -> Tuple[GModule, PairVectors]:
    """
    P, the permutation module of A_k on unordered pairs.

    Args:
        k (int): Degree, at least 5
        p (int): Characteristic

    Returns:
        tuple: (GModule of dimension C(k,2), PairVectors with x_i, f, u)
    """
    if k < 5:
        raise ValueError("pair_permutation_module needs k >= 5")
    module = _induced_pair_module(k, p, lambda y: 1, f"P(k={k})")
    pairs = pair_list(k)
    x = []
    for i in range(k):
        vec = np.array([1 if i in pair else 0 for pair in pairs], dtype=np.uint8)
        x.append(vec)
    f = np.ones(len(pairs), dtype=np.uint8)
    u = np.array([1 if pair[0] >= 2 else 0 for pair in pairs], dtype=np.uint8)
    return module, PairVectors(tuple(x), f, u)


def sign_induced_module(k: int, p: int) -> GModule:
    """
    V = theta induced from Y to A_k, on the pair basis.

    Raises:
        ValueError: For p = 2 (theta is trivial there) or k < 7
    """
    if p == 2:
        raise ValueError("theta is trivial in characteristic 2; use pair_permutation_module")
    if k < 7:
        raise ValueError("sign_induced_module needs k >= 7")
    return _induced_pair_module(k, p, theta, f"V(k={k},p={p})")


def natural_module(group: PermGroup, p: int) -> GModule:
    """Permutation module on the points of the group"""
    mats = []
    for g in group.generators:
        a = np.zeros((group.degree, group.degree), dtype=np.uint8)
        a[np.arange(group.degree), g.images] = 1
        mats.append(a)
    return GModule(p, group, mats, dim=group.degree, name="natural", orthonormal=True)


def standard_module_L(k: int, p: int) -> GModule:
    """
    L = (sum-zero vectors) / (all-ones line) in GF(p)^k, of dimension k-2.

    Raises:
        HypothesisError: When p does not divide k
    """
    if k % p:
        raise HypothesisError(f"L needs the hypothesis p divides k (k={k}, p={p})")
    natural = natural_module(alternating_group(k), p)
    sum_zero = nullspace(np.ones((1, k), dtype=np.uint8), p)
    heart = natural.submodule(sum_zero, name="sum-zero")
    ones = sum_zero.coordinates(np.ones(k, dtype=np.uint8))
    line = Subspace.span(p, heart.dim, ones)
    module, _ = heart.quotient(line, name=f"L(k={k},p={p})")
    return module


def wedge_square(module: GModule) -> GModule:
    """Exterior square on the basis e_a ^ e_b, a < b, with 2x2-minor action"""
    n = module.dim
    first, second = np.triu_indices(n, k=1)
    mats = []
    for a in module.action:
        m = a.astype(np.int64)
        minors = (m[np.ix_(first, first)] * m[np.ix_(second, second)]
                  - m[np.ix_(first, second)] * m[np.ix_(second, first)])
        mats.append(np.mod(minors, module.p))
    dim = len(first)
    return GModule(module.p, module.group, mats, dim=dim, name=f"wedge2({module.name})")


def trivial_module(group: PermGroup, p: int) -> GModule:
    return character_module(group, p, [1] * group.ngens, name="trivial")


def character_module(group: PermGroup, p: int, values: Sequence[int], name: str = "") -> GModule:
    """One-dimensional module with generator i acting by values[i]"""
    mats = [np.array([[v % p]], dtype=np.uint8) for v in values]
    return GModule(p, group, mats, dim=1, name=name or "character")


def theta_module(young: PermGroup, p: int) -> GModule:
    """theta on Y: each Coxeter-type generator (i,i+1)(1 2) acts by -1"""
    values: List[int] = [theta(g) for g in young.generators]
    return character_module(young, p, values, name="theta")
