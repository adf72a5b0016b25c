"""
Induced Cocycle Module
Eckmann-Shapiro induction of cocycles on Y to the pair modules of A_k
"""
from typing import Tuple

import numpy as np

from src.cohomology.cocycle import INDUCED, Cocycle2
from src.errors import CosetDecompositionError
from src.groups.named_groups import alternating_group
from src.groups.pairs import pair_index, pair_list
from src.groups.permutation import Permutation
from src.modules.constructions import y_component
from src.modules.gmodule import GModule


def coset_decomposition(g: Permutation, pair: Tuple[int, int], k: int) -> Tuple[Permutation, Tuple[int, int]]:
    """
    y_t(g) and t·g with g_t·g = y_t(g)·g_{t·g}.

    Raises:
        CosetDecompositionError: When the computed y does not stabilize {1,2}
    """
    y, image = y_component(g, pair, k)
    if {y(0), y(1)} != {0, 1}:
        raise CosetDecompositionError(f"g_t·g·g_tg^-1 = {y.to_cycle_string()} is outside Y for t={pair}")
    return y, image


def induce_cocycle(eps: Cocycle2, target: GModule) -> Cocycle2:
    """
    delta on A_k with values in the pair module target (P or V).

    The coordinate of delta(g,h) at the pair t·g·h is eps(y_t(g), y_{t·g}(h)),
    summing over all pairs t. The target's action e_t·g = chi(y_t(g)) e_{t·g} carries
    the twist, so eps must be normalized with values in the same character chi.

    Args:
        eps (Cocycle2): Cocycle on Y with 1-dimensional values
        target (GModule): Pair module of A_k induced from a character of Y

    Returns:
        Cocycle2: Induced cocycle of kind "induced"

    Raises:
        ValueError: When target is not a pair module of A_k or its character differs from eps's
    """
    k = eps.group.degree
    group = alternating_group(k)
    pairs = pair_list(k)
    index = pair_index(k)
    if target.dim != len(pairs) or target.group is not group:
        raise ValueError(f"{target.name} is not a pair module of A_{k}")
    if eps.module.dim != 1 or eps.p != target.p:
        raise ValueError(f"{eps.name} does not take values in a character over GF({target.p})")
    for g, matrix in zip(group.generators, target.action):
        for pair in pairs:
            y, image = coset_decomposition(g, pair, k)
            if int(matrix[index[pair], index[image]]) != int(eps.module.matrix_of(y)[0, 0]):
                raise ValueError(f"{target.name} and {eps.name} are twisted by different characters")

    def evaluate(g: Permutation, h: Permutation) -> np.ndarray:
        value = np.zeros(len(pairs), dtype=np.uint8)
        for pair in pairs:
            a, middle = coset_decomposition(g, pair, k)
            b, final = coset_decomposition(h, middle, k)
            value[index[final]] = eps.scalar(a, b)
        return value

    return Cocycle2(group, target, evaluate, INDUCED, f"ind({eps.name})")
