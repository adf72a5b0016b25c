"""
Pairs Module
Pair labels and the coset representatives g_ij of Y and h_(i,j) of X in A_k
"""
from functools import lru_cache
from typing import Dict, List, Tuple

from src.groups.permutation import Permutation

Pair = Tuple[int, int]


@lru_cache(maxsize=None)
def pair_list(k: int) -> Tuple[Pair, ...]:
    """Unordered pairs (a, b), a < b, of 0-based points in lexicographic order"""
    return tuple((a, b) for a in range(k) for b in range(a + 1, k))


@lru_cache(maxsize=None)
def pair_index(k: int) -> Dict[Pair, int]:
    return {pair: i for i, pair in enumerate(pair_list(k))}


@lru_cache(maxsize=None)
def ordered_pair_list(k: int) -> Tuple[Pair, ...]:
    return tuple((a, b) for a in range(k) for b in range(k) if a != b)


def pair_label(pair: Pair) -> str:
    """1-based label such as "{3,5}" """
    return "{%d,%d}" % (pair[0] + 1, pair[1] + 1)


def pair_of(g: Permutation) -> Pair:
    """The pair {1,2}·g as a sorted 0-based tuple"""
    a, b = g(0), g(1)
    return (a, b) if a < b else (b, a)


def _rep(pair: Pair, k: int) -> Permutation:
    a, b = pair
    if (a, b) == (0, 1):
        return Permutation.identity(k)
    if a == 0:
        # (2 1 j): 1 -> 0, 0 -> b, b -> 1
        return Permutation.from_cycles([(2, 1, b + 1)], k)
    if a == 1:
        # (1 2 j)
        return Permutation.from_cycles([(1, 2, b + 1)], k)
    return Permutation.from_cycles([(1, a + 1), (2, b + 1)], k)


@lru_cache(maxsize=None)
def pair_coset_reps(k: int) -> Dict[Pair, Permutation]:
    """
    Coset representatives g_ij of Y = Stab({1,2}) in A_k.

    Args:
        k (int): Degree, at least 5

    Returns:
        dict: 0-based sorted pair -> permutation sending {1,2} to the pair
    """
    if k < 5:
        raise ValueError("pair_coset_reps needs k >= 5")
    return {pair: _rep(pair, k) for pair in pair_list(k)}


def coset_rep_for(i: int, j: int, k: int) -> Permutation:
    """1-based lookup of g_ij"""
    if not (1 <= i <= k and 1 <= j <= k) or i == j:
        raise ValueError(f"pair {{{i},{j}}} not within 1..{k}")
    a, b = sorted((i - 1, j - 1))
    return pair_coset_reps(k)[(a, b)]


@lru_cache(maxsize=None)
def ordered_pair_coset_reps(k: int) -> Dict[Pair, Permutation]:
    """
    Coset representatives h_(i,j) of X = G_12 in A_k, indexed by (1·h, 2·h).

    Note:
        Each pair contributes g_ij and w*g_ij, where w = (1 2)(3 4) lies in Y and
        exchanges the images of 1 and 2.
    """
    w = Permutation.from_cycles([(1, 2), (3, 4)], k)
    reps = {}
    for g in pair_coset_reps(k).values():
        reps[(g(0), g(1))] = g
        swapped = w * g
        reps[(swapped(0), swapped(1))] = swapped
    return reps


def pairs_inside(points: List[int], k: int) -> List[int]:
    """Indices of the pairs with both ends in a point set"""
    chosen = set(points)
    return [i for i, (a, b) in enumerate(pair_list(k)) if a in chosen and b in chosen]
