"""
Named Groups Module
A_k, S_m and the subgroups Y = Stab({1,2}), X = G_12 and A_k < A_j with word factorizers
"""
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from src.errors import NotInGroupError
from src.groups.perm_group import PermGroup
from src.groups.permutation import Permutation
from src.groups.presentations import (ALTERNATING, SYMMETRIC, Presentation,
                                      factor_word, presentation_of)


def _embedded_group(kind: str, n: int, degree: int, points: Sequence[int],
                    twist: Optional[Permutation], name: str) -> PermGroup:
    """
    Abstract A_n or S_n realized on a point list inside a larger degree.

    Odd abstract elements are realized together with the involution twist acting on
    the remaining points, so the realized group stays inside A_degree when twist is odd.
    """
    abstract = presentation_of(kind, n)
    pts = np.asarray(points, dtype=np.int32)
    rest = np.setdiff1d(np.arange(degree, dtype=np.int32), pts)
    generators = []
    for g in abstract.generators:
        lifted = g.extended(degree, pts)
        if twist is not None and g.parity:
            lifted = lifted * twist
        generators.append(lifted)
    presentation = abstract.realized_as(generators, f"{name} ({abstract.name})")

    def factorizer(g: Permutation):
        if g.degree != degree:
            raise NotInGroupError(f"degree {g.degree} element offered to {name}")
        try:
            sigma = g.restricted(pts)
        except ValueError as exc:
            raise NotInGroupError(f"{g.to_cycle_string()} does not preserve the support of {name}") from exc
        word = factor_word(kind, sigma)
        expected = rest
        if twist is not None and sigma.parity:
            expected = twist.images[rest]
        if not np.array_equal(g.images[rest], expected):
            raise NotInGroupError(f"{g.to_cycle_string()} is not in {name}")
        return word

    return PermGroup(generators, degree=degree, name=name, factorizer=factorizer,
                     presentation=presentation)


@lru_cache(maxsize=None)
def alternating_group(k: int) -> PermGroup:
    """
    A_k on k points with Carmichael generators (1,2,i), i = 3..k.

    Raises:
        ValueError: For k < 5
    """
    if k < 5:
        raise ValueError("alternating_group needs k >= 5")
    return carmichael_group(k)


@lru_cache(maxsize=None)
def carmichael_group(n: int) -> PermGroup:
    """A_n for any n >= 3 (small degrees serve as oracle test groups)"""
    return _embedded_group(ALTERNATING, n, n, range(n), None, f"A_{n}")


@lru_cache(maxsize=None)
def symmetric_group(m: int) -> PermGroup:
    """S_m with Coxeter generators"""
    return _embedded_group(SYMMETRIC, m, m, range(m), None, f"S_{m}")


@lru_cache(maxsize=None)
def young_pair_stabilizer(k: int) -> PermGroup:
    """
    Y = setwise stabilizer of {1,2} in A_k, isomorphic to S_{k-2}.

    Generators are (i, i+1)(1 2) for i = 3..k-1; factorization goes through the
    action on {3..k}.
    """
    if k < 5:
        raise ValueError("young_pair_stabilizer needs k >= 5")
    twist = Permutation.from_cycles([(1, 2)], k)
    return _embedded_group(SYMMETRIC, k - 2, k, range(2, k), twist, f"Y<A_{k}")


@lru_cache(maxsize=None)
def pointwise_pair_stabilizer(k: int) -> PermGroup:
    """X = G_12, the pointwise stabilizer of 1 and 2 in A_k, isomorphic to A_{k-2}"""
    if k < 5:
        raise ValueError("pointwise_pair_stabilizer needs k >= 5")
    return _embedded_group(ALTERNATING, k - 2, k, range(2, k), None, f"X<A_{k}")


@lru_cache(maxsize=None)
def alternating_subgroup(k: int, j: int) -> PermGroup:
    """A_k inside A_j, fixing the last j-k points; its generators are the first k-2 of A_j"""
    if not 3 <= k <= j:
        raise ValueError(f"cannot embed A_{k} in A_{j}")
    return _embedded_group(ALTERNATING, k, j, range(k), None, f"A_{k}<A_{j}")


def presentation_group(presentation: Presentation) -> PermGroup:
    """The realized group of a presentation, without a factorizer"""
    return PermGroup(presentation.generators, degree=presentation.degree,
                     name=presentation.name, presentation=presentation)


__all__ = [
    "alternating_group", "carmichael_group", "symmetric_group", "young_pair_stabilizer",
    "pointwise_pair_stabilizer", "alternating_subgroup", "presentation_group", "SYMMETRIC",
    "ALTERNATING",
]
