"""
Symmetric Cocycles Module
Explicit GF(2)-valued 2-cocycles on S_m and their pullbacks to Y = Stab({1,2}) in A_k
"""
from typing import Dict, Tuple

import numpy as np

from src.cohomology.clifford import get_clifford_lift
from src.cohomology.cocycle import SIGN_CARRY, SPIN, SUM, Cocycle2
from src.groups.named_groups import symmetric_group
from src.groups.perm_group import PermGroup
from src.groups.permutation import Permutation
from src.modules.constructions import trivial_module


def spin_cocycle(m: int) -> Cocycle2:
    """
    eps_spin(σ,τ) = 1 exactly when t(σ)t(τ) is a negative multiple of t(στ)
    for the Clifford lift t.

    Raises:
        ValueError: For m < 4
    """
    if m < 4:
        raise ValueError("spin_cocycle needs m >= 4")
    group = symmetric_group(m)
    lift = get_clifford_lift(m)
    return Cocycle2(group, trivial_module(group, 2),
                    lambda s, t: np.array([lift.sign_bit(s, t)], dtype=np.uint8), SPIN, "eps_spin")


def sign_carry_cocycle(m: int) -> Cocycle2:
    """eps'(σ,τ) = sgn(σ)·sgn(τ) with sgn the parity bit"""
    if m < 2:
        raise ValueError("sign_carry_cocycle needs m >= 2")
    group = symmetric_group(m)
    return Cocycle2(group, trivial_module(group, 2),
                    lambda s, t: np.array([s.parity & t.parity], dtype=np.uint8), SIGN_CARRY, "eps_sign")


def y_class_cocycles(m: int) -> Dict[str, Cocycle2]:
    """The three nonzero explicit classes on S_m, keyed by kind"""
    spin = spin_cocycle(m)
    carry = sign_carry_cocycle(m)
    return {SIGN_CARRY: carry, SPIN: spin, SUM: spin + carry}


def class_invariants(eps: Cocycle2) -> Tuple[int, int]:
    """(eps(τ,τ), eps(ν,ν)) for τ = (1 2) and ν = (1 2)(3 4) in S_m"""
    m = eps.group.degree
    tau = Permutation.from_cycles([(1, 2)], m)
    nu = Permutation.from_cycles([(1, 2), (3, 4)], m)
    return eps.scalar(tau, tau), eps.scalar(nu, nu)


def pullback_to_young(eps: Cocycle2, young: PermGroup) -> Cocycle2:
    """
    eps on Y through Y -> S_{k-2}, y -> y restricted to {3..k}.

    Raises:
        ValueError: When eps lives on S_m with m != k - 2
    """
    k = young.degree
    if eps.group.degree != k - 2:
        raise ValueError(f"cocycle on S_{eps.group.degree} cannot pull back to Y < A_{k}")
    rest = list(range(2, k))

    def evaluate(y1: Permutation, y2: Permutation) -> np.ndarray:
        return eps(y1.restricted(rest), y2.restricted(rest))

    return Cocycle2(young, trivial_module(young, 2), evaluate, eps.kind, f"{eps.name}|Y")
