"""
Cohomology Package

Explicit 2-cocycles, Eckmann-Shapiro induction, derivations and the complement system.
"""
from .clifford import CliffordLift, get_clifford_lift
from .cocycle import (COBOUNDARY, CONNECTING, INDUCED, SIGN_CARRY, SPIN, SUM, ZERO, Cocycle2,
                      coboundary, word_cochain, zero_cocycle)
from .derivations import (Derivation, DerivationSpace, connecting_cocycle, derivation_space,
                          inner_derivation)
from .fox import CoboundaryTest, coboundary_test, complement_system, fox_system, relator_tails
from .induced import coset_decomposition, induce_cocycle
from .symmetric import (class_invariants, pullback_to_young, sign_carry_cocycle, spin_cocycle,
                        y_class_cocycles)

__all__ = [
    "Cocycle2", "coboundary", "word_cochain", "zero_cocycle", "SPIN", "SIGN_CARRY", "SUM",
    "INDUCED", "CONNECTING", "COBOUNDARY", "ZERO", "CliffordLift", "get_clifford_lift",
    "spin_cocycle", "sign_carry_cocycle", "y_class_cocycles", "class_invariants",
    "pullback_to_young", "coset_decomposition", "induce_cocycle", "fox_system",
    "relator_tails", "complement_system", "coboundary_test", "CoboundaryTest", "Derivation",
    "DerivationSpace", "derivation_space", "inner_derivation", "connecting_cocycle",
]
