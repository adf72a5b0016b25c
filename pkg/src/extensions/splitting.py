"""
Splitting Module
Sections of M/M0 over a subgroup K of G, giving the subgroup E0 = <M0, (c_a z, y_a)> of H
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List

import numpy as np

from src.cohomology.cocycle import Cocycle2
from src.cohomology.fox import CoboundaryTest, complement_system, relator_tails
from src.errors import CosetDecompositionError, MathematicalCheckFailed, NotInGroupError
from src.extensions.ext_group import ExtElement, ExtGroup
from src.groups.perm_group import PermGroup
from src.groups.permutation import Permutation
from src.linalg.echelon import matmul_mod
from src.linalg.subspace import Subspace, nullspace
from src.modules.constructions import character_module

logger = logging.getLogger(__name__)


@dataclass
class SubgroupSection:
    """
    A complement to M/M0 in the preimage of K, lifted to H.

    Args:
        group (ExtGroup): H
        subgroup (PermGroup): K < G with a factorizer
        functional (np.ndarray): phi: M -> GF(p) with kernel M0
        unit (np.ndarray): z in M with phi(z) = 1
        character: chi(y_a) with phi(m·y_a) = chi(y_a) phi(m)
        values: c_a in GF(p), one per generator of K
        system (CoboundaryTest): The solved complement system
    """

    group: ExtGroup
    subgroup: PermGroup
    functional: np.ndarray
    unit: np.ndarray
    character: List[int]
    values: List[int]
    system: CoboundaryTest
    _beta: Dict[bytes, int] = field(default_factory=dict, repr=False)

    @property
    def kernel(self) -> Subspace:
        """M0 = ker phi"""
        return nullspace(self.functional[None, :], self.group.p)

    @property
    def lifts(self) -> List[ExtElement]:
        return [self.group.element(c * self.unit.astype(np.int64), y)
                for c, y in zip(self.values, self.subgroup.generators)]

    @property
    def is_central(self) -> bool:
        return all(c == 1 for c in self.character)

    def phi(self, m: np.ndarray) -> int:
        return int(np.dot(np.asarray(m, dtype=np.int64), self.functional.astype(np.int64)) % self.group.p)

    def beta(self, y: Permutation) -> int:
        """phi of the M-part of the section element over y (a word in the lifts)"""
        cached = self._beta.get(y.key)
        if cached is None:
            element = self.group.evaluate_word(self.subgroup.factor(y), self.lifts)
            if element.g != y:
                raise CosetDecompositionError(f"section word for {y.to_cycle_string()} evaluates elsewhere")
            cached = self.phi(element.m)
            self._beta[y.key] = cached
        return cached

    def contains(self, x: ExtElement) -> bool:
        """Membership in E0 = {(m, y) : y in K, phi(m) = beta(y)}"""
        try:
            return self.phi(x.m) == self.beta(x.g)
        except (NotInGroupError, CosetDecompositionError):
            return False

    def relator_residues(self) -> List[int]:
        """phi of each relator of K evaluated on the lifts; all zero for a true section"""
        return [self.phi(self.group.evaluate_word(r, self.lifts).m) for r in self.subgroup.presentation.relators]


def splitting_over(group: ExtGroup, subgroup: PermGroup, functional: np.ndarray) -> SubgroupSection:
    """
    Split 1 -> M/M0 -> E/M0 -> K -> 1 where M0 = ker(functional).

    Args:
        group (ExtGroup): H = M x_delta G
        subgroup (PermGroup): K = Y or X with its registered presentation
        functional (np.ndarray): K-equivariant phi: M -> GF(p)

    Raises:
        MathematicalCheckFailed: When phi is not K-equivariant, or when the system is
            infeasible, which contradicts the vanishing of H^2(K, M/M0)
    """
    p = group.p
    module = group.module
    functional = np.mod(np.asarray(functional, dtype=np.int64), p).astype(np.uint8).reshape(module.dim)
    if not np.any(functional):
        raise ValueError("functional is zero")
    character = []
    for y in subgroup.generators:
        image = matmul_mod(module.matrix_of(y), functional[:, None], p)[:, 0]
        scalars = {int(image[j]) * pow(int(functional[j]), p - 2, p) % p for j in np.flatnonzero(functional)}
        if len(scalars) != 1 or np.any(image[functional == 0]):
            raise MathematicalCheckFailed("splitting", f"functional is not {subgroup.name}-equivariant")
        character.append(scalars.pop())
    quotient = character_module(subgroup, p, character, name="M/M0")
    projected = Cocycle2(subgroup, quotient,
                         lambda g, h: np.array([int(np.dot(group.delta(g, h).astype(np.int64), functional) % p)]),
                         group.delta.kind, "phi(delta)")
    system = complement_system(subgroup, quotient, relator_tails(subgroup, projected))
    if not system.feasible:
        raise MathematicalCheckFailed("splitting", f"no section over {subgroup.name}: H^2({subgroup.name}, M/M0) "
                                      "would be nonzero", system.summary())
    lead = int(np.flatnonzero(functional)[0])
    unit = np.zeros(module.dim, dtype=np.uint8)
    unit[lead] = pow(int(functional[lead]), p - 2, p)
    section = SubgroupSection(group, subgroup, functional, unit, character,
                              [int(c) for c in system.solution[:, 0]], system)
    residues = section.relator_residues()
    if any(residues):
        raise MathematicalCheckFailed("splitting", f"section relators leave M0: {residues}")
    logger.info("Stage splitting_over %s: character %s, section %s", subgroup.name, character, section.values)
    return section
