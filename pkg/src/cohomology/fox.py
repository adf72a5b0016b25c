"""
Fox System Module
Relator tails in a cocycle extension and the linear system for complements
"""
import logging
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from src.cohomology.cocycle import Cocycle2
from src.errors import DimensionMismatchError
from src.groups.perm_group import PermGroup
from src.groups.presentations import Presentation, Word
from src.linalg.echelon import matmul_mod
from src.linalg.subspace import rank, solve
from src.modules.gmodule import GModule

logger = logging.getLogger(__name__)


def _presentation(group: PermGroup) -> Presentation:
    if group.presentation is None:
        raise ValueError(f"{group.name} has no registered presentation")
    return group.presentation


def fox_matrices(relator: Word, module: GModule) -> List[np.ndarray]:
    """
    Coefficient matrices F_a with relator value = tail + sum_a c_a F_a.

    A positive letter a contributes A(suffix); a negative letter contributes
    -A_a^-1 A(suffix), where A(suffix) is the action of the rest of the word.
    """
    p, d = module.p, module.dim
    result = [np.zeros((d, d), dtype=np.int64) for _ in range(module.ngens)]
    suffix = module.identity_matrix()
    for letter in reversed(relator):
        a = abs(letter) - 1
        if letter > 0:
            result[a] += suffix
            suffix = matmul_mod(module.action[a], suffix, p)
        else:
            inv = module.inverse_action[a]
            result[a] -= matmul_mod(inv, suffix, p)
            suffix = matmul_mod(inv, suffix, p)
    return [np.mod(f, p).astype(np.uint8) for f in result]


def fox_system(group: PermGroup, module: GModule) -> np.ndarray:
    """
    Column-convention coefficient matrix of shape (R·d, n·d): row block r, column
    block a holds F_{r,a}^T.
    """
    if module.ngens != group.ngens:
        raise DimensionMismatchError(f"module for {module.ngens} generators, group has {group.ngens}")
    relators = _presentation(group).relators
    d, n = module.dim, group.ngens
    system = np.zeros((len(relators) * d, n * d), dtype=np.uint8)
    for r, relator in enumerate(relators):
        for a, f in enumerate(fox_matrices(relator, module)):
            system[r * d:(r + 1) * d, a * d:(a + 1) * d] = f.T
    return system


def relator_tails(group: PermGroup, delta: Cocycle2) -> List[np.ndarray]:
    """
    M-component of each relator evaluated with the lifts (0, g_a) in the extension.

    Uses (m,x)(0,g) = (m·g + delta(x,g), xg) and (0,g)^-1 = (-delta(g,g^-1), g^-1).
    """
    module = delta.module
    p = module.p
    tails = []
    for relator in _presentation(group).relators:
        m = np.zeros(module.dim, dtype=np.int64)
        x = group.identity()
        for letter in relator:
            a = abs(letter) - 1
            g = group.generators[a]
            if letter > 0:
                step_matrix, step, lift_m = module.action[a], g, 0
            else:
                step = g.inverse()
                step_matrix = module.inverse_action[a]
                lift_m = -delta(g, step).astype(np.int64)
            m = (matmul_mod(np.mod(m, p)[None, :], step_matrix, p)[0].astype(np.int64)
                 + lift_m + delta(x, step))
            x = x * step
        if not x.is_identity():
            raise ValueError(f"relator {relator} does not hold in {group.name}")
        tails.append(np.mod(m, p).astype(np.uint8))
    return tails


@dataclass
class CoboundaryTest:
    """
    Outcome of the complement system sum_a c_a F_{r,a} = -t_r.

    feasible means delta is a coboundary (the extension splits); solution then holds
    the generator values c_a as rows.
    """

    feasible: bool
    unknowns: int
    equations: int
    rank: int
    solution: Optional[np.ndarray] = None

    def summary(self) -> dict:
        return {"unknowns": self.unknowns, "equations": self.equations, "rank": self.rank,
                "feasible": self.feasible}


def complement_system(group: PermGroup, module: GModule, tails: List[np.ndarray]) -> CoboundaryTest:
    """Solve the complement system for given relator tails"""
    p, d, n = module.p, module.dim, group.ngens
    system = fox_system(group, module)
    rhs = np.mod(-np.concatenate([np.asarray(t, dtype=np.int64) for t in tails]), p) if tails else np.zeros(0)
    solution = solve(system, rhs, p) if system.shape[0] else np.zeros(n * d, dtype=np.uint8)
    result = CoboundaryTest(
        feasible=solution is not None,
        unknowns=n * d,
        equations=system.shape[0],
        rank=rank(system, p) if system.size else 0,
        solution=None if solution is None else solution.reshape(n, d),
    )
    logger.info("Complement system over GF(%d): %d unknowns, %d equations, rank %d, %s", p,
                result.unknowns, result.equations, result.rank,
                "feasible" if result.feasible else "infeasible")
    return result


def coboundary_test(delta: Cocycle2, group: Optional[PermGroup] = None) -> CoboundaryTest:
    """Decide whether delta is a coboundary over the group's presentation"""
    group = group or delta.group
    return complement_system(group, delta.module, relator_tails(group, delta))
