"""
Derivations Module
Crossed homomorphisms, H^1 through relator conditions, and connecting cocycles
"""
import logging
from dataclasses import dataclass, field
from typing import Callable, List, Optional

import numpy as np

from src.cohomology.cocycle import CONNECTING, Cocycle2, word_cochain
from src.cohomology.fox import fox_system
from src.errors import MathematicalCheckFailed
from src.groups.perm_group import PermGroup
from src.groups.permutation import Permutation
from src.linalg.echelon import matmul_mod
from src.linalg.subspace import Quotient, Subspace, nullspace, subspace_sum
from src.modules.gmodule import GModule

logger = logging.getLogger(__name__)


@dataclass
class Derivation:
    """
    d: G -> W with d(gh) = d(g)·h + d(h), fixed by its generator values (rows).
    """

    group: PermGroup
    module: GModule
    values: np.ndarray
    _cochain: Optional[Callable[[Permutation], np.ndarray]] = field(default=None, repr=False, compare=False)

    def __call__(self, g: Permutation) -> np.ndarray:
        if self._cochain is None:
            self._cochain = word_cochain(self.group, self.module, self.values)
        return self._cochain(g)

    @property
    def flat(self) -> np.ndarray:
        return np.asarray(self.values, dtype=np.uint8).reshape(-1)

    def satisfies_relators(self) -> bool:
        system = fox_system(self.group, self.module)
        return not np.any(matmul_mod(system, self.flat[:, None], self.module.p))


def inner_derivation(group: PermGroup, module: GModule, v: np.ndarray) -> Derivation:
    """g -> v·g - v"""
    v = np.asarray(v, dtype=np.int16)
    values = [np.mod(matmul_mod(v[None, :], a, module.p)[0].astype(np.int16) - v, module.p)
              for a in module.action]
    return Derivation(group, module, np.array(values, dtype=np.uint8).reshape(group.ngens, module.dim))


@dataclass
class DerivationSpace:
    """Z^1 and B^1 inside the space of generator values (flattened n·d vectors)"""

    group: PermGroup
    module: GModule
    cocycles: Subspace
    inner: Subspace
    non_inner: List[Derivation]

    @property
    def h1_dimension(self) -> int:
        return self.cocycles.dim - self.inner.dim

    def derivation(self, flat: np.ndarray) -> Derivation:
        return Derivation(self.group, self.module, np.asarray(flat).reshape(self.group.ngens, self.module.dim))

    def basis(self) -> List[Derivation]:
        return [self.derivation(row) for row in self.cocycles.basis]

    def is_inner(self, d: Derivation) -> bool:
        return self.inner.contains(d.flat)


def derivation_space(group: PermGroup, module: GModule) -> DerivationSpace:
    """
    Solve the relator conditions for derivations and split off the inner ones.

    Returns:
        DerivationSpace: Z^1, B^1 and derivations spanning a complement of B^1 in Z^1
    """
    p, d, n = module.p, module.dim, group.ngens
    cocycles = nullspace(fox_system(group, module), p)
    inner_rows = [inner_derivation(group, module, e).flat for e in np.eye(d, dtype=np.uint8)]
    inner = Subspace.span(p, n * d, np.array(inner_rows)) if inner_rows else Subspace.zero(p, n * d)
    non_inner = []
    span = inner
    for row in cocycles.basis:
        if not span.contains(row):
            span = subspace_sum(span, Subspace.span(p, n * d, row))
            non_inner.append(Derivation(group, module, row.reshape(n, d)))
    space = DerivationSpace(group, module, cocycles, inner, non_inner)
    logger.info("H^1(%s, %s): dim Z^1 = %d, dim B^1 = %d", group.name, module.name,
                cocycles.dim, inner.dim)
    return space


def connecting_cocycle(d: Derivation, ambient: GModule, quotient: Quotient, submodule: Subspace,
                       target: GModule) -> Cocycle2:
    """
    delta(g,h) = d~(g)·h + d~(h) - d~(gh) with d~ = section∘d, read in the
    echelon coordinates of the submodule M.

    Args:
        d (Derivation): Derivation into V/M
        ambient (GModule): V
        quotient (Quotient): V -> V/M with its fixed section
        submodule (Subspace): M inside V
        target (GModule): M as a module (echelon coordinates of submodule)

    Raises:
        MathematicalCheckFailed: When a value leaves M
    """
    p = ambient.p
    pivots = list(submodule.pivots)

    def lifted(g: Permutation) -> np.ndarray:
        return quotient.lift(d(g)[None, :])[0].astype(np.int16)

    def evaluate(g: Permutation, h: Permutation) -> np.ndarray:
        value = np.mod(ambient.act(lifted(g), h).astype(np.int16) + lifted(h) - lifted(g * h), p)
        if not submodule.contains(value):
            raise MathematicalCheckFailed("connecting cocycle", f"value at ({g.to_cycle_string()}, "
                                          f"{h.to_cycle_string()}) is outside M")
        return value[pivots]

    return Cocycle2(d.group, target, evaluate, CONNECTING, f"conn({target.name})")
