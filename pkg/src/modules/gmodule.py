"""
G-Module Module
Right G-modules over GF(p) given by one action matrix per group generator
"""
import threading
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.errors import DimensionMismatchError
from src.groups.perm_group import PermGroup
from src.groups.permutation import Permutation
from src.groups.presentations import Presentation
from src.linalg.echelon import matmul_mod
from src.linalg.subspace import Quotient, Subspace, inverse, left_nullspace

_MATRIX_CACHE_LIMIT = 8192


def _frozen(matrix: np.ndarray, p: int) -> np.ndarray:
    arr = np.ascontiguousarray(np.mod(np.asarray(matrix), p).astype(np.uint8))
    arr.flags.writeable = False
    return arr


class GModule:
    """
    A GF(p)-space of row vectors with v·g = v @ A_g for each generator g.

    Args:
        p (int): Prime
        group (PermGroup): Acting group; matrices follow its generator order
        action: One invertible dim x dim matrix per generator
        dim (int): Needed only when the group has no generators
        name (str): Report label
        labels: Optional basis labels (e.g. pairs)
        orthonormal (bool): Whether the standard form is G-invariant
    """

    def __init__(self, p: int, group: PermGroup, action: Sequence[np.ndarray],
                 dim: Optional[int] = None, name: str = "", labels: Optional[Sequence] = None,
                 orthonormal: bool = False):
        mats = tuple(_frozen(a, p) for a in action)
        if len(mats) != group.ngens:
            raise DimensionMismatchError(f"{len(mats)} matrices for {group.ngens} generators")
        if dim is None:
            if not mats:
                raise ValueError("dim is required for a group without generators")
            dim = mats[0].shape[0]
        for a in mats:
            if a.shape != (dim, dim):
                raise DimensionMismatchError(f"action matrix of shape {a.shape} in a module of dim {dim}")
        self.p = p
        self.group = group
        self.action = mats
        self.dim = dim
        self.name = name
        self.labels = tuple(labels) if labels is not None else None
        self.orthonormal = orthonormal
        self._inverse_action: Optional[Tuple[np.ndarray, ...]] = None
        self._matrix_cache: Dict[bytes, np.ndarray] = {}
        self._lock = threading.Lock()

    @property
    def ngens(self) -> int:
        return len(self.action)

    @property
    def inverse_action(self) -> Tuple[np.ndarray, ...]:
        if self._inverse_action is None:
            self._inverse_action = tuple(_frozen(inverse(a, self.p), self.p) for a in self.action)
        return self._inverse_action

    def identity_matrix(self) -> np.ndarray:
        return np.eye(self.dim, dtype=np.uint8)

    def word_matrix(self, word: Sequence[int]) -> np.ndarray:
        """Matrix of a word in the group generators"""
        result = self.identity_matrix()
        inverses = None
        for letter in word:
            if letter > 0:
                factor = self.action[letter - 1]
            else:
                inverses = inverses or self.inverse_action
                factor = inverses[-letter - 1]
            result = matmul_mod(result, factor, self.p)
        return result

    def matrix_of(self, g: Permutation) -> np.ndarray:
        """Matrix of a group element, through the group's word factorizer (cached)"""
        cached = self._matrix_cache.get(g.key)
        if cached is not None:
            return cached
        matrix = _frozen(self.word_matrix(self.group.factor(g)), self.p)
        with self._lock:
            if len(self._matrix_cache) >= _MATRIX_CACHE_LIMIT:
                self._matrix_cache.clear()
            self._matrix_cache[g.key] = matrix
        return matrix

    def act(self, vectors: np.ndarray, g: Permutation) -> np.ndarray:
        return matmul_mod(np.asarray(vectors), self.matrix_of(g), self.p)

    def zero(self) -> np.ndarray:
        return np.zeros(self.dim, dtype=np.uint8)

    def failing_relators(self, presentation: Optional[Presentation] = None) -> List[Tuple[int, ...]]:
        """Relators whose matrix word is not the identity"""
        pres = presentation or self.group.presentation
        if pres is None:
            return []
        eye = self.identity_matrix()
        return [r for r in pres.relators if not np.array_equal(self.word_matrix(r), eye)]

    def is_invariant(self, sub: Subspace) -> bool:
        if sub.dim == 0:
            return True
        return all(sub.contains(matmul_mod(sub.basis, a, self.p)) for a in self.action)

    def dual(self) -> "GModule":
        """Dual module: functionals as row vectors, acted on by transpose-inverse matrices"""
        mats = [np.ascontiguousarray(a.T) for a in self.inverse_action]
        return GModule(self.p, self.group, mats, dim=self.dim, name=f"{self.name}*",
                       labels=self.labels, orthonormal=self.orthonormal)

    def submodule(self, sub: Subspace, name: str = "") -> "GModule":
        """The action on an invariant subspace, in echelon coordinates"""
        if sub.ambient != self.dim or sub.p != self.p:
            raise DimensionMismatchError("subspace does not live in this module")
        if not self.is_invariant(sub):
            raise ValueError("subspace is not G-invariant")
        piv = list(sub.pivots)
        mats = [matmul_mod(sub.basis, a, self.p)[:, piv] for a in self.action]
        return GModule(self.p, self.group, mats, dim=sub.dim, name=name or f"sub({self.name})")

    def quotient(self, sub: Subspace, name: str = "") -> Tuple["GModule", Quotient]:
        """The action on V/U together with the projection/section data"""
        if not self.is_invariant(sub):
            raise ValueError("subspace is not G-invariant")
        quo = Quotient(sub)
        mats = [quo.induced_matrix(a) for a in self.action]
        return GModule(self.p, self.group, mats, dim=quo.dim, name=name or f"{self.name}/U"), quo

    def restrict(self, subgroup: PermGroup, name: str = "") -> "GModule":
        """Restriction to a subgroup whose generators factor in this module's group"""
        mats = [self.matrix_of(g) for g in subgroup.generators]
        return GModule(self.p, subgroup, mats, dim=self.dim, name=name or f"{self.name}|{subgroup.name}",
                       labels=self.labels, orthonormal=self.orthonormal)

    def __repr__(self) -> str:
        return f"GModule({self.name or '?'}, dim={self.dim}, p={self.p}, group={self.group.name})"


@dataclass(frozen=True)
class ModuleMap:
    """A G-homomorphism given by a dim(source) x dim(target) matrix on row vectors"""

    source: GModule
    target: GModule
    matrix: np.ndarray

    def __call__(self, vectors: np.ndarray) -> np.ndarray:
        return matmul_mod(np.asarray(vectors), self.matrix, self.source.p)

    def is_intertwining(self) -> bool:
        p = self.source.p
        for a, b in zip(self.source.action, self.target.action):
            if not np.array_equal(matmul_mod(a, self.matrix, p), matmul_mod(self.matrix, b, p)):
                return False
        return True

    def image(self) -> Subspace:
        return Subspace.span(self.source.p, self.target.dim, self.matrix)

    def kernel(self) -> Subspace:
        return left_nullspace(self.matrix, self.source.p)

    @property
    def rank(self) -> int:
        return self.image().dim

    def is_isomorphism(self) -> bool:
        return self.source.dim == self.target.dim and self.rank == self.source.dim


def same_group(a: GModule, b: GModule) -> bool:
    if a.group is b.group:
        return True
    return (a.group.degree == b.group.degree and a.group.ngens == b.group.ngens
            and all(x == y for x, y in zip(a.group.generators, b.group.generators)))
