"""
Cocycle Module
Normalized 2-cocycles with values in a right G-module, evaluated lazily with caching
"""
import logging
import threading
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from src.config import COCYCLE_IDENTITY_TRIALS
from src.errors import DimensionMismatchError
from src.groups.perm_group import PermGroup
from src.groups.permutation import Permutation
from src.linalg.echelon import matmul_mod
from src.modules.gmodule import GModule

logger = logging.getLogger(__name__)

SPIN = "spin"
SIGN_CARRY = "sign_carry"
SUM = "sum"
INDUCED = "induced"
CONNECTING = "connecting"
COBOUNDARY = "coboundary"
ZERO = "zero"

_CACHE_LIMIT = 1 << 16

Evaluator = Callable[[Permutation, Permutation], np.ndarray]


class Cocycle2:
    """
    delta: G x G -> M in additive notation, satisfying
    delta(g,h)·x + delta(gh,x) = delta(h,x) + delta(g,hx) and delta(1,h) = delta(g,1) = 0.

    Args:
        group (PermGroup): Base group
        module (GModule): Coefficients; must be a module for the same generators
        evaluator: (g, h) -> vector of length module.dim
        kind (str): One of spin, sign_carry, sum, induced, connecting, coboundary, zero
        name (str): Report label
    """

    def __init__(self, group: PermGroup, module: GModule, evaluator: Evaluator, kind: str, name: str = ""):
        self.group = group
        self.module = module
        self.kind = kind
        self.name = name or kind
        self._evaluator = evaluator
        self._cache: Dict[Tuple[bytes, bytes], np.ndarray] = {}
        self._lock = threading.Lock()

    @property
    def p(self) -> int:
        return self.module.p

    def __call__(self, g: Permutation, h: Permutation) -> np.ndarray:
        key = (g.key, h.key)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        if g.is_identity() or h.is_identity():
            value = self.module.zero()
        else:
            value = np.mod(np.asarray(self._evaluator(g, h), dtype=np.int64), self.p).astype(np.uint8)
            if value.shape != (self.module.dim,):
                raise DimensionMismatchError(f"{self.name} returned shape {value.shape}, module dim {self.module.dim}")
        value.flags.writeable = False
        with self._lock:
            if len(self._cache) >= _CACHE_LIMIT:
                self._cache.clear()
            self._cache[key] = value
        return value

    def scalar(self, g: Permutation, h: Permutation) -> int:
        """Value as a residue, for 1-dimensional coefficients"""
        if self.module.dim != 1:
            raise DimensionMismatchError(f"{self.name} has {self.module.dim}-dimensional values")
        return int(self(g, h)[0])

    def __add__(self, other: "Cocycle2") -> "Cocycle2":
        if other.module is not self.module and other.module.dim != self.module.dim:
            raise DimensionMismatchError("cocycles with different coefficient modules")
        kind = SUM if {self.kind, other.kind} == {SPIN, SIGN_CARRY} else self.kind
        return Cocycle2(self.group, self.module, lambda g, h: self(g, h).astype(np.int16) + other(g, h),
                        kind, f"{self.name}+{other.name}")

    def mapped(self, matrix: np.ndarray, target: GModule, name: str = "") -> "Cocycle2":
        """Compose with a module map given by a dim(M) x dim(target) matrix"""
        matrix = np.asarray(matrix)
        if matrix.shape != (self.module.dim, target.dim):
            raise DimensionMismatchError(f"map of shape {matrix.shape} from dim {self.module.dim} to {target.dim}")
        return Cocycle2(self.group, target, lambda g, h: matmul_mod(self(g, h)[None, :], matrix, self.p)[0],
                        self.kind, name or f"{self.name}->{target.name}")

    def restricted(self, subgroup: PermGroup, module: Optional[GModule] = None) -> "Cocycle2":
        """Restriction to a subgroup (values unchanged, module restricted)"""
        module = module or self.module.restrict(subgroup)
        return Cocycle2(subgroup, module, self, self.kind, f"{self.name}|{subgroup.name}")

    def failing_triples(self, rng: np.random.Generator, trials: int = COCYCLE_IDENTITY_TRIALS,
                        elements: Optional[List[Permutation]] = None) -> List[Tuple[Permutation, ...]]:
        """
        Random triples violating the cocycle identity.

        Draws from the given element list when present, else random words in the group.
        """
        failures = []
        p = self.p
        for _ in range(trials):
            if elements:
                g, h, x = (elements[int(i)] for i in rng.integers(0, len(elements), size=3))
            else:
                g, h, x = (self.group.random_element(rng) for _ in range(3))
            left = self.module.act(self(g, h), x).astype(np.int16) + self(g * h, x)
            right = self(h, x).astype(np.int16) + self(g, h * x)
            if np.any(np.mod(left - right, p)):
                failures.append((g, h, x))
        if failures:
            logger.warning("%s: %d of %d triples fail the cocycle identity", self.name, len(failures), trials)
        return failures

    def __repr__(self) -> str:
        return f"Cocycle2({self.name}, kind={self.kind}, module={self.module.name})"


def zero_cocycle(group: PermGroup, module: GModule) -> Cocycle2:
    return Cocycle2(group, module, lambda g, h: module.zero(), ZERO, "zero")


def coboundary(group: PermGroup, module: GModule, cochain: Callable[[Permutation], np.ndarray],
               name: str = "") -> Cocycle2:
    """(∂c)(g,h) = c(g)·h + c(h) - c(gh); vanishes on identities when c(1) = 0"""
    def evaluate(g: Permutation, h: Permutation) -> np.ndarray:
        return (module.act(cochain(g), h).astype(np.int16) + cochain(h)) - cochain(g * h)

    return Cocycle2(group, module, evaluate, COBOUNDARY, name or "coboundary")


def word_cochain(group: PermGroup, module: GModule, generator_values: np.ndarray) -> Callable[[Permutation], np.ndarray]:
    """
    Extend generator values to a function on G along the group's factorizer with
    c(w·s) = c(w)·s + c(s) and c(s^-1) = -c(s)·s^-1.
    """
    values = np.asarray(generator_values).reshape(group.ngens, module.dim)
    p = module.p
    cache: Dict[bytes, np.ndarray] = {}

    def cochain(g: Permutation) -> np.ndarray:
        cached = cache.get(g.key)
        if cached is not None:
            return cached
        total = module.zero().astype(np.int64)
        for letter in group.factor(g):
            if letter > 0:
                a = module.action[letter - 1]
                total = matmul_mod(total[None, :], a, p)[0].astype(np.int64) + values[letter - 1]
            else:
                a_inv = module.inverse_action[-letter - 1]
                total = matmul_mod(np.mod(total - values[-letter - 1], p)[None, :], a_inv, p)[0].astype(np.int64)
        result = np.mod(total, p).astype(np.uint8)
        cache[g.key] = result
        return result

    return cochain
