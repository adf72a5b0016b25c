"""
Extension Group Module
Elements of H = M x_delta G with (m1,g1)(m2,g2) = (m1·g2 + m2 + delta(g1,g2), g1 g2)
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from src.cohomology.cocycle import Cocycle2
from src.config import ASSOCIATIVITY_SPOT_CHECKS
from src.errors import BudgetExhaustedError, MathematicalCheckFailed
from src.groups.permutation import Permutation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExtElement:
    """(m, g) with m in M's coordinates and g in the base group"""

    m: np.ndarray
    g: Permutation

    @property
    def key(self) -> bytes:
        return self.m.tobytes() + self.g.key

    def __eq__(self, other) -> bool:
        return isinstance(other, ExtElement) and self.g == other.g and np.array_equal(self.m, other.m)

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"ExtElement(m={''.join(str(int(x)) for x in self.m)}, g={self.g.to_cycle_string()})"


class ExtGroup:
    """
    The extension 1 -> M -> H -> G -> 1 defined by a normalized 2-cocycle.

    Generators are the lifts (0, g_a) of G's generators followed by the basis (e_i, 1) of M.
    """

    def __init__(self, delta: Cocycle2, name: str = ""):
        self.delta = delta
        self.module = delta.module
        self.base = delta.group
        self.p = self.module.p
        self.name = name or f"{self.module.name}.{self.base.name}"

    def _vec(self, m) -> np.ndarray:
        arr = np.mod(np.asarray(m, dtype=np.int64), self.p).astype(np.uint8).reshape(self.module.dim)
        arr.flags.writeable = False
        return arr

    def element(self, m, g: Permutation) -> ExtElement:
        return ExtElement(self._vec(m), g)

    def identity(self) -> ExtElement:
        return self.element(self.module.zero(), self.base.identity())

    def lift(self, g: Permutation) -> ExtElement:
        return self.element(self.module.zero(), g)

    def embed(self, m) -> ExtElement:
        return self.element(m, self.base.identity())

    @property
    def generators(self) -> List[ExtElement]:
        gens = [self.lift(g) for g in self.base.generators]
        gens.extend(self.embed(e) for e in np.eye(self.module.dim, dtype=np.uint8))
        return gens

    def multiply(self, x: ExtElement, y: ExtElement) -> ExtElement:
        moved = self.module.act(x.m, y.g).astype(np.int64)
        return self.element(moved + y.m + self.delta(x.g, y.g), x.g * y.g)

    def product(self, elements: Sequence[ExtElement]) -> ExtElement:
        result = self.identity()
        for x in elements:
            result = self.multiply(result, x)
        return result

    def inverse(self, x: ExtElement) -> ExtElement:
        """(m,g)^-1 = (-m·g^-1 - delta(g,g^-1), g^-1)"""
        g_inv = x.g.inverse()
        moved = self.module.act(x.m, g_inv).astype(np.int64)
        return self.element(-moved - self.delta(x.g, g_inv), g_inv)

    def power(self, x: ExtElement, exponent: int) -> ExtElement:
        if exponent < 0:
            return self.power(self.inverse(x), -exponent)
        result = self.identity()
        base = x
        while exponent:
            if exponent & 1:
                result = self.multiply(result, base)
            base = self.multiply(base, base)
            exponent >>= 1
        return result

    def evaluate_word(self, word: Sequence[int], generators: Sequence[ExtElement]) -> ExtElement:
        result = self.identity()
        for letter in word:
            factor = generators[abs(letter) - 1]
            result = self.multiply(result, factor if letter > 0 else self.inverse(factor))
        return result

    def element_order(self, x: ExtElement) -> int:
        """
        Order of x: (x^o)^r = 1 where o is the order of g and r the order of the M-part.

        Raises:
            BudgetExhaustedError: Past 4·p·order(g), which orders here never reach
        """
        base_order = x.g.order
        cap = 4 * self.p * base_order
        y = self.power(x, base_order)
        order = base_order
        while np.any(y.m):
            if order >= cap:
                raise BudgetExhaustedError("element order", cap, repr(x))
            y = self.multiply(y, self.power(x, base_order))
            order += base_order
        return order

    def random_element(self, rng: np.random.Generator) -> ExtElement:
        m = rng.integers(0, self.p, size=self.module.dim)
        return self.element(m, self.base.random_element(rng))

    def associativity_failures(self, rng: np.random.Generator, trials: int) -> int:
        failures = 0
        for _ in range(trials):
            a, b, c = (self.random_element(rng) for _ in range(3))
            if self.multiply(self.multiply(a, b), c) != self.multiply(a, self.multiply(b, c)):
                failures += 1
        return failures

    def __repr__(self) -> str:
        return f"ExtGroup({self.name}, |M| = {self.p}^{self.module.dim})"


def build_extension(delta: Cocycle2, name: str = "", rng: Optional[np.random.Generator] = None,
                    spot_checks: int = ASSOCIATIVITY_SPOT_CHECKS) -> ExtGroup:
    """
    H = M x_delta G with an associativity spot check.

    Raises:
        MathematicalCheckFailed: When a sampled triple is not associative
    """
    group = ExtGroup(delta, name)
    rng = rng or np.random.default_rng(0)
    failures = group.associativity_failures(rng, spot_checks)
    if failures:
        raise MathematicalCheckFailed("build extension", f"{failures} of {spot_checks} triples not associative")
    logger.info("Stage build_extension: %r", group)
    return group