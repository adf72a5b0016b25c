"""
Permutation Group Module
Groups given by an ordered generator list, with orbits, orders and word factorization
"""
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from src.errors import DimensionMismatchError, NotInGroupError
from src.groups.permutation import Permutation
from src.groups.presentations import Presentation, Word, evaluate_word
from src.groups.schreier_sims import StabilizerChain


@dataclass(frozen=True)
class Orbit:
    """An orbit with a Schreier transversal: transversal[q] maps base to q"""

    base: int
    points: List[int]
    transversal: Dict[int, Permutation]
    words: Dict[int, Word]

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, point: int) -> bool:
        return point in self.transversal


class PermGroup:
    """
    A permutation group with a stable, ordered generator list.

    Args:
        generators: Ordered generators; cohomology unknowns are indexed by position
        degree (int): Number of points (needed when there are no generators)
        name (str): Report label
        factorizer: Callable returning a word in the generators for a group element
        presentation: Presentation whose realization is this generator list
    """

    def __init__(self, generators: Sequence[Permutation], degree: Optional[int] = None,
                 name: str = "", factorizer: Optional[Callable[[Permutation], Word]] = None,
                 presentation: Optional[Presentation] = None):
        gens = tuple(generators)
        if degree is None:
            if not gens:
                raise ValueError("degree is required for a group without generators")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise DimensionMismatchError(f"generator of degree {g.degree} in a group of degree {degree}")
        self.generators = gens
        self.degree = degree
        self.name = name
        self.presentation = presentation
        self._factorizer = factorizer
        self._chain: Optional[StabilizerChain] = None

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def evaluate(self, word: Sequence[int]) -> Permutation:
        return evaluate_word(word, self.generators, self.degree)

    def factor(self, g: Permutation) -> Word:
        """Word in this group's generators for g (requires a registered factorizer)"""
        if self._factorizer is None:
            raise NotInGroupError(f"{self.name or 'group'} has no word factorizer")
        return self._factorizer(g)

    def orbit(self, point: int) -> Orbit:
        """Orbit of a point with a Schreier transversal, in breadth-first order"""
        if not 0 <= point < self.degree:
            raise ValueError(f"point {point} outside 0..{self.degree - 1}")
        identity = self.identity()
        transversal = {point: identity}
        words: Dict[int, Word] = {point: ()}
        points = [point]
        head = 0
        while head < len(points):
            beta = points[head]
            head += 1
            for index, s in enumerate(self.generators):
                image = s(beta)
                if image not in transversal:
                    transversal[image] = transversal[beta] * s
                    words[image] = words[beta] + (index + 1,)
                    points.append(image)
        return Orbit(point, points, transversal, words)

    def orbits(self) -> List[List[int]]:
        """All orbits on points, each listed from its smallest point"""
        remaining = set(range(self.degree))
        result = []
        while remaining:
            start = min(remaining)
            orb = self.orbit(start).points
            remaining.difference_update(orb)
            result.append(orb)
        return result

    def is_transitive(self) -> bool:
        return self.degree == 0 or len(self.orbit(0)) == self.degree

    def stabilizer_chain(self, max_strong_generators: Optional[int] = None) -> StabilizerChain:
        if self._chain is None:
            self._chain = StabilizerChain(self.degree, self.generators, max_strong_generators)
        return self._chain

    def order(self, max_strong_generators: Optional[int] = None) -> int:
        return self.stabilizer_chain(max_strong_generators).order()

    def contains(self, g: Permutation) -> bool:
        return self.stabilizer_chain().contains(g)

    def random_element(self, rng: np.random.Generator, length: Optional[int] = None) -> Permutation:
        """Product of random generators and inverses"""
        if not self.generators:
            return self.identity()
        length = length or 4 * self.degree + 10
        letters = rng.integers(1, self.ngens + 1, size=length) * rng.choice([-1, 1], size=length)
        return self.evaluate(letters.tolist())

    def __repr__(self) -> str:
        return f"PermGroup({self.name or '?'}, degree={self.degree}, ngens={self.ngens})"
