"""
Schreier-Sims Module
Deterministic incremental stabilizer chain with a strong-generator budget
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Set, Tuple

from src.config import active_budgets
from src.errors import BudgetExhaustedError
from src.groups.permutation import Permutation

logger = logging.getLogger(__name__)


@dataclass
class _Level:
    point: int
    generators: List[Permutation] = field(default_factory=list)
    transversal: Dict[int, Permutation] = field(default_factory=dict)
    inverses: Dict[int, Permutation] = field(default_factory=dict)
    orbit: List[int] = field(default_factory=list)
    checked: Set[Tuple[int, int]] = field(default_factory=set)


class StabilizerChain:
    """
    Base and strong generating set of a permutation group.

    Transversals only ever grow, so Schreier generators verified at a level stay
    verified when deeper levels gain generators.
    """

    def __init__(self, degree: int, generators: Sequence[Permutation],
                 max_strong_generators: Optional[int] = None):
        self.degree = degree
        self.max_strong_generators = max_strong_generators or active_budgets().schreier_sims_generators
        self.levels: List[_Level] = []
        self.strong: List[Permutation] = []
        self._build([g for g in generators if not g.is_identity()])

    @property
    def base(self) -> List[int]:
        return [level.point for level in self.levels]

    def order(self) -> int:
        result = 1
        for level in self.levels:
            result *= len(level.orbit)
        return result

    def sift(self, g: Permutation, start: int = 0) -> Tuple[Permutation, int]:
        """Strip g through the chain; returns the residue and the level where it stopped"""
        h = g
        for index in range(start, len(self.levels)):
            level = self.levels[index]
            beta = h(level.point)
            if beta not in level.transversal:
                return h, index
            if beta != level.point:
                h = h * level.inverses[beta]
        return h, len(self.levels)

    def contains(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            return False
        residue, depth = self.sift(g)
        return depth == len(self.levels) and residue.is_identity()

    def _new_level(self, point: int) -> _Level:
        identity = Permutation.identity(self.degree)
        level = _Level(point=point)
        level.transversal[point] = identity
        level.inverses[point] = identity
        level.orbit.append(point)
        self.levels.append(level)
        return level

    def _add_generator(self, level: _Level, g: Permutation) -> None:
        level.generators.append(g)
        # extend the orbit breadth first; existing transversal entries are kept
        queue = list(level.orbit)
        head = 0
        while head < len(queue):
            beta = queue[head]
            head += 1
            for s in level.generators:
                image = s(beta)
                if image not in level.transversal:
                    u = level.transversal[beta] * s
                    level.transversal[image] = u
                    level.inverses[image] = u.inverse()
                    level.orbit.append(image)
                    queue.append(image)

    def _register_strong(self, g: Permutation) -> None:
        self.strong.append(g)
        if len(self.strong) > self.max_strong_generators:
            raise BudgetExhaustedError("schreier-sims strong generators", self.max_strong_generators,
                                       f"degree {self.degree}")

    def _build(self, generators: List[Permutation]) -> None:
        for g in generators:
            if all(g(b) == b for b in self.base):
                self._new_level(int(g.moved_points()[0]))
        for g in generators:
            self._register_strong(g)
            for level in self.levels:
                self._add_generator(level, g)
                if g(level.point) != level.point:
                    break

        i = len(self.levels) - 1
        while i >= 0:
            found = self._check_level(i)
            if found is None:
                i -= 1
                continue
            h, depth = found
            if depth == len(self.levels):
                self._new_level(int(h.moved_points()[0]))
            self._register_strong(h)
            for index in range(i + 1, depth + 1):
                self._add_generator(self.levels[index], h)
            logger.debug("Schreier-Sims: new strong generator at level %d (base length %d)",
                         depth, len(self.levels))
            i = depth

    def _check_level(self, i: int):
        level = self.levels[i]
        position = 0
        while position < len(level.orbit):
            beta = level.orbit[position]
            position += 1
            for index, s in enumerate(level.generators):
                if (beta, index) in level.checked:
                    continue
                image = s(beta)
                schreier = level.transversal[beta] * s * level.inverses[image]
                if not schreier.is_identity():
                    residue, depth = self.sift(schreier, i + 1)
                    if depth < len(self.levels) or not residue.is_identity():
                        return residue, depth
                level.checked.add((beta, index))
        return None
