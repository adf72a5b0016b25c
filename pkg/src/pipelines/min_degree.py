"""
Minimal Degree Module
Brute-force minimal faithful permutation degree of a small group through its subgroup lattice
"""
import json
import logging
from pathlib import Path
from typing import Dict, List, Tuple, Union

import numpy as np
from pydantic import BaseModel, Field

from src.config import MIN_DEGREE_MAX_ORDER
from src.errors import BudgetExhaustedError, HypothesisError
from src.groups.perm_group import PermGroup
from src.groups.permutation import Permutation

logger = logging.getLogger(__name__)


class MinDegreeReport(BaseModel):
    group: str
    order: int
    degree: int
    minimal_normal_order: int
    subgroup_count: int
    minimal_degree: int
    witness_order: int
    witness_generators: List[str] = Field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(self.model_dump(mode="json"), sort_keys=True, indent=2) + "\n"


class ElementTable:
    """
    All elements of a small permutation group with a full multiplication table.

    Subsets of the group are Python ints used as bitmasks over element indices.
    """

    def __init__(self, group: PermGroup):
        identity = group.identity()
        self.elements: List[Permutation] = [identity]
        self.index: Dict[bytes, int] = {identity.key: 0}
        head = 0
        while head < len(self.elements):
            g = self.elements[head]
            head += 1
            for s in group.generators:
                h = g * s
                if h.key not in self.index:
                    self.index[h.key] = len(self.elements)
                    self.elements.append(h)
        images = np.stack([g.images for g in self.elements])
        n = len(self.elements)
        self.table = np.empty((n, n), dtype=np.int32)
        for i, g in enumerate(self.elements):
            # row i holds g * h for every h
            products = images[:, g.images]
            self.table[i] = [self.index[row.tobytes()] for row in products]
        self.inverse = np.argmin(self.table, axis=1).astype(np.int32)

    @property
    def order(self) -> int:
        return len(self.elements)

    def members(self, mask: int) -> List[int]:
        return [i for i in range(self.order) if mask >> i & 1]

    def generate(self, generators) -> int:
        """Bitmask of the subgroup generated by the given element indices"""
        seen = [0]
        mask = 1
        head = 0
        while head < len(seen):
            x = seen[head]
            head += 1
            for s in generators:
                y = int(self.table[x, s])
                if not mask >> y & 1:
                    mask |= 1 << y
                    seen.append(y)
        return mask

    def conjugate(self, mask: int, g: int) -> int:
        g_inv = int(self.inverse[g])
        result = 0
        for h in self.members(mask):
            result |= 1 << int(self.table[self.table[g_inv, h], g])
        return result

    def core(self, mask: int) -> int:
        """Intersection of all conjugates"""
        result = mask
        for g in range(self.order):
            result &= self.conjugate(mask, g)
            if result == 1:
                break
        return result

    def normal_closure(self, g: int) -> int:
        """Subgroup generated by the conjugacy class of g"""
        conjugates = {int(self.table[self.table[self.inverse[x], g], x]) for x in range(self.order)}
        return self.generate(sorted(conjugates))


def unique_minimal_normal(table: ElementTable) -> int:
    """
    The unique minimal normal subgroup, found among normal closures of single elements.

    Raises:
        HypothesisError: When the group is trivial or has several minimal normal subgroups
    """
    closures = {table.normal_closure(g) for g in range(1, table.order)}
    minimal = [n for n in closures if not any(m != n and m & n == m for m in closures)]
    if len(minimal) != 1:
        raise HypothesisError(f"group has {len(minimal)} minimal normal subgroups; "
                              "the corefree-subgroup formula needs exactly one")
    return minimal[0]


def subgroup_lattice(table: ElementTable) -> Dict[int, Tuple[int, ...]]:
    """
    Every subgroup with a generating tuple, by closing the cyclic subgroups under joins
    with cyclic subgroups.
    """
    cyclic: Dict[int, Tuple[int, ...]] = {}
    for g in range(table.order):
        mask = table.generate([g])
        cyclic.setdefault(mask, (g,))
    lattice = dict(cyclic)
    frontier = list(cyclic)
    while frontier:
        fresh = []
        for mask in frontier:
            generators = lattice[mask]
            for c_mask, (c,) in cyclic.items():
                if c_mask & mask == c_mask:
                    continue
                joined = table.generate(generators + (c,))
                if joined not in lattice:
                    lattice[joined] = generators + (c,)
                    fresh.append(joined)
        frontier = fresh
    logger.debug("subgroup lattice: %d subgroups, %d cyclic", len(lattice), len(cyclic))
    return lattice


def analyze_min_degree(group: PermGroup, max_order: int = MIN_DEGREE_MAX_ORDER) -> MinDegreeReport:
    """
    Minimal faithful permutation degree of a group with a unique minimal normal subgroup.

    Under that hypothesis a faithful action of least degree is transitive, so the
    answer is the least index of a subgroup with trivial core.

    Raises:
        BudgetExhaustedError: When the group order exceeds max_order
        HypothesisError: When the minimal normal subgroup is not unique
    """
    order = group.order()
    if order > max_order:
        raise BudgetExhaustedError("min-degree group order", max_order, f"{group.name or 'group'} has order {order}")
    table = ElementTable(group)
    minimal = unique_minimal_normal(table)
    lattice = subgroup_lattice(table)
    for mask in sorted(lattice, key=lambda m: (-bin(m).count("1"), m)):
        if table.core(mask) == 1:
            size = bin(mask).count("1")
            witness = [table.elements[g].to_cycle_string() for g in lattice[mask] if g]
            report = MinDegreeReport(group=group.name, order=order, degree=group.degree,
                                     minimal_normal_order=bin(minimal).count("1"),
                                     subgroup_count=len(lattice), minimal_degree=order // size,
                                     witness_order=size, witness_generators=witness)
            logger.info("Stage min-degree %s: order %d, %d subgroups, P = %d", group.name, order,
                        len(lattice), report.minimal_degree)
            return report
    raise AssertionError("the trivial subgroup is always corefree")


def min_faithful_degree(group: PermGroup, max_order: int = MIN_DEGREE_MAX_ORDER) -> int:
    return analyze_min_degree(group, max_order).minimal_degree


def parse_group_file(source: Union[str, Path], name: str = "") -> PermGroup:
    """
    Read a group from text: a degree line, then one generator per line in 1-based cycle
    notation. Blank lines and lines starting with '#' are skipped.

    Args:
        source: A path, or the file contents themselves
    """
    if isinstance(source, Path) or (isinstance(source, str) and "\n" not in source and Path(source).is_file()):
        path = Path(source)
        text = path.read_text()
        name = name or path.stem
    else:
        text = str(source)
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line and not line.startswith("#")]
    if not lines:
        raise ValueError("group file is empty")
    try:
        degree = int(lines[0])
    except ValueError:
        raise ValueError(f"first line must be the degree, got {lines[0]!r}") from None
    generators = [Permutation.parse(line, degree) for line in lines[1:]]
    return PermGroup(generators, degree=degree, name=name or f"group of degree {degree}")


def special_linear_group(q: int) -> PermGroup:
    """SL(2, q) for a prime q, acting on the q^2 - 1 nonzero row vectors of GF(q)^2"""
    if q < 2 or any(q % d == 0 for d in range(2, int(q ** 0.5) + 1)):
        raise ValueError(f"special_linear_group needs a prime q, got {q}")
    vectors = [(a, b) for a in range(q) for b in range(q) if (a, b) != (0, 0)]
    position = {v: i for i, v in enumerate(vectors)}

    def on_vectors(matrix) -> Permutation:
        (a, b), (c, d) = matrix
        return Permutation([position[((x * a + y * c) % q, (x * b + y * d) % q)] for x, y in vectors])

    generators = [on_vectors(((1, 1), (0, 1))), on_vectors(((1, 0), (1, 1)))]
    return PermGroup(generators, degree=len(vectors), name=f"SL(2,{q})")
