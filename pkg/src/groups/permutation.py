"""
Permutation Module
Immutable permutations of {0..n-1} acting on the right, with 1-based cycle notation I/O
"""
import re
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from src.errors import DimensionMismatchError

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class Permutation:
    """
    A bijection of {0..n-1} stored as its image array.

    Points are acted on from the right: point p goes to p·g = images[p], and the
    product g*h means "first g, then h", so (g*h).images = h.images[g.images].
    """

    __slots__ = ("images", "key", "_hash", "_parity", "_order")

    def __init__(self, images: Sequence[int]):
        arr = np.array(images, dtype=np.int32)
        if arr.ndim != 1:
            raise ValueError("permutation images must be one-dimensional")
        n = arr.shape[0]
        if n and not np.array_equal(np.sort(arr), np.arange(n, dtype=np.int32)):
            raise ValueError(f"not a bijection of 0..{n - 1}: {arr.tolist()}")
        arr.flags.writeable = False
        self.images = arr
        self.key = arr.tobytes()
        self._hash = hash(self.key)
        self._parity = None
        self._order = None

    @classmethod
    def _trusted(cls, arr: np.ndarray) -> "Permutation":
        obj = cls.__new__(cls)
        arr = np.ascontiguousarray(arr, dtype=np.int32)
        arr.flags.writeable = False
        obj.images = arr
        obj.key = arr.tobytes()
        obj._hash = hash(obj.key)
        obj._parity = None
        obj._order = None
        return obj

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._trusted(np.arange(degree, dtype=np.int32))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        """
        Build a permutation from 1-based cycles.

        Args:
            cycles: Iterable of cycles such as [(1, 2), (3, 4)]
            degree (int): Number of points

        Returns:
            Permutation: The product of the (disjoint) cycles
        """
        arr = np.arange(degree, dtype=np.int32)
        seen = set()
        for cycle in cycles:
            pts = [int(c) - 1 for c in cycle]
            for a in pts:
                if a < 0 or a >= degree:
                    raise ValueError(f"point {a + 1} outside 1..{degree}")
                if a in seen:
                    raise ValueError("cycles must be disjoint")
                seen.add(a)
            for i, a in enumerate(pts):
                arr[a] = pts[(i + 1) % len(pts)]
        return cls._trusted(arr)

    @classmethod
    def parse(cls, text: str, degree: int) -> "Permutation":
        """Parse 1-based cycle notation such as "(1 2)(3 4 5)"; "()" is the identity"""
        cycles = []
        for body in _CYCLE_RE.findall(text):
            parts = [p for p in re.split(r"[\s,]+", body.strip()) if p]
            if parts:
                cycles.append([int(p) for p in parts])
        leftover = _CYCLE_RE.sub("", text).strip()
        if leftover:
            raise ValueError(f"unparsable cycle notation: {text!r}")
        return cls.from_cycles(cycles, degree)

    @property
    def degree(self) -> int:
        return int(self.images.shape[0])

    def __call__(self, point: int) -> int:
        return int(self.images[point])

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.images.shape != self.images.shape:
            raise DimensionMismatchError(f"degrees {self.degree} and {other.degree} differ")
        return Permutation._trusted(other.images[self.images])

    def inverse(self) -> "Permutation":
        inv = np.empty_like(self.images)
        inv[self.images] = np.arange(self.degree, dtype=np.int32)
        return Permutation._trusted(inv)

    def __pow__(self, exponent: int) -> "Permutation":
        base = self if exponent >= 0 else self.inverse()
        e = abs(exponent)
        result = Permutation.identity(self.degree)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.key == other.key

    def __hash__(self) -> int:
        return self._hash

    def is_identity(self) -> bool:
        return bool(np.all(self.images == np.arange(self.degree)))

    def cycles(self) -> List[Tuple[int, ...]]:
        """Nontrivial cycles, 0-based, each starting at its smallest point"""
        seen = np.zeros(self.degree, dtype=bool)
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            nxt = int(self.images[start])
            while nxt != start:
                cycle.append(nxt)
                seen[nxt] = True
                nxt = int(self.images[nxt])
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    @property
    def parity(self) -> int:
        """0 for even permutations, 1 for odd ones"""
        if self._parity is None:
            self._parity = sum(len(c) - 1 for c in self.cycles()) % 2
        return self._parity

    @property
    def order(self) -> int:
        if self._order is None:
            result = 1
            for c in self.cycles():
                result = np.lcm(result, len(c))
            self._order = int(result)
        return self._order

    def moved_points(self) -> np.ndarray:
        return np.nonzero(self.images != np.arange(self.degree))[0]

    def to_cycle_string(self) -> str:
        """1-based cycle notation, "()" for the identity"""
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(str(p + 1) for p in c) + ")" for c in cyc)

    def restricted(self, points: Sequence[int]) -> "Permutation":
        """
        Relabel the action on an invariant point list as a permutation of 0..len-1.

        Raises:
            ValueError: If the points are not mapped onto themselves
        """
        pts = np.asarray(points, dtype=np.int32)
        lookup = np.full(self.degree, -1, dtype=np.int32)
        lookup[pts] = np.arange(pts.shape[0], dtype=np.int32)
        image = lookup[self.images[pts]]
        if np.any(image < 0):
            raise ValueError("point set is not invariant")
        return Permutation._trusted(image)

    def extended(self, degree: int, points: Sequence[int] = None) -> "Permutation":
        """Embed into a larger degree, acting on points (default 0..n-1) and fixing the rest"""
        pts = np.arange(self.degree) if points is None else np.asarray(points, dtype=np.int32)
        arr = np.arange(degree, dtype=np.int32)
        arr[pts] = pts[self.images]
        return Permutation._trusted(arr)

    def __repr__(self) -> str:
        return f"Permutation({self.to_cycle_string()}, degree={self.degree})"


def compose_all(perms: Sequence[Permutation], degree: int) -> Permutation:
    """Left-to-right product of a sequence of permutations"""
    result = np.arange(degree, dtype=np.int32)
    for p in perms:
        result = p.images[result]
    return Permutation._trusted(result)
