"""
Presentations Module
Registered presentations of A_n (Carmichael) and S_n (Coxeter), words and factorization
"""
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from src.errors import NotInGroupError
from src.groups.permutation import Permutation

# A word is a tuple of nonzero ints: +(i+1) is generator i, -(i+1) its inverse.
Word = Tuple[int, ...]

ALTERNATING = "alternating"
SYMMETRIC = "symmetric"


@dataclass(frozen=True)
class Presentation:
    """
    Generators with relator words and a realization by concrete permutations.

    Attributes:
        name (str): Label used in reports, e.g. "A_7 (Carmichael)"
        kind (str): "alternating" or "symmetric"
        n (int): Degree of the abstract group
        generators (tuple): Realizing permutations, one per generator
        relators (tuple): Relator words
    """

    name: str
    kind: str
    n: int
    generators: Tuple[Permutation, ...]
    relators: Tuple[Word, ...]

    @property
    def generator_count(self) -> int:
        return len(self.generators)

    @property
    def degree(self) -> int:
        return self.generators[0].degree if self.generators else self.n

    def evaluate(self, word: Sequence[int]) -> Permutation:
        return evaluate_word(word, self.generators, self.degree)

    def failing_relators(self) -> List[Word]:
        """Relators that do not evaluate to the identity under the realization"""
        return [r for r in self.relators if not self.evaluate(r).is_identity()]

    def realized_as(self, generators: Sequence[Permutation], name: str) -> "Presentation":
        return Presentation(name, self.kind, self.n, tuple(generators), self.relators)


def evaluate_word(word: Sequence[int], generators: Sequence[Permutation], degree: int) -> Permutation:
    """Left-to-right product of the generators named by a word"""
    result = np.arange(degree, dtype=np.int32)
    inverses = {}
    for letter in word:
        idx = abs(letter) - 1
        if letter > 0:
            perm = generators[idx]
        else:
            if idx not in inverses:
                inverses[idx] = generators[idx].inverse()
            perm = inverses[idx]
        result = perm.images[result]
    return Permutation._trusted(result)


def invert_word(word: Sequence[int]) -> Word:
    return tuple(-letter for letter in reversed(word))


def carmichael_generators(n: int) -> List[Permutation]:
    """t_i = (1, 2, i) for i = 3..n (0-based: 0 -> 1 -> i -> 0)"""
    gens = []
    for i in range(2, n):
        images = np.arange(n, dtype=np.int32)
        images[0], images[1], images[i] = 1, i, 0
        gens.append(Permutation._trusted(images))
    return gens


def carmichael_relators(n: int) -> Tuple[Word, ...]:
    count = n - 2
    rels: List[Word] = [(a, a, a) for a in range(1, count + 1)]
    for a in range(1, count + 1):
        for b in range(a + 1, count + 1):
            rels.append((a, b, a, b))
    return tuple(rels)


def coxeter_generators(n: int) -> List[Permutation]:
    """s_i = (i, i+1), i = 1..n-1"""
    gens = []
    for i in range(n - 1):
        images = np.arange(n, dtype=np.int32)
        images[i], images[i + 1] = i + 1, i
        gens.append(Permutation._trusted(images))
    return gens


def coxeter_relators(n: int) -> Tuple[Word, ...]:
    count = n - 1
    rels: List[Word] = [(a, a) for a in range(1, count + 1)]
    for a in range(1, count):
        rels.append((a, a + 1) * 3)
    for a in range(1, count + 1):
        for b in range(a + 2, count + 1):
            rels.append((a, b, a, b))
    return tuple(rels)


def presentation_of(kind: str, n: int) -> Presentation:
    """
    Registered presentation of A_n or S_n realized on n points.

    Args:
        kind (str): "alternating" (Carmichael generators (1,2,i)) or "symmetric" (Coxeter)
        n (int): Degree

    Returns:
        Presentation: Generators, relators and realization
    """
    if kind == ALTERNATING:
        if n < 3:
            raise ValueError("alternating presentation needs n >= 3")
        return Presentation(f"A_{n} (Carmichael)", kind, n,
                            tuple(carmichael_generators(n)), carmichael_relators(n))
    if kind == SYMMETRIC:
        if n < 2:
            raise ValueError("symmetric presentation needs n >= 2")
        return Presentation(f"S_{n} (Coxeter)", kind, n,
                            tuple(coxeter_generators(n)), coxeter_relators(n))
    raise ValueError(f"unknown group kind {kind!r}")


def factor_carmichael(g: Permutation) -> Word:
    """
    Word in the Carmichael generators of A_n evaluating to g.

    Peels off points n-1, ..., 2 with the transversal words
    m -> 0: t_m, m -> 1: t_m^-1, m -> j: t_m t_j^-1.
    """
    n = g.degree
    if g.parity:
        raise NotInGroupError(f"{g.to_cycle_string()} is odd")
    h = g.images.copy()
    suffix: List[int] = []
    for m in range(n - 1, 1, -1):
        j = int(h[m])
        if j == m:
            continue
        if j == 0:
            u = (m - 1,)
        elif j == 1:
            u = (-(m - 1),)
        else:
            u = (m - 1, -(j - 1))
        # h <- h * u^-1, where u^-1 is applied to images
        h = _apply_inverse_word(h, u)
        suffix[:0] = u
    if not np.array_equal(h, np.arange(n)):
        raise NotInGroupError(f"residual {h.tolist()} after Carmichael sifting")
    return tuple(suffix)


def _apply_inverse_word(images: np.ndarray, word: Sequence[int]) -> np.ndarray:
    """Compose an image array with the inverse of a Carmichael word"""
    for letter in reversed(word):
        i = abs(letter) + 1
        # t_i: 0 -> 1 -> i -> 0; applying t_i^-1 to images when letter > 0
        if letter > 0:
            table = {1: 0, i: 1, 0: i}
        else:
            table = {0: 1, 1: i, i: 0}
        images = np.array([table.get(int(x), int(x)) for x in images], dtype=np.int32)
    return images


def factor_coxeter(g: Permutation) -> Word:
    """Word in adjacent transpositions by insertion sort of the image array"""
    arr = g.images.tolist()
    word: List[int] = []
    for pos in range(1, len(arr)):
        q = pos
        while q > 0 and arr[q - 1] > arr[q]:
            arr[q - 1], arr[q] = arr[q], arr[q - 1]
            word.append(q)
            q -= 1
    return tuple(word)


def factor_word(kind: str, g: Permutation) -> Word:
    """Factor g over the registered generators of the abstract group of its degree"""
    if kind == ALTERNATING:
        return factor_carmichael(g)
    if kind == SYMMETRIC:
        return factor_coxeter(g)
    raise ValueError(f"unknown group kind {kind!r}")


def word_to_string(word: Iterable[int], symbol: str = "x") -> str:
    parts = []
    for letter in word:
        name = f"{symbol}{abs(letter)}"
        parts.append(name if letter > 0 else name + "^-1")
    return "*".join(parts) if parts else "1"
