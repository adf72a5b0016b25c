"""
Coset Action Module
The action of H on the right cosets of E0 with points (coset label, fiber value)
"""
import logging
from typing import Callable, Dict, Hashable, List, Optional, Sequence, Tuple

import numpy as np

from src.errors import CosetDecompositionError, MathematicalCheckFailed, NotInGroupError
from src.extensions.ext_group import ExtElement, ExtGroup
from src.extensions.splitting import SubgroupSection
from src.groups.pairs import ordered_pair_coset_reps, pair_coset_reps, pair_label, pair_of
from src.groups.perm_group import PermGroup
from src.groups.permutation import Permutation
from src.linalg.echelon import matmul_mod

logger = logging.getLogger(__name__)

Label = Hashable


def unordered_label(g: Permutation) -> Tuple[int, int]:
    return pair_of(g)


def ordered_label(g: Permutation) -> Tuple[int, int]:
    return g(0), g(1)


class PointedCosetSpace:
    """
    Right cosets of E0 in H, where E0 = {(m, y) : y in K, phi(m) = beta(y)}.

    Point index = coset_index·p + b stands for E0·T with T = (b·z·r_c, r_c), where r_c is
    the representative of the K-coset labelled c. For x = (m, g) with g in K·r_c, the
    fiber value is b = phi(m') - beta(y) where x·(0, r_c)^-1 = (m', y).

    Args:
        section (SubgroupSection): The section defining E0
        representatives: Label -> r_c for the cosets of K in G
        label: g -> label of the coset K·g
        ordered (bool): Whether labels are ordered pairs
    """

    def __init__(self, section: SubgroupSection, representatives: Dict[Label, Permutation],
                 label: Callable[[Permutation], Label], ordered: bool = False):
        self.section = section
        self.ordered = ordered
        self.group: ExtGroup = section.group
        self.p = self.group.p
        self.labels: List[Label] = sorted(representatives)
        self.representatives = representatives
        self.label = label
        self._coset_index = {c: i for i, c in enumerate(self.labels)}
        module = self.group.module
        self._rep_inverse_lifts = {c: self.group.inverse(self.group.lift(r)) for c, r in representatives.items()}
        # w_c = A_{r_c}^-1 phi: fiber shift of (v, 1) at coset c is v·w_c
        functional = section.functional[:, None]
        self._fiber_shift = np.stack([matmul_mod(module.matrix_of(representatives[c].inverse()), functional,
                                                 self.p)[:, 0] for c in self.labels], axis=1)

    @property
    def degree(self) -> int:
        return len(self.labels) * self.p

    @property
    def fiber_shift(self) -> np.ndarray:
        """dim M x (number of cosets) matrix of the vectors w_c"""
        return self._fiber_shift

    def point_label(self, point: int) -> str:
        c, b = divmod(point, self.p)
        label = self.labels[c]
        text = f"({label[0] + 1},{label[1] + 1})" if self.ordered else pair_label(label)
        return f"{text}:{b}"

    def transversal(self, point: int) -> ExtElement:
        c, b = divmod(point, self.p)
        r = self.representatives[self.labels[c]]
        m = self.group.module.act(b * self.section.unit.astype(np.int64), r)
        return self.group.element(m, r)

    def point_of(self, x: ExtElement) -> int:
        """
        The point E0·x.

        Raises:
            CosetDecompositionError: When x·(0, r_c)^-1 does not lie over K
        """
        c = self.label(x.g)
        if c not in self._coset_index:
            raise CosetDecompositionError(f"no representative for label {c}")
        q = self.group.multiply(x, self._rep_inverse_lifts[c])
        try:
            beta = self.section.beta(q.g)
        except NotInGroupError as exc:
            raise CosetDecompositionError(f"{q.g.to_cycle_string()} is not in {self.section.subgroup.name}") from exc
        b = (self.section.phi(q.m) - beta) % self.p
        return self._coset_index[c] * self.p + b

    def image(self, h: ExtElement) -> Permutation:
        """Permutation of the points induced by right multiplication by h"""
        if h.g.is_identity():
            return self.translation(h.m)
        images = [self.point_of(self.group.multiply(self.transversal(pt), h)) for pt in range(self.degree)]
        return Permutation(images)

    def translation(self, v: np.ndarray) -> Permutation:
        """Image of (v, 1): b -> b + v·w_c on each coset c"""
        shifts = matmul_mod(np.asarray(v)[None, :], self._fiber_shift, self.p)[0].astype(np.int64)
        points = np.arange(self.degree)
        c, b = np.divmod(points, self.p)
        return Permutation((c * self.p + (b + shifts[c]) % self.p).tolist())

    def generator_images(self) -> List[Permutation]:
        """Images of H's generators: lifts of G's generators, then M's basis"""
        return [self.image(h) for h in self.group.generators]

    def check_transversal(self, samples: Optional[Sequence[int]] = None) -> None:
        """Each transversal element must lie in its own point"""
        for pt in samples if samples is not None else range(self.degree):
            if self.point_of(self.transversal(pt)) != pt:
                raise MathematicalCheckFailed("coset action", f"transversal element of point {pt} is misplaced")


def coset_action(section: SubgroupSection, ordered: bool) -> Tuple[PointedCosetSpace, PermGroup]:
    """
    Action of H on the cosets of E0 (K = Y, unordered pairs) or L0 (K = X, ordered pairs).

    Returns:
        tuple: (PointedCosetSpace, PermGroup of the generator images)
    """
    k = section.group.base.degree
    if ordered:
        space = PointedCosetSpace(section, ordered_pair_coset_reps(k), ordered_label, ordered=True)
    else:
        space = PointedCosetSpace(section, pair_coset_reps(k), unordered_label)
    space.check_transversal()
    images = space.generator_images()
    image_group = PermGroup(images, degree=space.degree, name=f"image of {section.group.name}")
    logger.info("Stage coset_action: degree %d, %d generator images", space.degree, len(images))
    return space, image_group
