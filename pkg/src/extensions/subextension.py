"""
Subextension Module
Restriction of an extension over A_j to the preimage J of A_k and its action on the large J-orbit
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from src.cohomology.cocycle import Cocycle2
from src.cohomology.fox import complement_system, relator_tails
from src.errors import MathematicalCheckFailed
from src.extensions.certificates import (FaithfulRecord, NonsplitRecord, faithfulness_certificate,
                                         kernel_on_m, nonsplit_certificate)
from src.extensions.coset_action import PointedCosetSpace
from src.extensions.ext_group import ExtGroup
from src.groups.named_groups import alternating_subgroup
from src.groups.perm_group import PermGroup
from src.groups.permutation import Permutation
from src.linalg.echelon import matmul_mod
from src.linalg.subspace import Subspace, left_nullspace
from src.modules.hom import spin

logger = logging.getLogger(__name__)


@dataclass
class OrbitKernel:
    size: int
    kernel_dim: int


@dataclass
class SubextensionReport:
    """J = preimage of A_k acting on its orbit of size 2k(k-1)"""

    k: int
    j: int
    orbits: List[OrbitKernel]
    degree: int
    image: PermGroup
    extension: ExtGroup
    kernel_dim: int
    tails_consistent: bool
    nonsplit: NonsplitRecord
    faithful: FaithfulRecord
    stabilizer_m: Subspace
    fallback_used: bool = False
    twisted_dim: Optional[int] = None
    orbit_points: List[int] = field(default_factory=list)

    @property
    def generator_images(self) -> List[Permutation]:
        return list(self.image.generators)


def _restrict_to_points(perm: Permutation, points: List[int]) -> Permutation:
    position = {pt: i for i, pt in enumerate(points)}
    return Permutation([position[perm(pt)] for pt in points])


def orbit_image(space: PointedCosetSpace, images: List[Permutation], k: int, points: List[int],
                translations: np.ndarray) -> PermGroup:
    """
    Group on the orbit generated by the lifts of A_k's generators and the translations
    by the rows of `translations` (vectors of M).
    """
    restricted = [_restrict_to_points(g, points) for g in images[:k - 2]]
    restricted.extend(_restrict_to_points(space.translation(row), points) for row in translations)
    return PermGroup(restricted, degree=len(points), name=f"J on {len(points)} points")


def _twisted_cocycle(extension: ExtGroup, subgroup: PermGroup, n_sub) -> Tuple[Cocycle2, object]:
    """
    delta + ∂c for c(g) = M-part of the word in the lifts (0, g_a) evaluating to g, with
    values in the submodule N spanned by the relator tails.
    """
    module = extension.module
    n_module = module.submodule(n_sub, name="N")
    lifts = [extension.lift(g) for g in subgroup.generators]
    pivots = list(n_sub.pivots)
    p = module.p
    cache = {}

    def section(g: Permutation) -> np.ndarray:
        if g.key not in cache:
            cache[g.key] = extension.evaluate_word(subgroup.factor(g), lifts).m.astype(np.int64)
        return cache[g.key]

    def evaluate(g: Permutation, h: Permutation) -> np.ndarray:
        value = extension.delta(g, h).astype(np.int64) + module.act(section(g), h) + section(h) - section(g * h)
        value = np.mod(value, p)
        if not n_sub.contains(value):
            raise MathematicalCheckFailed("twisting fallback", "twisted cocycle leaves N")
        return value[pivots]

    return Cocycle2(subgroup, n_module, evaluate, extension.delta.kind, "delta+dc"), n_module


def restrict_to_subextension(group: ExtGroup, space: PointedCosetSpace, images: List[Permutation], k: int,
                             rng: Optional[np.random.Generator] = None) -> SubextensionReport:
    """
    Restrict H over A_j to J with J/M = A_k (A_k fixing the last j-k points).

    Args:
        group (ExtGroup): H over A_j
        space (PointedCosetSpace): The degree-2j(j-1) coset space of H
        images: Images of H's generators on that space
        k (int): Target degree, j-3 <= k <= j

    Raises:
        MathematicalCheckFailed: When J has no orbit of size 2k(k-1)
    """
    rng = rng or np.random.default_rng(0)
    j = group.base.degree
    if not 0 <= j - k <= 3:
        raise ValueError(f"restriction from A_{j} needs {j} - 3 <= k <= {j}, got k = {k}")
    p = group.p
    n_base = group.base.ngens
    involution = Permutation.from_cycles([(1, 2), (3, 4)], j) if p == 2 else None
    if k == j:
        return _unchanged(group, space, images, rng, involution)
    subgroup = alternating_subgroup(k, j)
    j_images = list(images[:k - 2]) + list(images[n_base:])
    j_group = PermGroup(j_images, degree=space.degree, name=f"J<{group.name}")
    orbits = j_group.orbits()
    orbit_kernels = []
    for orbit in orbits:
        cosets = sorted({pt // p for pt in orbit})
        orbit_kernels.append(OrbitKernel(len(orbit), kernel_on_m(space.fiber_shift[:, cosets], p).dim))
    target = 2 * k * (k - 1)
    large = [orbit for orbit in orbits if len(orbit) == target]
    if not large:
        raise MathematicalCheckFailed("restriction", f"J has no orbit of size {target}",
                                      {"orbit_sizes": sorted(len(o) for o in orbits)})
    points = sorted(large[0])
    cosets = sorted({pt // p for pt in points})
    logger.info("Stage restriction A_%d < A_%d: orbit sizes %s", k, j, sorted(o.size for o in orbit_kernels))

    module_k = group.module.restrict(subgroup, name=f"M|A_{k}")
    kernel = kernel_on_m(space.fiber_shift[:, cosets], p)
    quotient_module, quo = module_k.quotient(kernel, name=f"M'(k={k})")
    delta = group.delta.restricted(subgroup, module_k).mapped(quo.projection, quotient_module, "delta'")
    extension = ExtGroup(delta, name=f"M'.A_{k}")

    tails = relator_tails(subgroup, group.delta.restricted(subgroup, module_k))
    consistent = True
    for relator, tail in zip(subgroup.presentation.relators, tails):
        product = Permutation.identity(space.degree)
        for letter in relator:
            factor = images[abs(letter) - 1]
            product = product * (factor if letter > 0 else factor.inverse())
        translation = space.translation(tail)
        if any(product(pt) != translation(pt) for pt in points):
            consistent = False
    if not consistent:
        raise MathematicalCheckFailed("restriction", "relator tails disagree with the permutation images")

    image = orbit_image(space, images, k, points, quo.section)

    nonsplit = nonsplit_certificate(extension, rng, involution)
    fallback_used = False
    twisted_dim = None
    if nonsplit.feasible:
        projected_tails = quo.project(np.array(tails))
        n_sub = spin(quotient_module, projected_tails)
        fallback_used = True
        twisted_dim = n_sub.dim
        logger.warning("Image splits over M'; retrying inside N = spin(tails), dim %d", n_sub.dim)
        if n_sub.dim:
            twisted, n_module = _twisted_cocycle(extension, subgroup, n_sub)
            system = complement_system(subgroup, n_module, relator_tails(subgroup, twisted))
            extension = ExtGroup(twisted, name=f"N.A_{k}")
            nonsplit = nonsplit_certificate(extension, rng, involution, system=system)

    shifts = matmul_mod(quo.section, space.fiber_shift[:, cosets[:1]], p)
    if fallback_used and twisted_dim:
        # the image becomes <lifts, N>; N's basis lives in M' coordinates
        image = orbit_image(space, images, k, points, matmul_mod(n_sub.basis, quo.section, p))
        shifts = matmul_mod(n_sub.basis, shifts, p)
    stabilizer = left_nullspace(shifts, p)
    faithful = faithfulness_certificate(extension, stabilizer, image, nonsplit)
    report = SubextensionReport(k, j, orbit_kernels, len(points), image, extension, kernel.dim, consistent,
                                nonsplit, faithful, stabilizer, fallback_used, twisted_dim, points)
    logger.info("Stage restriction: degree %d, kernel on M dim %d, nonsplit %s", report.degree, kernel.dim,
                nonsplit.nonsplit)
    return report


def _unchanged(group: ExtGroup, space: PointedCosetSpace, images: List[Permutation],
               rng: np.random.Generator, involution: Optional[Permutation]) -> SubextensionReport:
    """k = j: J is H itself acting on the whole space"""
    p = group.p
    image = PermGroup(images, degree=space.degree, name=f"image of {group.name}")
    kernel = kernel_on_m(space.fiber_shift, p)
    stabilizer = left_nullspace(space.fiber_shift[:, :1], p)
    nonsplit = nonsplit_certificate(group, rng, involution)
    faithful = faithfulness_certificate(group, stabilizer, image, nonsplit)
    j = group.base.degree
    return SubextensionReport(j, j, [OrbitKernel(space.degree, kernel.dim)], space.degree, image, group,
                              kernel.dim, True, nonsplit, faithful, stabilizer,
                              orbit_points=list(range(space.degree)))
