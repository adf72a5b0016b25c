"""
Hom Module
Spinning, G-cores, fixed points and Hom_G spaces between modules
"""
import logging
from typing import List, Sequence, Tuple

import numpy as np

from src.errors import DimensionMismatchError
from src.linalg.echelon import Echelon, matmul_mod
from src.linalg.subspace import Subspace, inverse, left_nullspace, subspace_intersection
from src.modules.gmodule import GModule, ModuleMap, same_group

logger = logging.getLogger(__name__)


def spin_under(p: int, dim: int, vectors, matrices: Sequence[np.ndarray]) -> Subspace:
    """
    Smallest subspace containing the vectors and closed under right multiplication
    by every matrix.
    """
    ech = Echelon(p, dim)
    vecs = np.asarray(vectors)
    if vecs.size == 0:
        return Subspace.zero(p, dim)
    new = ech.add(vecs.reshape(-1, dim))
    while new.shape[0] and ech.dim < dim:
        images = np.concatenate([matmul_mod(new, a, p) for a in matrices])
        new = ech.add(images)
    return Subspace.from_echelon(ech)


def spin(module: GModule, vectors) -> Subspace:
    """The submodule generated by the given vectors"""
    return spin_under(module.p, module.dim, vectors, module.action)


def g_core(module: GModule, sub: Subspace) -> Subspace:
    """
    Largest G-invariant subspace contained in sub.

    Iterates U <- U ∩ U·g^-1 over the generators until U stops shrinking.
    """
    current = sub
    while current.dim:
        nxt = current
        for a_inv in module.inverse_action:
            moved = Subspace.span(module.p, module.dim, matmul_mod(nxt.basis, a_inv, module.p))
            nxt = subspace_intersection(nxt, moved)
            if nxt.dim == 0:
                break
        if nxt.dim == current.dim:
            return current
        current = nxt
    return current


def fixed_points(module: GModule) -> Subspace:
    """C_V(G): vectors fixed by every generator"""
    if module.ngens == 0:
        return Subspace.full(module.p, module.dim)
    eye = module.identity_matrix().astype(np.int16)
    blocks = [np.mod(a.astype(np.int16) - eye, module.p) for a in module.action]
    return left_nullspace(np.concatenate(blocks, axis=1), module.p)


def module_generators(module: GModule) -> Tuple[List[np.ndarray], np.ndarray, List[Tuple[int, int, int]]]:
    """
    Greedy generators of a module and the spin basis they produce.

    Returns:
        tuple: (seed vectors, spin basis rows, provenance per basis row). Provenance is
        (seed index, -1, -1) for a seed or (-1, parent row, generator index) for
        parent·g.
    """
    p, n = module.p, module.dim
    ech = Echelon(p, n)
    basis: List[np.ndarray] = []
    origin: List[Tuple[int, int, int]] = []
    seeds: List[np.ndarray] = []
    for j in range(n):
        if ech.dim == n:
            break
        e = np.zeros(n, dtype=np.uint8)
        e[j] = 1
        if ech.contains(e):
            continue
        seeds.append(e)
        ech.add(e)
        basis.append(e)
        origin.append((len(seeds) - 1, -1, -1))
        head = len(basis) - 1
        while head < len(basis):
            for gi, a in enumerate(module.action):
                w = matmul_mod(basis[head][None, :], a, p)[0]
                if ech.add(w).shape[0]:
                    basis.append(w)
                    origin.append((-1, head, gi))
            head += 1
    rows = np.array(basis, dtype=np.uint8).reshape(-1, n)
    return seeds, rows, origin


def hom_space(source: GModule, target: GModule) -> List[ModuleMap]:
    """
    Basis of Hom_G(source, target).

    A map is fixed by the images of the source's generators. Each spin basis vector
    b_i = seed·word gets an image W·T_i that is linear in the stacked seed images W;
    the relations b_i·g = Σ c_l b_l force W·(T_i B_g - Σ c_l T_l) = 0.
    """
    if source.p != target.p:
        raise DimensionMismatchError(f"modules over GF({source.p}) and GF({target.p})")
    if not same_group(source, target):
        raise DimensionMismatchError(f"{source.name} and {target.name} are modules for different groups")
    p, n, m = source.p, source.dim, target.dim
    if n == 0 or m == 0:
        return []
    seeds, spin_basis, origin = module_generators(source)
    r = len(seeds)
    transfer = np.zeros((n, r * m, m), dtype=np.uint8)
    for i, (seed, parent, gi) in enumerate(origin):
        if seed >= 0:
            transfer[i, seed * m:(seed + 1) * m, :] = np.eye(m, dtype=np.uint8)
        else:
            transfer[i] = matmul_mod(transfer[parent], target.action[gi], p)
    basis_inverse = inverse(spin_basis, p)
    wide = transfer.astype(np.int64)
    blocks = []
    for a, b in zip(source.action, target.action):
        coeffs = matmul_mod(matmul_mod(spin_basis, a, p), basis_inverse, p).astype(np.int64)
        moved = np.matmul(wide, b.astype(np.int64))
        combined = np.tensordot(coeffs, wide, axes=([1], [0]))
        constraint = np.mod(moved - combined, p).astype(np.uint8)
        blocks.append(constraint.transpose(1, 0, 2).reshape(r * m, n * m))
    solutions = left_nullspace(np.concatenate(blocks, axis=1), p)
    maps = []
    for w in solutions.basis:
        images = np.stack([matmul_mod(w[None, :], transfer[i], p)[0] for i in range(n)])
        maps.append(ModuleMap(source, target, matmul_mod(basis_inverse, images, p)))
    logger.debug("dim Hom(%s, %s) = %d", source.name, target.name, len(maps))
    return maps


def hom_dimension(source: GModule, target: GModule) -> int:
    return len(hom_space(source, target))
