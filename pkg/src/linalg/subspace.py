"""
Subspace Module
Canonical subspaces, quotients with a fixed section, and solving linear systems over GF(p)
"""
from typing import Iterable, List, Optional, Sequence

import numpy as np

from src.errors import DimensionMismatchError
from src.linalg.echelon import Echelon, matmul_mod, rref


def as_vector(values: Iterable[int], p: int) -> np.ndarray:
    return np.mod(np.asarray(list(values) if not isinstance(values, np.ndarray) else values,
                             dtype=np.int64), p).astype(np.uint8)


class Subspace:
    """
    A subspace of GF(p)^n held by its reduced row echelon basis.

    Two subspaces are equal exactly when their echelon bases are equal.
    """

    __slots__ = ("p", "ambient", "basis", "pivots", "_key")

    def __init__(self, p: int, ambient: int, basis: np.ndarray, pivots: Sequence[int]):
        basis = np.ascontiguousarray(np.asarray(basis, dtype=np.uint8).reshape(-1, ambient))
        basis.flags.writeable = False
        self.p = p
        self.ambient = ambient
        self.basis = basis
        self.pivots = tuple(int(c) for c in pivots)
        self._key = (p, ambient, basis.tobytes())

    @classmethod
    def span(cls, p: int, ambient: int, vectors) -> "Subspace":
        ech = Echelon(p, ambient)
        vecs = np.asarray(vectors)
        if vecs.size:
            ech.add(vecs.reshape(-1, ambient))
        return cls.from_echelon(ech)

    @classmethod
    def from_echelon(cls, ech: Echelon) -> "Subspace":
        return cls(ech.p, ech.ncols, ech.rows, ech.pivots.tolist())

    @classmethod
    def zero(cls, p: int, ambient: int) -> "Subspace":
        return cls(p, ambient, np.zeros((0, ambient), dtype=np.uint8), [])

    @classmethod
    def full(cls, p: int, ambient: int) -> "Subspace":
        return cls(p, ambient, np.eye(ambient, dtype=np.uint8), range(ambient))

    @property
    def dim(self) -> int:
        return int(self.basis.shape[0])

    @property
    def codim(self) -> int:
        return self.ambient - self.dim

    def echelon(self) -> Echelon:
        ech = Echelon(self.p, self.ambient)
        ech.rows = np.array(self.basis)
        ech.pivots = np.asarray(self.pivots, dtype=np.intp)
        return ech

    def reduce(self, vectors) -> np.ndarray:
        return self.echelon().reduce(vectors)

    def contains(self, vectors) -> bool:
        """True when every given vector lies in the subspace"""
        return not np.any(self.reduce(vectors))

    def contains_subspace(self, other: "Subspace") -> bool:
        _check_same(self, other)
        return other.dim == 0 or self.contains(other.basis)

    def coordinates(self, vectors) -> np.ndarray:
        """Coefficients with respect to the echelon basis (the pivot entries)"""
        return self.echelon().coordinates(vectors)

    def __eq__(self, other) -> bool:
        return isinstance(other, Subspace) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient}, p={self.p})"


def _check_same(u: Subspace, w: Subspace) -> None:
    if u.p != w.p or u.ambient != w.ambient:
        raise DimensionMismatchError(f"GF({u.p})^{u.ambient} vs GF({w.p})^{w.ambient}")


def rank(matrix: np.ndarray, p: int) -> int:
    return len(rref(matrix, p)[1])


def nullspace(matrix: np.ndarray, p: int) -> Subspace:
    """
    Solution space of A x = 0 (x a column vector).

    Args:
        matrix (np.ndarray): rows x cols coefficient matrix
        p (int): Prime

    Returns:
        Subspace: Subspace of GF(p)^cols
    """
    matrix = np.atleast_2d(np.asarray(matrix))
    cols = matrix.shape[1]
    ech = Echelon(p, cols)
    if matrix.shape[0]:
        ech.add(matrix)
    pivots = ech.pivots.tolist()
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = np.zeros((len(free), cols), dtype=np.int16)
    for i, f in enumerate(free):
        basis[i, f] = 1
        if pivots:
            basis[i, pivots] = -ech.rows[:, f].astype(np.int16)
    return Subspace.span(p, cols, np.mod(basis, p))


def left_nullspace(matrix: np.ndarray, p: int) -> Subspace:
    """Row vectors v with v A = 0"""
    return nullspace(np.asarray(matrix).T, p)


def solve(matrix: np.ndarray, rhs: np.ndarray, p: int) -> Optional[np.ndarray]:
    """
    One solution of A x = b, or None when the system is inconsistent.

    Raises:
        DimensionMismatchError: If b does not have one entry per row of A
    """
    matrix = np.atleast_2d(np.asarray(matrix))
    rhs = np.asarray(rhs).reshape(-1)
    if rhs.shape[0] != matrix.shape[0]:
        raise DimensionMismatchError(f"{matrix.shape[0]} equations but {rhs.shape[0]} right-hand sides")
    cols = matrix.shape[1]
    augmented = np.concatenate([np.mod(matrix, p), np.mod(rhs, p)[:, None]], axis=1).astype(np.uint8)
    ech = Echelon(p, cols + 1)
    if augmented.shape[0]:
        ech.add(augmented)
    pivots = ech.pivots.tolist()
    if pivots and pivots[-1] == cols:
        return None
    x = np.zeros(cols, dtype=np.uint8)
    for row, c in zip(ech.rows, pivots):
        x[c] = row[cols]
    return x


def inverse(matrix: np.ndarray, p: int) -> np.ndarray:
    """Inverse of a square matrix over GF(p)"""
    matrix = np.asarray(matrix)
    n = matrix.shape[0]
    if matrix.shape != (n, n):
        raise DimensionMismatchError(f"cannot invert a {matrix.shape} matrix")
    augmented = np.concatenate([np.mod(matrix, p).astype(np.uint8), np.eye(n, dtype=np.uint8)], axis=1)
    reduced, pivots = rref(augmented, p)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return np.ascontiguousarray(reduced[:n, n:])


def subspace_sum(u: Subspace, w: Subspace) -> Subspace:
    _check_same(u, w)
    ech = u.echelon()
    if w.dim:
        ech.add(w.basis)
    return Subspace.from_echelon(ech)


def subspace_intersection(u: Subspace, w: Subspace) -> Subspace:
    """Intersection via the relations a·U = b·W between the two bases"""
    _check_same(u, w)
    if u.dim == 0 or w.dim == 0:
        return Subspace.zero(u.p, u.ambient)
    stacked = np.concatenate([u.basis, w.basis])
    relations = left_nullspace(stacked, u.p)
    if relations.dim == 0:
        return Subspace.zero(u.p, u.ambient)
    vectors = matmul_mod(relations.basis[:, :u.dim], u.basis, u.p)
    return Subspace.span(u.p, u.ambient, vectors)


def dot(u: np.ndarray, v: np.ndarray, p: int) -> int:
    """Standard inner product"""
    u = np.asarray(u)
    v = np.asarray(v)
    if u.shape != v.shape:
        raise DimensionMismatchError(f"vectors of shapes {u.shape} and {v.shape}")
    return int(np.dot(u.astype(np.int64), v.astype(np.int64)) % p)


def orthogonal_complement(u: Subspace) -> Subspace:
    """U^perp for the standard form"""
    if u.dim == 0:
        return Subspace.full(u.p, u.ambient)
    return nullspace(u.basis, u.p)


def annihilator(u: Subspace) -> Subspace:
    """Alias used when U lives in a dual space: vectors killed by every functional in U"""
    return orthogonal_complement(u)


class Quotient:
    """
    The quotient GF(p)^n / U with the section fixed at the non-pivot coordinates.

    project(v) reduces v by U and reads the non-pivot entries; lift(q) places q at the
    non-pivot coordinates, so project(lift(q)) = q and ker(project) = U.
    """

    def __init__(self, sub: Subspace):
        self.sub = sub
        self.p = sub.p
        self.ambient = sub.ambient
        pivots = set(sub.pivots)
        self.free = [c for c in range(sub.ambient) if c not in pivots]
        n = sub.ambient
        reduction = np.eye(n, dtype=np.int16)
        for i, c in enumerate(sub.pivots):
            reduction[c, :] -= sub.basis[i].astype(np.int16)
        reduction = np.mod(reduction, self.p).astype(np.uint8)
        self.projection = np.ascontiguousarray(reduction[:, self.free])
        section = np.zeros((len(self.free), n), dtype=np.uint8)
        section[np.arange(len(self.free)), self.free] = 1
        self.section = section

    @property
    def dim(self) -> int:
        return len(self.free)

    def project(self, vectors) -> np.ndarray:
        vecs = np.asarray(vectors)
        return matmul_mod(vecs, self.projection, self.p)

    def lift(self, vectors) -> np.ndarray:
        vecs = np.asarray(vectors)
        return matmul_mod(vecs, self.section, self.p)

    def induced_matrix(self, matrix: np.ndarray) -> np.ndarray:
        """Action of an ambient matrix preserving U on the quotient: section·A·projection"""
        return matmul_mod(matmul_mod(self.section, matrix, self.p), self.projection, self.p)


def quotient_with_section(ambient_dim: int, sub: Subspace) -> Quotient:
    if sub.ambient != ambient_dim:
        raise DimensionMismatchError(f"subspace of GF(p)^{sub.ambient} in ambient {ambient_dim}")
    return Quotient(sub)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.uint8)


def stack(vectors: List[np.ndarray], ncols: int) -> np.ndarray:
    if not vectors:
        return np.zeros((0, ncols), dtype=np.uint8)
    return np.vstack([np.asarray(v, dtype=np.uint8).reshape(-1, ncols) for v in vectors])
