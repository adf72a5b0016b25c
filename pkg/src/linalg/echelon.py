"""
Echelon Module
Row reduction over GF(p): word-packed XOR elimination for p = 2, byte rows for odd p
"""
from typing import List, Tuple

import numpy as np

from src.config import ELIMINATION_BLOCK_ROWS, active_budgets
from src.errors import BudgetExhaustedError, DimensionMismatchError

_FLOAT_EXACT = 2 ** 52


def matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """
    Matrix product reduced mod p, returned as uint8.

    Uses float64 BLAS while every partial sum stays exactly representable.
    """
    a = np.asarray(a)
    b = np.asarray(b)
    inner = a.shape[-1]
    if a.shape[-1] != b.shape[0]:
        raise DimensionMismatchError(f"cannot multiply {a.shape} by {b.shape}")
    if inner * (p - 1) ** 2 < _FLOAT_EXACT:
        prod = np.rint(a.astype(np.float64) @ b.astype(np.float64))
        return np.mod(prod, p).astype(np.uint8)
    return np.mod(a.astype(np.int64) @ b.astype(np.int64), p).astype(np.uint8)


def inverse_table(p: int) -> np.ndarray:
    table = np.zeros(p, dtype=np.int16)
    for x in range(1, p):
        table[x] = pow(x, p - 2, p)
    return table


def _rref_gf2(matrix: np.ndarray) -> Tuple[np.ndarray, List[int]]:
    rows, cols = matrix.shape
    words = (cols + 63) // 64
    padded = np.zeros((rows, words * 64), dtype=np.uint8)
    padded[:, :cols] = matrix & 1
    packed = np.packbits(padded, axis=1, bitorder="little").view("<u8").copy()
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        w, b = divmod(c, 64)
        column = (packed[:, w] >> np.uint64(b)) & np.uint64(1)
        candidates = np.nonzero(column[r:])[0]
        if candidates.size == 0:
            continue
        i = r + int(candidates[0])
        if i != r:
            packed[[r, i]] = packed[[i, r]]
            column[[r, i]] = column[[i, r]]
        column[r] = 0
        targets = np.nonzero(column)[0]
        if targets.size:
            packed[targets] ^= packed[r]
        pivots.append(c)
        r += 1
    reduced = np.unpackbits(packed[:r].view(np.uint8), axis=1, bitorder="little")[:, :cols]
    return np.ascontiguousarray(reduced, dtype=np.uint8), pivots


def _rref_gfp(matrix: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    work = np.mod(matrix.astype(np.int16), p)
    rows, cols = work.shape
    inv = inverse_table(p)
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        candidates = np.nonzero(work[r:, c])[0]
        if candidates.size == 0:
            continue
        i = r + int(candidates[0])
        if i != r:
            work[[r, i]] = work[[i, r]]
        work[r] = np.mod(work[r] * inv[work[r, c]], p)
        column = work[:, c].copy()
        column[r] = 0
        targets = np.nonzero(column)[0]
        if targets.size:
            work[targets] = np.mod(work[targets] - np.outer(column[targets], work[r]), p)
        pivots.append(c)
        r += 1
    return work[:r].astype(np.uint8), pivots


def rref(matrix: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """
    Reduced row echelon form of a matrix over GF(p).

    Args:
        matrix (np.ndarray): 2-D array of residues
        p (int): Prime

    Returns:
        tuple: (nonzero RREF rows as uint8, list of pivot columns)
    """
    matrix = np.atleast_2d(np.asarray(matrix))
    limit = active_budgets().elimination_entries
    if matrix.size > limit:
        raise BudgetExhaustedError("elimination entries", limit, f"shape {matrix.shape}")
    if matrix.shape[0] == 0:
        return np.zeros((0, matrix.shape[1]), dtype=np.uint8), []
    if p == 2:
        return _rref_gf2(np.mod(matrix, 2).astype(np.uint8))
    return _rref_gfp(matrix, p)


class Echelon:
    """
    Incrementally maintained reduced row echelon basis of a row space.

    New rows are reduced against the current basis with one matrix product per block,
    eliminated among themselves, and then cleared out of the old rows.
    """

    def __init__(self, p: int, ncols: int):
        self.p = p
        self.ncols = ncols
        self.rows = np.zeros((0, ncols), dtype=np.uint8)
        self.pivots = np.zeros(0, dtype=np.intp)

    @property
    def dim(self) -> int:
        return int(self.rows.shape[0])

    def copy(self) -> "Echelon":
        other = Echelon(self.p, self.ncols)
        other.rows = self.rows.copy()
        other.pivots = self.pivots.copy()
        return other

    def reduce(self, vectors: np.ndarray) -> np.ndarray:
        """Residues of vectors modulo the current row space (zero iff contained)"""
        vecs = np.atleast_2d(np.asarray(vectors))
        if vecs.shape[1] != self.ncols:
            raise DimensionMismatchError(f"vectors of length {vecs.shape[1]} against {self.ncols} columns")
        vecs = np.mod(vecs, self.p).astype(np.uint8)
        if self.dim == 0:
            return vecs
        coeff = vecs[:, self.pivots]
        return np.mod(vecs.astype(np.int16) - matmul_mod(coeff, self.rows, self.p), self.p).astype(np.uint8)

    def contains(self, vector: np.ndarray) -> bool:
        return not np.any(self.reduce(vector))

    def add(self, vectors: np.ndarray) -> np.ndarray:
        """
        Extend the row space.

        Returns:
            np.ndarray: Rows spanning the new part (empty when nothing was added)
        """
        vecs = np.atleast_2d(np.asarray(vectors))
        added = []
        for start in range(0, vecs.shape[0], ELIMINATION_BLOCK_ROWS):
            block = self._add_block(vecs[start:start + ELIMINATION_BLOCK_ROWS])
            if block.shape[0]:
                added.append(block)
            if self.dim == self.ncols:
                break
        if not added:
            return np.zeros((0, self.ncols), dtype=np.uint8)
        return np.concatenate(added)

    def _add_block(self, block: np.ndarray) -> np.ndarray:
        residue = self.reduce(block)
        residue = residue[np.any(residue, axis=1)]
        if residue.shape[0] == 0:
            return residue
        new_rows, new_pivots = rref(residue, self.p)
        if not new_pivots:
            return new_rows[:0]
        new_pivots = np.asarray(new_pivots, dtype=np.intp)
        if self.dim:
            clear = matmul_mod(self.rows[:, new_pivots], new_rows, self.p)
            self.rows = np.mod(self.rows.astype(np.int16) - clear, self.p).astype(np.uint8)
        rows = np.concatenate([self.rows, new_rows])
        pivots = np.concatenate([self.pivots, new_pivots])
        order = np.argsort(pivots, kind="stable")
        self.rows = np.ascontiguousarray(rows[order])
        self.pivots = pivots[order]
        return new_rows

    def coordinates(self, vectors: np.ndarray) -> np.ndarray:
        """Coefficients of vectors in the echelon basis (vectors must lie in the span)"""
        vecs = np.atleast_2d(np.asarray(vectors))
        if np.any(self.reduce(vecs)):
            raise ValueError("vector outside the row space")
        return np.mod(vecs[:, self.pivots], self.p).astype(np.uint8)
