"""
Matrix I/O Module
Text dump of GF(p) matrices: a "p rows cols" header, then one digit string per row
"""
from typing import Tuple

import numpy as np


def dump_matrix(matrix: np.ndarray, p: int) -> str:
    """
    Serialize a matrix over GF(p) (p < 10).

    Args:
        matrix (np.ndarray): 2-D array of residues
        p (int): Prime

    Returns:
        str: Header line followed by one digit string per row
    """
    if p >= 10:
        raise ValueError("digit-string dumps support p < 10 only")
    matrix = np.atleast_2d(np.mod(np.asarray(matrix), p).astype(np.uint8))
    rows, cols = matrix.shape
    lines = [f"{p} {rows} {cols}"]
    lines.extend("".join(str(int(x)) for x in row) for row in matrix)
    return "\n".join(lines)


def load_matrix(text: str) -> Tuple[int, np.ndarray]:
    """Parse a dump produced by dump_matrix; returns (p, matrix)"""
    lines = [line.strip() for line in text.strip().splitlines()]
    p, rows, cols = (int(x) for x in lines[0].split())
    body = lines[1:1 + rows]
    if len(body) != rows or any(len(line) != cols for line in body):
        raise ValueError(f"malformed matrix dump: expected {rows} rows of {cols} digits")
    matrix = np.array([[int(ch) for ch in line] for line in body], dtype=np.uint8).reshape(rows, cols)
    if np.any(matrix >= p):
        raise ValueError(f"entries outside GF({p})")
    return p, matrix


def dump_vector(vector: np.ndarray, p: int) -> str:
    """Digit string of a vector (no header)"""
    return "".join(str(int(x) % p) for x in np.asarray(vector).reshape(-1))


def load_vector(text: str) -> np.ndarray:
    return np.array([int(ch) for ch in text.strip()], dtype=np.uint8)
