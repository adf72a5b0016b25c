import numpy as np
import pytest

from src.config import Budgets, apply_budgets
from src.errors import BudgetExhaustedError, DimensionMismatchError
from src.linalg import (Quotient, Subspace, dot, dump_matrix, inverse, load_matrix, matmul_mod, nullspace,
                        orthogonal_complement, rank, rref, solve, subspace_intersection, subspace_sum)

A = np.array([[1, 1, 0], [1, 0, 1], [0, 1, 1]], dtype=np.uint8)


def test_rank_depends_on_characteristic():
    assert rank(A, 2) == 2
    assert rank(A, 3) == 3


def test_rref_gf2():
    rows, pivots = rref(A, 2)
    assert pivots == [0, 1]
    assert rows.tolist() == [[1, 0, 1], [0, 1, 1]]


def test_rref_gf3_is_identity():
    rows, pivots = rref(A, 3)
    assert pivots == [0, 1, 2]
    assert np.array_equal(rows, np.eye(3, dtype=np.uint8))


def test_wide_gf2_rows_pack_across_words():
    matrix = np.zeros((3, 130), dtype=np.uint8)
    matrix[0, [0, 129]] = 1
    matrix[1, [64, 129]] = 1
    matrix[2, [0, 64]] = 1
    rows, pivots = rref(matrix, 2)
    assert pivots == [0, 64]
    assert rows[0, 129] == 1 and rows[1, 129] == 1


def test_nullspace():
    kernel = nullspace(A, 2)
    assert kernel.dim == 1
    assert kernel.contains(np.array([1, 1, 1]))
    assert nullspace(A, 3).dim == 0


def test_rank_nullity_on_random_matrices(rng):
    for p in (2, 3):
        full = rng.integers(0, p, size=(40, 60)).astype(np.uint8)
        low = matmul_mod(rng.integers(0, p, size=(40, 25)), rng.integers(0, p, size=(25, 60)), p)
        for matrix in (full, low):
            kernel = nullspace(matrix, p)
            assert rank(matrix, p) + kernel.dim == 60
            assert not np.any(matmul_mod(matrix, kernel.basis.T, p))
        assert rank(low, p) <= 25


def test_solve():
    b = np.array([1, 2, 0])
    x = solve(A, b, 3)
    assert np.array_equal(matmul_mod(A, x[:, None], 3)[:, 0], b)
    # rows 1 + 2 = row 3 over GF(2), so b must satisfy b1 + b2 = b3
    assert solve(A, np.array([1, 0, 0]), 2) is None
    assert solve(A, np.array([1, 0, 1]), 2) is not None
    with pytest.raises(DimensionMismatchError):
        solve(A, np.array([1, 0]), 2)


def test_inverse():
    assert np.array_equal(matmul_mod(A, inverse(A, 3), 3), np.eye(3, dtype=np.uint8))
    with pytest.raises(ValueError):
        inverse(A, 2)


def test_sum_and_intersection():
    e = np.eye(4, dtype=np.uint8)
    u = Subspace.span(2, 4, e[[0, 1]])
    w = Subspace.span(2, 4, e[[1, 2]])
    assert subspace_sum(u, w).dim == 3
    meet = subspace_intersection(u, w)
    assert meet == Subspace.span(2, 4, e[1])
    assert u.contains_subspace(meet)
    assert subspace_intersection(u, Subspace.zero(2, 4)).dim == 0
    with pytest.raises(DimensionMismatchError):
        subspace_sum(u, Subspace.zero(3, 4))


def test_subspace_equality_is_canonical():
    first = Subspace.span(3, 3, np.array([[1, 1, 0], [0, 1, 1]]))
    second = Subspace.span(3, 3, np.array([[1, 2, 1], [2, 2, 0]]))
    assert first == second
    assert hash(first) == hash(second)


def test_quotient_projection_and_section():
    sub = Subspace.span(3, 3, np.array([1, 1, 0]))
    quo = Quotient(sub)
    assert quo.dim == 2
    assert not np.any(quo.project(sub.basis))
    eye = np.eye(2, dtype=np.uint8)
    assert np.array_equal(quo.project(quo.lift(eye)), eye)


def test_orthogonal_complement():
    line = Subspace.span(2, 4, np.array([1, 1, 0, 0]))
    perp = orthogonal_complement(line)
    assert perp.dim == 3
    assert perp.contains(np.array([1, 1, 0, 0]))
    assert dot(np.array([1, 1, 0, 0]), np.array([1, 1, 0, 0]), 2) == 0
    assert dot(np.array([1, 2]), np.array([2, 2]), 3) == 0


def test_matrix_dump_format():
    text = dump_matrix(np.array([[1, 2], [0, 1]]), 3)
    assert text == "3 2 2\n12\n01"
    p, matrix = load_matrix(text)
    assert p == 3 and matrix.tolist() == [[1, 2], [0, 1]]
    with pytest.raises(ValueError):
        load_matrix("2 2 2\n10")
    with pytest.raises(ValueError):
        load_matrix("2 1 2\n12")
    with pytest.raises(ValueError):
        dump_matrix(np.eye(2), 11)


def test_elimination_budget():
    apply_budgets(Budgets(elimination_entries=4))
    with pytest.raises(BudgetExhaustedError):
        rref(A, 2)
