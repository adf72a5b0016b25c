"""
Linear Algebra Package

Dense linear algebra over GF(p): row reduction, subspaces, quotients and text dumps.
"""
from .echelon import Echelon, matmul_mod, rref
from .matrix_io import dump_matrix, dump_vector, load_matrix, load_vector
from .subspace import (Quotient, Subspace, dot, inverse, left_nullspace, nullspace,
                       orthogonal_complement, quotient_with_section, rank, solve,
                       subspace_intersection, subspace_sum)

__all__ = [
    "Echelon", "matmul_mod", "rref", "Subspace", "Quotient", "solve", "nullspace",
    "left_nullspace", "rank", "inverse", "subspace_sum", "subspace_intersection",
    "quotient_with_section", "dot", "orthogonal_complement", "dump_matrix", "load_matrix",
    "dump_vector", "load_vector",
]
