"""
Extension Certificates Module
Nonsplitness and faithfulness records for a constructed extension and its coset action
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from src.cohomology.fox import CoboundaryTest, coboundary_test
from src.config import ORDER4_SWEEP_MAX_DIM, ORDER_CHECK_MAX_DEGREE, RANDOM_ORDER4_SAMPLES
from src.extensions.ext_group import ExtGroup
from src.groups.perm_group import PermGroup
from src.groups.permutation import Permutation
from src.linalg.echelon import matmul_mod
from src.linalg.matrix_io import dump_vector
from src.linalg.subspace import Subspace, left_nullspace
from src.modules.hom import g_core

logger = logging.getLogger(__name__)


@dataclass
class Order4Report:
    """Orders in the coset xM for an involution x with p = 2"""

    element: str
    random_samples: int
    random_all_order4: bool
    linear_witness: bool
    exhaustive: bool
    exhaustive_all_order4: Optional[bool] = None

    @property
    def passed(self) -> bool:
        checks = [self.random_all_order4, self.linear_witness]
        if self.exhaustive:
            checks.append(bool(self.exhaustive_all_order4))
        return all(checks)


def order4_sweep(group: ExtGroup, x: Permutation, rng: np.random.Generator,
                 samples: int = RANDOM_ORDER4_SAMPLES, max_dim: int = ORDER4_SWEEP_MAX_DIM) -> Order4Report:
    """
    Check that every element of the coset (M, x) has order 4.

    (m,x)^2 = (m·(A_x + 1) + delta(x,x), 1), so the coset consists of elements of
    order 4 exactly when delta(x,x) is outside the image of A_x + 1. Random elements
    go through element_order; the full coset is swept when dim M <= max_dim.
    """
    if group.p != 2 or x.order != 2:
        raise ValueError("order4_sweep needs p = 2 and an involution")
    module = group.module
    n = module.dim
    orders = [group.element_order(group.element(rng.integers(0, 2, size=n), x)) for _ in range(samples)]
    shifted = np.mod(module.matrix_of(x).astype(np.int16) + np.eye(n, dtype=np.int16), 2).astype(np.uint8)
    target = group.delta(x, x)
    witness = not Subspace.span(2, n, shifted).contains(target)
    report = Order4Report(x.to_cycle_string(), samples, all(o == 4 for o in orders), witness, n <= max_dim)
    if report.exhaustive:
        bits = ((np.arange(1 << n)[:, None] >> np.arange(n)) & 1).astype(np.uint8)
        squares = np.mod(matmul_mod(bits, shifted, 2).astype(np.int16) + target, 2)
        report.exhaustive_all_order4 = bool(np.all(np.any(squares, axis=1)))
    logger.info("Order-4 sweep over %s·M: random %s, witness %s, exhaustive %s", report.element,
                report.random_all_order4, witness, report.exhaustive_all_order4)
    return report


@dataclass
class NonsplitRecord:
    unknowns: int
    equations: int
    rank: int
    feasible: bool
    order4: Optional[Order4Report] = None
    complement: List[str] = field(default_factory=list)

    @property
    def nonsplit(self) -> bool:
        return not self.feasible and (self.order4 is None or self.order4.passed)


def nonsplit_certificate(group: ExtGroup, rng: Optional[np.random.Generator] = None,
                         involution: Optional[Permutation] = None,
                         system: Optional[CoboundaryTest] = None) -> NonsplitRecord:
    """
    Infeasibility of the complement system over G's presentation, plus the order-4
    witnesses for p = 2 when an involution is given. A feasible system reports SPLIT
    together with the complement's generator values.
    """
    system = system or coboundary_test(group.delta)
    record = NonsplitRecord(system.unknowns, system.equations, system.rank, system.feasible)
    if system.feasible:
        record.complement = [dump_vector(row, group.p) for row in system.solution]
        logger.info("Extension %s SPLITS", group.name)
    if group.p == 2 and involution is not None:
        record.order4 = order4_sweep(group, involution, rng or np.random.default_rng(0))
    return record


@dataclass
class FaithfulRecord:
    degree: int
    transitive: bool
    gcore_dim: int
    stabilizer_m_dim: int
    argument: List[str]
    expected_order: Optional[int] = None
    computed_order: Optional[int] = None

    @property
    def faithful(self) -> bool:
        if self.gcore_dim:
            return False
        return self.computed_order is None or self.computed_order == self.expected_order


def faithfulness_certificate(group: ExtGroup, stabilizer_m: Subspace, image: PermGroup,
                             nonsplit: NonsplitRecord,
                             order_check_max_degree: int = ORDER_CHECK_MAX_DEGREE) -> FaithfulRecord:
    """
    Kernel ∩ M is a G-submodule of the point stabilizer's M-part, so it vanishes when
    the G-core of that subspace does. A kernel outside M would complement M, which the
    nonsplit record excludes. Small images also get a Schreier-Sims order check.
    """
    core = g_core(group.module, stabilizer_m)
    argument = [
        f"kernel ∩ M is a G-submodule inside M0 (dim {stabilizer_m.dim}); its G-core has dim {core.dim}",
        "a kernel meeting M trivially maps isomorphically onto a normal subgroup of G",
        "G is simple, so such a nontrivial kernel would be a complement to M",
        "the complement system is infeasible" if not nonsplit.feasible else "the complement system is feasible",
    ]
    record = FaithfulRecord(image.degree, image.is_transitive(), core.dim, stabilizer_m.dim, argument)
    if image.degree <= order_check_max_degree:
        record.expected_order = group.p ** group.module.dim * group.base.order()
        record.computed_order = image.order()
        logger.info("Schreier-Sims order %d (expected %d)", record.computed_order, record.expected_order)
    return record


def kernel_on_m(fiber_shift: np.ndarray, p: int) -> Subspace:
    """Vectors v of M with v·w_c = 0 for every coset column w_c: the M-part of the kernel"""
    return left_nullspace(fiber_shift, p)

