"""
Cocycle Lemma Module
Inner products of the induced cocycle with u, and the covering argument that carries them from k-4 to k
"""
import json
import logging
from typing import Dict, List, Optional

import numpy as np
from pydantic import BaseModel, Field

from src.cohomology import Cocycle2, induce_cocycle, pullback_to_young, y_class_cocycles
from src.config import LEMMA_DEGREES
from src.errors import MathematicalCheckFailed
from src.groups import young_pair_stabilizer
from src.groups.pairs import pair_index, pair_list, pairs_inside
from src.linalg import Subspace
from src.modules import pair_permutation_module
from src.pipelines.even import induced_inner_products, lemma_elements, select_class

logger = logging.getLogger(__name__)


class LemmaReport(BaseModel):
    k: int
    selected: str
    selected_at: int
    inner_products: Dict[str, int]
    omega_sets: List[List[int]] = Field(default_factory=list)
    covering_holds: Optional[bool] = None
    projection_consistent: Optional[bool] = None
    projection_detail: Dict[str, int] = Field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(self.model_dump(mode="json"), sort_keys=True, indent=2) + "\n"


def omega_sets(k: int) -> List[List[int]]:
    """
    The seven 1-based point sets Omega_0..Omega_6 built from D = {1..k-8} and four
    consecutive pairs of the last eight points; Omega_0 = {1..k-4}.
    """
    if k < 10:
        raise ValueError("omega sets need k >= 10")
    head = list(range(1, k - 7))
    b1, b2, b3, b4 = ([k - 7 + 2 * i, k - 6 + 2 * i] for i in range(4))
    blocks = [b1 + b2, b3 + b4, b1 + b3, b2 + b3, b1 + b4, b2 + b4, []]
    return [sorted(head + extra) for extra in blocks]


def covering_vector(k: int, sets: List[List[int]]) -> np.ndarray:
    """sum of u(Omega) over the sets, where u(Omega) sums e_rs over r, s > 2 in Omega"""
    total = np.zeros(len(pair_list(k)), dtype=np.int64)
    for omega in sets:
        inside = pairs_inside([pt - 1 for pt in omega if pt > 2], k)
        total[inside] += 1
    return np.mod(total, 2).astype(np.uint8)


def induced_for_kind(k: int, kind: str) -> Cocycle2:
    """The class of the given kind on Y, induced to P"""
    pair_module, _ = pair_permutation_module(k, 2)
    eps = y_class_cocycles(k - 2)[kind]
    return induce_cocycle(pullback_to_young(eps, young_pair_stabilizer(k)), pair_module)


def _selected_kind(k: int) -> str:
    pair_module, vectors = pair_permutation_module(k, 2)
    lower = np.array(list(vectors.x) + [vectors.f])
    module, quotient = pair_module.quotient(Subspace.span(2, pair_module.dim, lower), name=f"M(k={k})")
    return select_class(pair_module, module, quotient, vectors.u).selected


def projection_check(large: Cocycle2, small: Cocycle2) -> Dict[str, int]:
    """
    Coordinates of delta(g_s, g_s) at the pairs inside Omega_0 = {1..k-4} against the
    values at k-4, for s = 1, 2. Returns the number of mismatching pairs per element.
    """
    k, m = large.group.degree, small.group.degree
    inside = pairs_inside(list(range(m)), k)
    small_index = pair_index(m)
    order = [small_index[pair_list(k)[i]] for i in inside]
    detail = {}
    for name, g_large, g_small in zip(("g1", "g2"), lemma_elements(k), lemma_elements(m)):
        projected = large(g_large, g_large)[inside]
        reference = small(g_small, g_small)[order]
        detail[name] = int(np.count_nonzero(projected != reference))
    return detail


def verify_cocycle_lemma(k: int, kind: Optional[str] = None) -> LemmaReport:
    """
    Check ((delta(g1,g1), u), (delta(g2,g2), u)) = (1, 0).

    The class is selected at k itself through the complement system for k <= 11; larger k
    reuse the choice made at k = 11 and additionally check the covering identity for u
    and the agreement of delta at k with delta at k - 4 on the pairs inside {1..k-4}.

    Raises:
        ValueError: When k is not 3 mod 4
        MathematicalCheckFailed: On any mismatch
    """
    if k % 4 != 3 or k < 7:
        raise ValueError(f"verify_cocycle_lemma needs k = 3 mod 4 and k >= 7, got {k}")
    if k not in LEMMA_DEGREES:
        logger.warning("k = %d is outside the reference degrees %s", k, LEMMA_DEGREES)
    selected_at = min(k, 11)
    kind = kind or _selected_kind(selected_at)
    _, vectors = pair_permutation_module(k, 2)
    delta = induced_for_kind(k, kind)
    g1, g2 = induced_inner_products(delta, vectors.u)
    report = LemmaReport(k=k, selected=kind, selected_at=selected_at, inner_products={"g1": g1, "g2": g2})
    if (g1, g2) != (1, 0):
        raise MathematicalCheckFailed("cocycle lemma", f"k={k}: inner products ({g1}, {g2}), expected (1, 0)")

    if k >= 15:
        sets = omega_sets(k)
        report.omega_sets = sets
        report.covering_holds = bool(np.array_equal(covering_vector(k, sets), vectors.u))
        if not report.covering_holds:
            raise MathematicalCheckFailed("cocycle lemma", f"k={k}: u differs from the sum of u(Omega_i)")
        detail = projection_check(delta, induced_for_kind(k - 4, kind))
        report.projection_detail = detail
        report.projection_consistent = not any(detail.values())
        if not report.projection_consistent:
            raise MathematicalCheckFailed("cocycle lemma", f"k={k}: projection to {{1..{k - 4}}} disagrees {detail}")
    logger.info("Stage cocycle lemma k=%d: class %s, inner products (%d, %d)", k, kind, g1, g2)
    return report
