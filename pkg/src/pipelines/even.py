"""
Even Construction Module
The nonsplit extension of A_k over GF(2) acting on 2k(k-1) points, built from the pair permutation module
"""
import logging
from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from src.cohomology import (Cocycle2, CoboundaryTest, class_invariants, coboundary_test, induce_cocycle,
                            pullback_to_young, relator_tails, y_class_cocycles)
from src.config import (ASSOCIATIVITY_TRIALS, COCYCLE_IDENTITY_TRIALS, DEFAULT_SEED,
                        EXHAUSTIVE_CLASS_SEARCH_MAX_K)
from src.errors import MathematicalCheckFailed
from src.extensions import (ExtGroup, FaithfulRecord, NonsplitRecord, PointedCosetSpace, SubgroupSection,
                            build_extension, coset_action, faithfulness_certificate, nonsplit_certificate,
                            restrict_to_subextension, splitting_over)
from src.groups import PermGroup, Permutation, pointwise_pair_stabilizer, young_pair_stabilizer
from src.linalg import (Quotient, Subspace, dot, matmul_mod, orthogonal_complement, subspace_intersection,
                        subspace_sum)
from src.modules import (GModule, PairVectors, composition_factors, fixed_points, g_core, is_irreducible,
                         pair_permutation_module)
from src.modules.hom import hom_dimension
from src.pipelines.certificate import (Certificate, Construction, ModuleSection, faithful_section,
                                       nonsplit_section, replay_data)

logger = logging.getLogger(__name__)

G1_CYCLES = ((1, 2), (3, 4))
G2_CYCLES = ((3, 4), (5, 6))

LOWER_BOUND_NOTE = ("lower bounds on the minimal faithful degree apply for k > 20 and are not "
                    "checked at desk scale")


def lemma_elements(k: int) -> Tuple[Permutation, Permutation]:
    """g1 = (1 2)(3 4) in Y and g2 = (3 4)(5 6) in X"""
    return Permutation.from_cycles(G1_CYCLES, k), Permutation.from_cycles(G2_CYCLES, k)


def lift_degree(k: int) -> int:
    """Smallest j >= k with j = 3 mod 4"""
    j = k
    while j % 4 != 3:
        j += 1
    return j


def induced_inner_products(delta: Cocycle2, u: np.ndarray) -> Tuple[int, int]:
    """((delta(g1,g1), u), (delta(g2,g2), u)) for a cocycle into P"""
    g1, g2 = lemma_elements(delta.group.degree)
    return dot(delta(g1, g1), u, 2), dot(delta(g2, g2), u, 2)


@dataclass
class PairDecomposition:
    """P = P1 + P2 + P3 with P1 = F·f, P2 = <x_i> and P3 = (P1 + P2)^⊥"""

    p1: Subspace
    p2: Subspace
    p3: Subspace
    fixed_y: Subspace
    endomorphism_dim: int
    irreducible: Dict[str, bool]
    orthogonality: Dict[str, int]

    @property
    def dims(self) -> List[int]:
        return [self.p1.dim, self.p2.dim, self.p3.dim]


def decompose_pair_module(module: GModule, vectors: PairVectors,
                          rng: Optional[np.random.Generator] = None) -> PairDecomposition:
    """
    Fixed points of Y, the endomorphism count and the orthogonal decomposition of P for k = 3 mod 4.

    Raises:
        MathematicalCheckFailed: When any structural fact fails
    """
    k = module.group.degree
    n = module.dim
    young = young_pair_stabilizer(k)
    fixed = fixed_points(module.restrict(young))
    expected = Subspace.span(2, n, np.array([vectors.u, vectors.f, vectors.y12]))
    if fixed != expected:
        raise MathematicalCheckFailed("fixed points", f"C_P(Y) has dim {fixed.dim}, expected <u, f, x1+x2>")
    endomorphisms = hom_dimension(module, module)
    if endomorphisms != 3:
        raise MathematicalCheckFailed("fixed points", f"dim End(P) = {endomorphisms}, rank 3 action expected")

    p1 = Subspace.span(2, n, vectors.f)
    p2 = Subspace.span(2, n, np.array(vectors.x))
    lower = subspace_sum(p1, p2)
    p3 = orthogonal_complement(lower)
    if lower.dim != k or subspace_intersection(lower, p3).dim:
        raise MathematicalCheckFailed("decomposition", f"P1 + P2 has dim {lower.dim} and meets its complement")
    u = vectors.u
    orthogonality = {"(u,u)": dot(u, u, 2), "(u,f)": dot(u, vectors.f, 2),
                     "(u,x_i)": max(dot(u, x, 2) for x in vectors.x)}
    if any(orthogonality.values()):
        raise MathematicalCheckFailed("decomposition", f"u is not orthogonal to P1 + P2: {orthogonality}")
    rng = rng or np.random.default_rng(0)
    irreducible = {name: is_irreducible(module.submodule(sub, name=name), rng)
                   for name, sub in (("P1", p1), ("P2", p2), ("P3", p3))}
    if not all(irreducible.values()):
        raise MathematicalCheckFailed("decomposition", f"reducible summand: {irreducible}")
    decomposition = PairDecomposition(p1, p2, p3, fixed, endomorphisms, irreducible, orthogonality)
    logger.info("Stage decomposition: C_P(Y) dim %d, summand dims %s", fixed.dim, decomposition.dims)
    return decomposition


@dataclass
class ClassRow:
    """One explicit class on Y with its invariants and its induced behaviour"""

    kind: str
    tau: int
    nu: int
    g1: int
    g2: int
    nontrivial_on_y: bool
    nonsplit_in_m: Optional[bool] = None


@dataclass
class ClassSelection:
    rows: List[ClassRow]
    selected: str
    induced: Cocycle2
    delta: Cocycle2
    system: CoboundaryTest


def select_class(pair_module: GModule, module: GModule, quotient: Quotient, u: np.ndarray,
                 exhaustive: bool = False) -> ClassSelection:
    """
    Induce each explicit class of Y to P, push it to M and keep the first that is not a coboundary.

    Args:
        exhaustive (bool): Test every class even after one has been selected

    Raises:
        MathematicalCheckFailed: When every class induces a coboundary in M
    """
    k = pair_module.group.degree
    young = young_pair_stabilizer(k)
    rows: List[ClassRow] = []
    chosen = None
    for kind, eps in y_class_cocycles(k - 2).items():
        tau, nu = class_invariants(eps)
        induced = induce_cocycle(pullback_to_young(eps, young), pair_module)
        g1, g2 = induced_inner_products(induced, u)
        row = ClassRow(kind, tau, nu, g1, g2, not coboundary_test(eps).feasible)
        rows.append(row)
        if chosen is not None and not exhaustive:
            continue
        delta = induced.mapped(quotient.projection, module, f"delta_{kind}")
        system = coboundary_test(delta)
        row.nonsplit_in_m = not system.feasible
        if row.nonsplit_in_m and chosen is None:
            chosen = (kind, induced, delta, system)
    if len({(r.tau, r.nu) for r in rows}) < len(rows):
        logger.warning("Two classes on Y share the invariants (eps(tau,tau), eps(nu,nu)): %s",
                       [(r.kind, r.tau, r.nu) for r in rows])
    if chosen is None:
        raise MathematicalCheckFailed("class selection", "every class on Y induces a coboundary in M")
    kind, induced, delta, system = chosen
    logger.info("Stage class selection: %s chosen, table %s", kind, [(r.kind, r.tau, r.nu) for r in rows])
    return ClassSelection(rows, kind, induced, delta, system)


@dataclass
class EvenConstruction:
    k: int
    pair_module: GModule
    vectors: PairVectors
    decomposition: PairDecomposition
    module: GModule
    quotient: Quotient
    selection: ClassSelection
    inner_products: Tuple[int, int]
    extension: ExtGroup
    functional: np.ndarray
    section: SubgroupSection
    space: PointedCosetSpace
    image: PermGroup
    nonsplit: NonsplitRecord
    faithful: FaithfulRecord
    gcore_dim: int
    trials: Dict[str, int] = field(default_factory=dict)

    @property
    def delta(self) -> Cocycle2:
        return self.selection.delta

    @property
    def degree(self) -> int:
        return self.space.degree


def build_even(k: int, rng: Optional[np.random.Generator] = None,
               cocycle_trials: int = COCYCLE_IDENTITY_TRIALS,
               associativity_trials: int = ASSOCIATIVITY_TRIALS) -> EvenConstruction:
    """
    Run the full chain for k = 3 mod 4.

    Raises:
        ValueError: For k < 7 or k != 3 mod 4
        MathematicalCheckFailed: Naming the first stage whose check fails
    """
    if k < 7 or k % 4 != 3:
        raise ValueError(f"build_even needs k >= 7 with k = 3 mod 4, got {k}")
    rng = rng or np.random.default_rng(DEFAULT_SEED)
    pair_module, vectors = pair_permutation_module(k, 2)
    decomposition = decompose_pair_module(pair_module, vectors, rng)
    module, quotient = pair_module.quotient(subspace_sum(decomposition.p1, decomposition.p2), name=f"M(k={k})")
    logger.info("Stage quotient: dim M = %d", module.dim)

    selection = select_class(pair_module, module, quotient, vectors.u, exhaustive=k <= EXHAUSTIVE_CLASS_SEARCH_MAX_K)
    inner = induced_inner_products(selection.induced, vectors.u)
    if inner != (1, 0):
        raise MathematicalCheckFailed("cocycle lemma", f"(delta(g1,g1),u), (delta(g2,g2),u) = {inner}, expected (1, 0)")

    delta = selection.delta
    failures = len(delta.failing_triples(rng, cocycle_trials))
    if failures:
        raise MathematicalCheckFailed("cocycle identity", f"{failures} of {cocycle_trials} triples fail")
    extension = build_extension(delta, name=f"M.A_{k}", rng=rng)
    bad = extension.associativity_failures(rng, associativity_trials)
    if bad:
        raise MathematicalCheckFailed("associativity", f"{bad} of {associativity_trials} triples fail")

    functional = matmul_mod(quotient.section, vectors.u[:, None], 2)[:, 0]
    section = splitting_over(extension, pointwise_pair_stabilizer(k), functional)
    if not section.is_central:
        raise MathematicalCheckFailed("splitting", "M/M0 is not central over X")
    space, image = coset_action(section, ordered=True)
    if space.degree != 2 * k * (k - 1):
        raise MathematicalCheckFailed("coset action", f"degree {space.degree} != 2k(k-1) = {2 * k * (k - 1)}")
    if not image.is_transitive():
        raise MathematicalCheckFailed("coset action", "image is not transitive")

    m0 = section.kernel
    core = g_core(module, m0)
    involution = Permutation.from_cycles([(1, 2), (3, 4)], k)
    nonsplit = nonsplit_certificate(extension, rng, involution, system=selection.system)
    faithful = faithfulness_certificate(extension, m0, image, nonsplit)
    construction = EvenConstruction(k, pair_module, vectors, decomposition, module, quotient, selection, inner,
                                    extension, functional, section, space, image, nonsplit, faithful, core.dim,
                                    {"cocycle_identity": cocycle_trials, "associativity": associativity_trials})
    logger.info("Stage certificates k=%d: degree %d, nonsplit %s, faithful %s", k, space.degree,
                nonsplit.nonsplit, faithful.faithful)
    return construction


def _structure(c: EvenConstruction) -> Dict:
    d = c.decomposition
    return {
        "fixed_points_Y": {"dim": d.fixed_y.dim, "basis": ["u", "f", "x1+x2"]},
        "endomorphism_dim": d.endomorphism_dim,
        "decomposition_dims": d.dims,
        "summands_irreducible": d.irreducible,
        "orthogonality": d.orthogonality,
        "y_classes": [asdict(row) for row in c.selection.rows],
        "y_invariants_distinct": len({(r.tau, r.nu) for r in c.selection.rows}) == len(c.selection.rows),
    }


def _cocycle(c: EvenConstruction) -> Dict:
    g1, g2 = lemma_elements(c.k)
    return {
        "selected": c.selection.selected,
        "g1": g1.to_cycle_string(),
        "g2": g2.to_cycle_string(),
        "inner_products": {"g1": c.inner_products[0], "g2": c.inner_products[1]},
        "trials": dict(c.trials),
    }


def _module_section(c: EvenConstruction, dim: int, factor_dims: List[int]) -> ModuleSection:
    k = c.k
    return ModuleSection(dim=dim, factor_dims=factor_dims,
                         dims={"P": c.pair_module.dim, "P1": c.decomposition.p1.dim,
                               "P2": c.decomposition.p2.dim, "P3": c.decomposition.p3.dim,
                               "M": c.module.dim, "M0": c.section.kernel.dim, "k": k})


def even_certificate(c: EvenConstruction, seed: int) -> Certificate:
    """Certificate for a direct construction at k = 3 mod 4"""
    k = c.k
    tails = relator_tails(c.extension.base, c.delta)
    return Certificate(
        construction=Construction(kind="even", k=k, p=2),
        degrees={"action": c.degree, "closed_form": 2 * k * (k - 1)},
        generator_images=[g.to_cycle_string() for g in c.image.generators],
        transitive=c.image.is_transitive(),
        nonsplit=nonsplit_section(c.nonsplit),
        faithful=faithful_section(c.faithful),
        # M = P/(P1 + P2) is isomorphic to the irreducible P3
        module=_module_section(c, c.module.dim, [c.decomposition.p3.dim]),
        structure=_structure(c),
        cocycle=_cocycle(c),
        seeds={"seed": seed},
        sanity=[f"degree {c.degree} >= k(k-1) = {k * (k - 1)}"],
        annotations=[LOWER_BOUND_NOTE],
        replay=replay_data(c.extension, tails, c.section.kernel, c.degree, c.section.values),
    )


def run_even(k: int, seed: int = DEFAULT_SEED, cocycle_trials: int = COCYCLE_IDENTITY_TRIALS,
             associativity_trials: int = ASSOCIATIVITY_TRIALS) -> Certificate:
    """
    Construct and certify the degree-2k(k-1) action.

    k = 3 mod 4 is built directly; otherwise the construction runs at the smallest
    j > k with j = 3 mod 4 and is restricted to the preimage of A_k.
    """
    if k < 7:
        raise ValueError("run_even needs k >= 7")
    rng = np.random.default_rng(seed)
    j = lift_degree(k)
    construction = build_even(j, rng, cocycle_trials, associativity_trials)
    if j == k:
        return even_certificate(construction, seed)

    report = restrict_to_subextension(construction.extension, construction.space,
                                      list(construction.image.generators), k, rng)
    if report.degree != 2 * k * (k - 1):
        raise MathematicalCheckFailed("restriction", f"degree {report.degree} != 2k(k-1)")
    extension = report.extension
    tails = relator_tails(extension.base, extension.delta)
    structure = _structure(construction)
    structure["orbits"] = [asdict(o) for o in report.orbits]
    structure["kernel_on_m_dim"] = report.kernel_dim
    structure["tails_consistent"] = report.tails_consistent
    factors = composition_factors(extension.module, rng)
    factor_dims = sorted(f.module.dim for f in factors for _ in range(f.multiplicity))
    module = _module_section(construction, extension.module.dim, factor_dims)
    module.dims["M'"] = extension.module.dim
    return Certificate(
        construction=Construction(kind="even", k=k, p=2, j=j),
        degrees={"action": report.degree, "closed_form": 2 * k * (k - 1), "ambient": construction.degree},
        generator_images=[g.to_cycle_string() for g in report.generator_images],
        transitive=report.image.is_transitive(),
        nonsplit=nonsplit_section(report.nonsplit, report.fallback_used, report.twisted_dim),
        faithful=faithful_section(report.faithful),
        module=module,
        structure=structure,
        cocycle=_cocycle(construction),
        seeds={"seed": seed},
        sanity=[f"degree {report.degree} >= k(k-1) = {k * (k - 1)}"],
        annotations=[LOWER_BOUND_NOTE, f"built at j = {j} and restricted to A_{k}"],
        replay=replay_data(extension, tails, report.stabilizer_m, report.degree),
    )
