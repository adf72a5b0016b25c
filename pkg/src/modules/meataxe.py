"""
Meataxe Module
Irreducibility testing, composition factors, socles, radicals and indecomposability
"""
import itertools
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np
import sympy

from src.config import ENDOMORPHISM_ENUMERATION_LIMIT, active_budgets
from src.errors import BudgetExhaustedError
from src.linalg.echelon import inverse_table, matmul_mod
from src.linalg.subspace import Subspace, left_nullspace, nullspace, rank, subspace_sum
from src.modules.gmodule import GModule
from src.modules.hom import hom_space, spin, spin_under

logger = logging.getLogger(__name__)

_X = sympy.Symbol("x")


def charpoly(matrix: np.ndarray, p: int) -> List[int]:
    """
    Characteristic polynomial over GF(p), coefficients from the constant term up.

    Reduces to upper Hessenberg form by similarity, then runs the usual
    three-term recurrence on leading principal minors.
    """
    h = np.mod(np.asarray(matrix, dtype=np.int64), p)
    n = h.shape[0]
    inv = inverse_table(p)
    for j in range(n - 2):
        nonzero = np.nonzero(h[j + 1:, j])[0]
        if nonzero.size == 0:
            continue
        i = j + 1 + int(nonzero[0])
        if i != j + 1:
            h[[i, j + 1], :] = h[[j + 1, i], :]
            h[:, [i, j + 1]] = h[:, [j + 1, i]]
        pivot_inv = int(inv[h[j + 1, j]])
        for r in range(j + 2, n):
            if h[r, j] == 0:
                continue
            factor = (int(h[r, j]) * pivot_inv) % p
            h[r, :] = np.mod(h[r, :] - factor * h[j + 1, :], p)
            h[:, j + 1] = np.mod(h[:, j + 1] + factor * h[:, r], p)
    polys: List[List[int]] = [[1]]
    for m in range(n):
        nxt = [0] + polys[m]
        for d, c in enumerate(polys[m]):
            nxt[d] = (nxt[d] - int(h[m, m]) * c) % p
        product = 1
        for i in range(m - 1, -1, -1):
            product = (product * int(h[i + 1, i])) % p
            if product == 0:
                break
            scale = (product * int(h[i, m])) % p
            if scale:
                for d, c in enumerate(polys[i]):
                    nxt[d] = (nxt[d] - scale * c) % p
        polys.append(nxt)
    return polys[n]


def factor_poly(coeffs: Sequence[int], p: int) -> List[Tuple[List[int], int]]:
    """
    Monic irreducible factors over GF(p) with multiplicities, lowest degree first.

    Args:
        coeffs: Coefficients from the constant term up

    Returns:
        list: (coefficients from the constant term up, multiplicity)
    """
    poly = sympy.Poly(list(reversed([int(c) % p for c in coeffs])), _X, modulus=p)
    _, factors = poly.factor_list()
    result = []
    for factor, multiplicity in factors:
        monic = factor.monic()
        result.append(([int(c) % p for c in reversed(monic.all_coeffs())], multiplicity))
    result.sort(key=lambda item: (len(item[0]), item[0]))
    return result


def evaluate_poly(coeffs: Sequence[int], matrix: np.ndarray, p: int) -> np.ndarray:
    """f(A) by Horner's rule"""
    n = matrix.shape[0]
    eye = np.eye(n, dtype=np.int64)
    result = np.zeros((n, n), dtype=np.uint8)
    for c in reversed(list(coeffs)):
        result = np.mod(matmul_mod(result, matrix, p).astype(np.int64) + c * eye, p).astype(np.uint8)
    return result


@dataclass(frozen=True)
class IrreducibilityCertificate:
    """Norton's criterion: a nullspace of f(a) of dimension deg f spinning to everything both ways"""

    words: Tuple[Tuple[int, Tuple[int, ...]], ...]
    factor: Tuple[int, ...]
    nullity: int


@dataclass
class SplitResult:
    """Outcome of one meataxe run: a proper submodule or an irreducibility certificate"""

    submodule: Optional[Subspace] = None
    certificate: Optional[IrreducibilityCertificate] = None

    @property
    def irreducible(self) -> bool:
        return self.submodule is None


def _random_algebra_element(module: GModule, rng: np.random.Generator):
    terms = []
    matrix = np.zeros((module.dim, module.dim), dtype=np.int64)
    for _ in range(int(rng.integers(2, 4))):
        length = int(rng.integers(1, 4))
        word = tuple(int(x) for x in rng.integers(1, module.ngens + 1, size=length))
        coeff = int(rng.integers(1, module.p))
        terms.append((coeff, word))
        matrix += coeff * module.word_matrix(word).astype(np.int64)
    return tuple(terms), np.mod(matrix, module.p).astype(np.uint8)


def meataxe_split(module: GModule, rng: Optional[np.random.Generator] = None,
                  tries: Optional[int] = None) -> SplitResult:
    """
    Find a proper submodule or prove irreducibility.

    Raises:
        BudgetExhaustedError: When no random algebra element settles the question
    """
    tries = tries or active_budgets().meataxe_tries
    p, n = module.p, module.dim
    if n == 0:
        raise ValueError("the zero module has no composition factors")
    if n == 1:
        return SplitResult(certificate=IrreducibilityCertificate((), (0, 1), 1))
    if module.ngens == 0:
        return SplitResult(submodule=Subspace.span(p, n, np.eye(n, dtype=np.uint8)[:1]))
    rng = rng or np.random.default_rng(0)
    transposed = [np.ascontiguousarray(a.T) for a in module.action]
    for attempt in range(tries):
        words, element = _random_algebra_element(module, rng)
        for factor, _ in factor_poly(charpoly(element, p), p):
            evaluated = evaluate_poly(factor, element, p)
            kernel = left_nullspace(evaluated, p)
            sub = spin(module, kernel.basis[0])
            if sub.dim < n:
                logger.debug("%s: submodule of dim %d after %d tries", module.name, sub.dim, attempt + 1)
                return SplitResult(submodule=sub)
            degree = len(factor) - 1
            if kernel.dim != degree:
                continue
            dual_kernel = left_nullspace(evaluated.T, p)
            dual_sub = spin_under(p, n, dual_kernel.basis[0], transposed)
            if dual_sub.dim < n:
                return SplitResult(submodule=nullspace(dual_sub.basis, p))
            return SplitResult(certificate=IrreducibilityCertificate(words, tuple(factor), kernel.dim))
    raise BudgetExhaustedError("meataxe tries", tries, module.name)


def is_irreducible(module: GModule, rng: Optional[np.random.Generator] = None) -> bool:
    return meataxe_split(module, rng).irreducible


def is_isomorphic(a: GModule, b: GModule) -> bool:
    """Isomorphism test for irreducible modules: equal dimension and a nonzero map"""
    return a.dim == b.dim and bool(hom_space(a, b))


@dataclass
class CompositionFactor:
    module: GModule
    multiplicity: int


def composition_series_factors(module: GModule, rng: Optional[np.random.Generator] = None) -> List[GModule]:
    """All composition factors with repetition, bottom of the series first"""
    rng = rng or np.random.default_rng(0)
    if module.dim == 0:
        return []
    result = meataxe_split(module, rng)
    if result.irreducible:
        return [module]
    sub = module.submodule(result.submodule)
    quotient, _ = module.quotient(result.submodule)
    return composition_series_factors(sub, rng) + composition_series_factors(quotient, rng)


def composition_factors(module: GModule, rng: Optional[np.random.Generator] = None) -> List[CompositionFactor]:
    """Isomorphism classes of composition factors with multiplicities, by first appearance"""
    classes: List[CompositionFactor] = []
    for factor in composition_series_factors(module, rng):
        for known in classes:
            if is_isomorphic(known.module, factor):
                known.multiplicity += 1
                break
        else:
            classes.append(CompositionFactor(factor, 1))
    logger.info("%s: composition factor dims %s", module.name,
                [(c.module.dim, c.multiplicity) for c in classes])
    return classes


def socle(module: GModule, irreducibles: Sequence[GModule]) -> Subspace:
    """Sum of the images of all maps from the given irreducibles"""
    total = Subspace.zero(module.p, module.dim)
    for simple in irreducibles:
        for phi in hom_space(simple, module):
            total = subspace_sum(total, phi.image())
    return total


def socle_series(module: GModule, irreducibles: Sequence[GModule], max_layers: int = 0) -> List[Subspace]:
    """
    Ascending socle series soc_1 < soc_2 < ... as subspaces of the module.

    Stops at the whole module, or after max_layers layers when max_layers > 0.
    """
    layers: List[Subspace] = []
    current = Subspace.zero(module.p, module.dim)
    while current.dim < module.dim:
        if max_layers and len(layers) == max_layers:
            break
        quotient, quo = module.quotient(current)
        layer = socle(quotient, irreducibles)
        if layer.dim == 0:
            raise ValueError(f"the given irreducibles do not cover {module.name}")
        current = subspace_sum(current, Subspace.span(module.p, module.dim, quo.lift(layer.basis)))
        layers.append(current)
    return layers


def radical(module: GModule, irreducibles: Sequence[GModule]) -> Subspace:
    """rad(W) as the annihilator of soc(W*), using the duals of the given irreducibles"""
    dual_socle = socle(module.dual(), [s.dual() for s in irreducibles])
    if dual_socle.dim == 0:
        return Subspace.full(module.p, module.dim)
    return nullspace(dual_socle.basis, module.p)


def head_via_dual(module: GModule, irreducibles: Sequence[GModule]) -> Tuple[Subspace, GModule]:
    """
    Radical and head W / rad(W).

    Returns:
        tuple: (radical subspace, head module)
    """
    rad = radical(module, irreducibles)
    head, _ = module.quotient(rad, name=f"head({module.name})")
    return rad, head


@dataclass
class IndecomposabilityReport:
    """Fitting-lemma test on End_G(W): local ring iff every endomorphism is nilpotent or invertible"""

    indecomposable: bool
    endomorphism_dim: int
    exhaustive: bool
    witness_rank: Optional[int] = None
    checked: int = field(default=0)
    method: str = "enumeration"


def _stable_rank(matrix: np.ndarray, p: int) -> int:
    n = matrix.shape[0]
    power = matrix
    steps = 1
    while steps < n:
        power = matmul_mod(power, power, p)
        steps *= 2
    return rank(power, p)


def _has_simple_socle(module: GModule, irreducibles: Sequence[GModule], rng: np.random.Generator) -> bool:
    soc = socle(module, irreducibles)
    return soc.dim > 0 and is_irreducible(module.submodule(soc, name=f"soc({module.name})"), rng)


def is_indecomposable(module: GModule, rng: Optional[np.random.Generator] = None,
                      samples: int = 200, irreducibles: Sequence[GModule] = ()) -> IndecomposabilityReport:
    """
    Decide indecomposability through the endomorphism ring.

    Enumerates End_G(W) when it has at most ENDOMORPHISM_ENUMERATION_LIMIT elements.
    Larger rings are settled by a simple socle when `irreducibles` holds every simple
    constituent of the socle, and otherwise by a sampled endomorphism whose stable rank
    lies strictly between 0 and dim W.

    Raises:
        BudgetExhaustedError: When sampling finds no decomposing endomorphism
    """
    p, n = module.p, module.dim
    basis = [phi.matrix.astype(np.int64) for phi in hom_space(module, module)]
    e = len(basis)
    if e <= 1:
        return IndecomposabilityReport(True, e, True, method="scalar endomorphisms")
    stacked = np.stack(basis)
    rng = rng or np.random.default_rng(0)
    if p ** e <= ENDOMORPHISM_ENUMERATION_LIMIT:
        combos = itertools.product(range(p), repeat=e)
        exhaustive = True
    else:
        if irreducibles and _has_simple_socle(module, irreducibles, rng):
            return IndecomposabilityReport(True, e, True, method="simple socle")
        combos = (tuple(int(c) for c in rng.integers(0, p, size=e)) for _ in range(samples))
        exhaustive = False
    checked = 0
    for coeffs in combos:
        checked += 1
        matrix = np.mod(np.tensordot(np.asarray(coeffs, dtype=np.int64), stacked, axes=1), p).astype(np.uint8)
        r = _stable_rank(matrix, p)
        if 0 < r < n:
            return IndecomposabilityReport(False, e, exhaustive, r, checked,
                                           "enumeration" if exhaustive else "sampled witness")
    if not exhaustive:
        raise BudgetExhaustedError("endomorphism samples", samples,
                                   f"{module.name}: no decomposition among {checked} of {p}^{e} endomorphisms")
    return IndecomposabilityReport(True, e, True, checked=checked)
