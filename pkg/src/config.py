"""
Configuration Module
Central configuration settings and run validation for the constructions
"""
from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator

from src.errors import HypothesisError

# Reproducibility
DEFAULT_SEED = 1729  # Seed for Meataxe and random property trials

# Resource budgets
SCHREIER_SIMS_MAX_STRONG_GENERATORS = 4000  # Cap on strong generators in a stabilizer chain
MEATAXE_TRIES = 60             # Random algebra elements tried per split attempt
ELIMINATION_MAX_ENTRIES = 60_000_000  # Largest coefficient matrix handed to elimination
TODD_COXETER_MAX_COSETS = 200_000     # Coset table limit for the presentation oracle
ELIMINATION_BLOCK_ROWS = 256   # Rows reduced per block in incremental echelon updates

# Property checks embedded in certificates
COCYCLE_IDENTITY_TRIALS = 10_000   # Random triples for the 2-cocycle identity
ASSOCIATIVITY_TRIALS = 10_000      # Random triples for ExtElement associativity
ASSOCIATIVITY_SPOT_CHECKS = 20     # Triples checked when an extension is built
CLASS_INVARIANCE_TRIALS = 100      # Random coboundaries for the inner-product invariance
RANDOM_ORDER4_SAMPLES = 200        # Random coset elements whose order is computed directly

# Limits for exhaustive work
ORDER4_SWEEP_MAX_DIM = 20          # Enumerate the coset xM when dim M is at most this
ORDER_CHECK_MAX_DEGREE = 100       # Run Schreier-Sims on the image only up to this degree
ENDOMORPHISM_ENUMERATION_LIMIT = 4096  # Enumerate End(W) exhaustively below this size
MIN_DEGREE_MAX_ORDER = 400         # Order cap for the subgroup-lattice brute force
EXHAUSTIVE_CLASS_SEARCH_MAX_K = 7  # Test all three Y-classes up to this k

# Default desk-scale instances
DEFAULT_EVEN_INSTANCES = (7, 8, 11)
DEFAULT_ODD_INSTANCE = (12, 3)
LEMMA_DEGREES = (7, 11, 15)

# Logging
LOG_LEVEL = "INFO"
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

# Output
DEFAULT_OUTPUT_DIR = Path("certificates")


class Budgets(BaseModel):
    """Resource caps for one run"""

    schreier_sims_generators: int = Field(SCHREIER_SIMS_MAX_STRONG_GENERATORS, gt=0)
    meataxe_tries: int = Field(MEATAXE_TRIES, gt=0)
    elimination_entries: int = Field(ELIMINATION_MAX_ENTRIES, gt=0)
    todd_coxeter_cosets: int = Field(TODD_COXETER_MAX_COSETS, gt=0)


_active_budgets = Budgets()


def active_budgets() -> Budgets:
    """Budgets in force for the current run"""
    return _active_budgets


def apply_budgets(budgets: Budgets) -> None:
    global _active_budgets
    _active_budgets = budgets


class RunConfig(BaseModel):
    """
    Validated parameters of a single construction run.

    Note:
        The odd construction needs p odd, p | k and k >= 10; the even one needs k >= 7.
        allow_small lifts the k >= 10 bound for exploratory odd runs only.
    """

    command: Literal["even", "odd", "lemma-cocycle", "min-degree", "verify"]
    k: Optional[int] = None
    p: int = 2
    seed: int = DEFAULT_SEED
    budgets: Budgets = Field(default_factory=Budgets)
    out: Optional[Path] = None
    allow_small: bool = False
    cocycle_trials: int = Field(COCYCLE_IDENTITY_TRIALS, ge=0)
    associativity_trials: int = Field(ASSOCIATIVITY_TRIALS, ge=0)

    @model_validator(mode="after")
    def _check_hypotheses(self):
        if self.command == "even":
            if self.k is None or self.k < 7:
                raise HypothesisError("even construction needs k >= 7")
            if self.p != 2:
                raise HypothesisError("even construction works over GF(2); pass p=2")
        elif self.command == "odd":
            if self.k is None:
                raise HypothesisError("odd construction needs k")
            if self.p == 2 or not _is_prime(self.p):
                raise HypothesisError(f"odd construction needs an odd prime p, got {self.p}")
            if self.k % self.p:
                raise HypothesisError(f"odd construction needs p divides k (k={self.k}, p={self.p})")
            if self.k < 10 and not self.allow_small:
                raise HypothesisError("odd construction needs k >= 10; use --allow-small to experiment")
        elif self.command == "lemma-cocycle":
            if self.k is None or self.k % 4 != 3 or self.k < 7:
                raise HypothesisError("lemma-cocycle needs k >= 7 with k = 3 mod 4")
        return self

    @property
    def within_hypotheses(self) -> bool:
        """Whether an odd run satisfies the k >= 10 bound"""
        return not (self.command == "odd" and self.k is not None and self.k < 10)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n ** 0.5) + 1))
