import numpy as np
import pytest

from src.config import Budgets, apply_budgets
from src.pipelines.even import run_even

SEED = 1729
TRIALS = 20


@pytest.fixture(autouse=True)
def default_budgets():
    apply_budgets(Budgets())
    yield
    apply_budgets(Budgets())


@pytest.fixture
def rng():
    return np.random.default_rng(SEED)


@pytest.fixture(scope="session")
def even_certificate_k7():
    return run_even(7, SEED, cocycle_trials=TRIALS, associativity_trials=TRIALS)
