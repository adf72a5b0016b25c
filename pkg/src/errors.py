"""
Errors Module
Exception hierarchy shared by the group, module, cohomology and pipeline layers
"""
from typing import Optional


class NonsplitExtError(Exception):
    """Base class for every error raised by the package"""


class DimensionMismatchError(NonsplitExtError, ValueError):
    """Operands live in different ambient spaces or over different primes"""


class NotInGroupError(NonsplitExtError, ValueError):
    """A permutation could not be factored in the requested group"""


class BudgetExhaustedError(NonsplitExtError, RuntimeError):
    """A configured resource cap was hit before the computation finished"""

    def __init__(self, resource: str, limit: int, detail: str = ""):
        self.resource = resource
        self.limit = limit
        message = f"{resource} budget of {limit} exhausted"
        if detail:
            message += f": {detail}"
        super().__init__(message)


class CosetDecompositionError(NonsplitExtError, RuntimeError):
    """An element did not decompose as stabilizer element times transversal"""


class HypothesisError(NonsplitExtError):
    """Run parameters violate the hypotheses of the requested construction"""


class MathematicalCheckFailed(NonsplitExtError):
    """
    A certificate check came out negative.

    Args:
        stage (str): Pipeline stage that produced the failing check
        detail (str): Human readable description of the mismatch
    """

    def __init__(self, stage: str, detail: str, data: Optional[dict] = None):
        self.stage = stage
        self.detail = detail
        self.data = data or {}
        super().__init__(f"[{stage}] {detail}")
