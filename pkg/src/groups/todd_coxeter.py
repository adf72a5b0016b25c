"""
Todd-Coxeter Module
Order of an abstractly presented group by coset enumeration (oracle, small groups only)
"""
import logging
from typing import Optional

from sympy.combinatorics.fp_groups import FpGroup
from sympy.combinatorics.free_groups import free_group

from src.config import active_budgets
from src.errors import BudgetExhaustedError
from src.groups.presentations import Presentation

logger = logging.getLogger(__name__)


def to_fp_group(presentation: Presentation) -> FpGroup:
    """Translate relator words into a sympy finitely presented group"""
    names = ", ".join(f"x{i + 1}" for i in range(presentation.generator_count))
    free, *letters = free_group(names)
    relators = []
    for word in presentation.relators:
        element = free.identity
        for letter in word:
            symbol = letters[abs(letter) - 1]
            element = element * (symbol if letter > 0 else symbol ** -1)
        relators.append(element)
    return FpGroup(free, relators)


def todd_coxeter_order(presentation: Presentation, max_cosets: Optional[int] = None) -> int:
    """
    Enumerate the cosets of the trivial subgroup.

    Args:
        presentation (Presentation): Generators and relators
        max_cosets (int): Coset table limit

    Returns:
        int: Order of the presented group

    Raises:
        BudgetExhaustedError: If the enumeration defines more than max_cosets cosets
    """
    max_cosets = max_cosets or active_budgets().todd_coxeter_cosets
    group = to_fp_group(presentation)
    try:
        table = group.coset_enumeration([], max_cosets=max_cosets)
    except ValueError as exc:
        raise BudgetExhaustedError("todd-coxeter cosets", max_cosets, presentation.name) from exc
    table.compress()
    order = len(table.table)
    logger.debug("Todd-Coxeter: %s has order %d", presentation.name, order)
    return order
