"""
Groups Package

Permutations, permutation groups, stabilizer chains, presentations and the
coset representatives used by the constructions.
"""
from .named_groups import (alternating_group, alternating_subgroup, carmichael_group,
                           pointwise_pair_stabilizer, symmetric_group,
                           young_pair_stabilizer)
from .pairs import ordered_pair_coset_reps, pair_coset_reps, pair_index, pair_list
from .perm_group import Orbit, PermGroup
from .permutation import Permutation
from .presentations import Presentation, Word, factor_word, presentation_of

__all__ = [
    "Permutation", "PermGroup", "Orbit", "Presentation", "Word", "factor_word",
    "presentation_of", "alternating_group", "alternating_subgroup", "carmichael_group",
    "symmetric_group", "young_pair_stabilizer", "pointwise_pair_stabilizer",
    "pair_coset_reps", "ordered_pair_coset_reps", "pair_list", "pair_index",
]
