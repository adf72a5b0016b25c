"""
Modules Package

Group modules over GF(p), their constructions, homomorphisms and the meataxe.
"""
from .constructions import (PairVectors, character_module, natural_module, pair_permutation_module,
                            sign_induced_module, standard_module_L, theta, theta_module,
                            trivial_module, wedge_square, y_component)
from .gmodule import GModule, ModuleMap
from .hom import fixed_points, g_core, hom_space, spin, spin_under
from .meataxe import (composition_factors, head_via_dual, is_indecomposable, is_irreducible,
                      meataxe_split, radical, socle, socle_series)

__all__ = [
    "GModule", "ModuleMap", "PairVectors", "pair_permutation_module", "sign_induced_module",
    "standard_module_L", "wedge_square", "trivial_module", "character_module", "natural_module",
    "theta", "theta_module", "y_component", "spin", "spin_under", "g_core", "fixed_points",
    "hom_space", "meataxe_split", "is_irreducible", "composition_factors", "socle",
    "socle_series", "radical", "head_via_dual", "is_indecomposable",
]
