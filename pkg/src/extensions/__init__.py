"""
Extensions Package

The extension group H = M x_delta G, its sections over Y and X, coset actions and certificates.
"""
from .certificates import (FaithfulRecord, NonsplitRecord, Order4Report, faithfulness_certificate,
                           kernel_on_m, nonsplit_certificate, order4_sweep)
from .coset_action import PointedCosetSpace, coset_action
from .ext_group import ExtElement, ExtGroup, build_extension
from .splitting import SubgroupSection, splitting_over
from .subextension import SubextensionReport, restrict_to_subextension

__all__ = [
    "ExtElement", "ExtGroup", "build_extension", "SubgroupSection", "splitting_over",
    "PointedCosetSpace", "coset_action", "Order4Report", "order4_sweep", "NonsplitRecord",
    "nonsplit_certificate", "FaithfulRecord", "faithfulness_certificate", "kernel_on_m",
    "SubextensionReport", "restrict_to_subextension",
]
