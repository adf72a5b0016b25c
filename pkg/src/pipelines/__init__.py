"""
Pipelines Package

End-to-end constructions, the cocycle lemma check, the minimal-degree brute force,
certificates and their replay.
"""
from .certificate import Certificate
from .even import build_even, run_even
from .lemma import LemmaReport, verify_cocycle_lemma
from .min_degree import (MinDegreeReport, analyze_min_degree, min_faithful_degree, parse_group_file,
                         special_linear_group)
from .odd import build_odd, run_odd
from .verify import VerifyReport, verify_certificate, verify_certificate_file

__all__ = [
    "Certificate", "build_even", "run_even", "build_odd", "run_odd", "LemmaReport",
    "verify_cocycle_lemma", "MinDegreeReport", "analyze_min_degree", "min_faithful_degree",
    "parse_group_file", "special_linear_group", "VerifyReport", "verify_certificate",
    "verify_certificate_file",
]
