"""
Main Application Module
Orchestrates the constructions, replay verification and the minimal-degree brute force
"""
import logging
from pathlib import Path
from typing import Optional, Tuple, Union

from src.config import MIN_DEGREE_MAX_ORDER, RunConfig, apply_budgets
from src.errors import MathematicalCheckFailed, NonsplitExtError
from src.groups.named_groups import alternating_group
from src.groups.perm_group import PermGroup
from src.pipelines.certificate import Certificate
from src.pipelines.even import run_even
from src.pipelines.lemma import LemmaReport, verify_cocycle_lemma
from src.pipelines.min_degree import MinDegreeReport, analyze_min_degree, parse_group_file, special_linear_group
from src.pipelines.odd import run_odd
from src.pipelines.verify import VerifyReport, verify_certificate_file

logger = logging.getLogger(__name__)

RunResult = Union[Certificate, LemmaReport]

# Built-in groups for the minimal-degree brute force
NAMED_GROUPS = {
    "A5": lambda: alternating_group(5),
    "SL(2,3)": lambda: special_linear_group(3),
    "SL(2,5)": lambda: special_linear_group(5),
}


def run_construction(config: RunConfig) -> RunResult:
    """
    Run the construction named by a validated RunConfig.

    Args:
        config (RunConfig): command "even", "odd" or "lemma-cocycle" with its parameters

    Returns:
        Certificate for even/odd, LemmaReport for lemma-cocycle
    """
    apply_budgets(config.budgets)
    if config.command == "even":
        result = run_even(config.k, config.seed, config.cocycle_trials, config.associativity_trials)
    elif config.command == "odd":
        result = run_odd(config.k, config.p, config.seed, config.allow_small, config.cocycle_trials,
                         config.associativity_trials)
    elif config.command == "lemma-cocycle":
        result = verify_cocycle_lemma(config.k)
    else:
        raise ValueError(f"{config.command} is not a construction")
    if config.out is not None:
        write_result(result, config.out)
    return result


def write_result(result: Union[RunResult, MinDegreeReport], out: Path) -> Path:
    out = Path(out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(result.to_json(), encoding="utf-8")
    logger.info("Wrote %s", out)
    return out


def verify_certificate(path: Path) -> VerifyReport:
    """Replay the checks stored in a certificate file"""
    return verify_certificate_file(Path(path))


def load_group(source: Optional[Union[str, Path]] = None, name: Optional[str] = None) -> PermGroup:
    """A group from a file (or its text) or from NAMED_GROUPS"""
    if name:
        if name not in NAMED_GROUPS:
            raise ValueError(f"unknown group {name!r}; choose from {sorted(NAMED_GROUPS)}")
        return NAMED_GROUPS[name]()
    if source is None:
        raise ValueError("a group file or a group name is required")
    return parse_group_file(source)


def min_degree(source: Optional[Union[str, Path]] = None, name: Optional[str] = None,
               max_order: int = MIN_DEGREE_MAX_ORDER) -> MinDegreeReport:
    return analyze_min_degree(load_group(source, name), max_order)


def run_for_display(config: RunConfig) -> Tuple[Optional[RunResult], str]:
    """
    Run a construction and turn failures into a message for the UI.

    Returns:
        tuple: (result or None, status message)
    """
    try:
        result = run_construction(config)
    except MathematicalCheckFailed as exc:
        return None, f"Check failed at stage '{exc.stage}': {exc.detail}"
    except (NonsplitExtError, ValueError) as exc:
        return None, f"Error: {exc}"
    if isinstance(result, Certificate) and not result.positive:
        return result, "Finished, but the certificate is not positive"
    return result, "Successfully finished"
