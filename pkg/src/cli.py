"""
Command Line Module
The nonsplit-ext command: constructions, the cocycle lemma, minimal degrees and certificate replay
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError

from src import app
from src.config import (ASSOCIATIVITY_TRIALS, COCYCLE_IDENTITY_TRIALS, DEFAULT_SEED, LOG_FORMAT, LOG_LEVEL,
                        MIN_DEGREE_MAX_ORDER, Budgets, RunConfig, apply_budgets)
from src.errors import BudgetExhaustedError, HypothesisError, MathematicalCheckFailed, NonsplitExtError
from src.pipelines.certificate import Certificate

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CHECK_FAILED = 2


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="Seed for the randomized steps.")
    common.add_argument("--out", type=Path, default=None, help="Write the JSON result here instead of stdout.")
    common.add_argument("--log-level", default=LOG_LEVEL, help="Logging level (DEBUG, INFO, WARNING).")
    defaults = Budgets()
    common.add_argument("--budget-schreier-sims", type=int, default=defaults.schreier_sims_generators,
                        help="Cap on strong generators in a stabilizer chain.")
    common.add_argument("--budget-meataxe", type=int, default=defaults.meataxe_tries,
                        help="Random algebra elements per Meataxe split.")
    common.add_argument("--budget-elimination", type=int, default=defaults.elimination_entries,
                        help="Largest matrix (entries) handed to row reduction.")
    common.add_argument("--budget-todd-coxeter", type=int, default=defaults.todd_coxeter_cosets,
                        help="Coset table limit for Todd-Coxeter.")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="nonsplit-ext",
        description="Nonsplit extensions of A_k as permutation groups, with replayable certificates.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    even = commands.add_parser("even", parents=[common], help="Degree 2k(k-1) construction over GF(2).")
    even.add_argument("--k", type=int, required=True)
    odd = commands.add_parser("odd", parents=[common], help="Degree pk(k-1)/2 construction for odd p dividing k.")
    odd.add_argument("--k", type=int, required=True)
    odd.add_argument("--p", type=int, required=True)
    odd.add_argument("--allow-small", action="store_true", help="Permit k < 10 (outside the theorem hypotheses).")
    for sub in (even, odd):
        sub.add_argument("--cocycle-trials", type=int, default=COCYCLE_IDENTITY_TRIALS)
        sub.add_argument("--associativity-trials", type=int, default=ASSOCIATIVITY_TRIALS)

    lemma = commands.add_parser("lemma-cocycle", parents=[common], help="Inner products of the induced cocycle.")
    lemma.add_argument("--k", type=int, required=True)

    min_degree = commands.add_parser("min-degree", parents=[common], help="Minimal faithful degree of a small group.")
    source = min_degree.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", type=Path, help="Group file: degree line, then one generator per line.")
    source.add_argument("--group", choices=sorted(app.NAMED_GROUPS), help="A built-in group.")
    min_degree.add_argument("--max-order", type=int, default=MIN_DEGREE_MAX_ORDER)

    verify = commands.add_parser("verify", parents=[common], help="Replay the checks of a certificate file.")
    verify.add_argument("certificate", type=Path)
    return parser


def _budgets(args: argparse.Namespace) -> Budgets:
    return Budgets(schreier_sims_generators=args.budget_schreier_sims, meataxe_tries=args.budget_meataxe,
                   elimination_entries=args.budget_elimination, todd_coxeter_cosets=args.budget_todd_coxeter)


def _emit(text: str, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text, encoding="utf-8")
        logger.info("Wrote %s", out)


def _run(args: argparse.Namespace) -> int:
    budgets = _budgets(args)
    if args.command in ("even", "odd", "lemma-cocycle"):
        config = RunConfig(command=args.command, k=args.k, p=getattr(args, "p", 2), seed=args.seed,
                           budgets=budgets, allow_small=getattr(args, "allow_small", False),
                           cocycle_trials=getattr(args, "cocycle_trials", COCYCLE_IDENTITY_TRIALS),
                           associativity_trials=getattr(args, "associativity_trials", ASSOCIATIVITY_TRIALS))
        result = app.run_construction(config)
        _emit(result.to_json(), args.out)
        if isinstance(result, Certificate) and not result.positive:
            logger.error("Certificate is not positive")
            return EXIT_CHECK_FAILED
        return EXIT_OK

    apply_budgets(budgets)
    if args.command == "min-degree":
        report = app.min_degree(args.input, args.group, args.max_order)
        _emit(report.to_json(), args.out)
        return EXIT_OK

    report = app.verify_certificate(args.certificate)
    _emit(report.model_dump_json(indent=2) + "\n", args.out)
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def main(argv: Optional[List[str]] = None) -> int:
    """
    Entry point.

    Returns:
        int: 0 when every certificate is positive, 2 when a mathematical check
        failed, 1 on usage or resource errors
    """
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=str(args.log_level).upper(), format=LOG_FORMAT, stream=sys.stderr)
    try:
        return _run(args)
    except MathematicalCheckFailed as exc:
        logger.error("Check failed at stage %s: %s", exc.stage, exc.detail)
        return EXIT_CHECK_FAILED
    except (HypothesisError, ValidationError) as exc:
        logger.error("Invalid parameters: %s", exc)
        return EXIT_USAGE
    except BudgetExhaustedError as exc:
        logger.error("Resource budget exhausted: %s", exc)
        return EXIT_USAGE
    except (NonsplitExtError, ValueError, OSError) as exc:
        logger.error("%s", exc)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
