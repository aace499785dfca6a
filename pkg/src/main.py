"""einflag - Main entry point."""

import sys
import argparse
from pathlib import Path
from typing import Callable, Optional

from .flagmodel.space import make_flag_space
from .report.formatters import ReportFormat, SweepReport
from .report.records import SweepRecord, attach_duality, lemma_pair, parameter_pairs, solve_pair
from .utils.config import get_config
from .utils.errors import CertificationError, InvalidParameters
from .utils.logger import get_logger, setup_logging

EXIT_OK = 0
EXIT_FATAL = 1
EXIT_INVALID = 2
EXIT_CERTIFICATION = 3


def parse_args(argv: Optional[list[str]] = None) -> argparse.Namespace:
    """Parse command line arguments."""
    config = get_config()
    parser = argparse.ArgumentParser(
        prog="einflag",
        description="Certified invariant Einstein metrics on Sp(n)/(U(p) x U(n-p))",
    )
    parser.add_argument(
        "-v", "--verbose",
        action="store_true",
        help="Enable verbose logging",
    )
    parser.add_argument(
        "--log-file",
        action="store_true",
        help=f"Also write logs under {config.log_dir} (config: logging.to_file)",
    )

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--digits",
        type=int,
        default=config.report_digits,
        help=f"Significant digits of decimal renderings (default: {config.report_digits})",
    )
    common.add_argument(
        "--format",
        choices=[f.value for f in ReportFormat],
        default=config.report_format,
        help=f"Report format (default: {config.report_format})",
    )
    common.add_argument("--out", type=Path, help="Write the report to this file instead of stdout")
    common.add_argument("--timings", action="store_true", help="Include wall-times in the report")

    grid = argparse.ArgumentParser(add_help=False)
    grid.add_argument("--n-min", type=int, default=3, help="Smallest n of the sweep (default: 3)")
    grid.add_argument("--n-max", type=int, help="Largest n of the sweep")
    grid.add_argument(
        "--jobs",
        type=int,
        default=config.sweep_jobs,
        help=f"Number of (n, p) pipelines run in parallel (default: {config.sweep_jobs})",
    )

    commands = parser.add_subparsers(dest="command", required=True)

    solve = commands.add_parser("solve", parents=[common], help="Enumerate the Einstein metrics for one (n, p)")
    solve.add_argument("--n", type=int, required=True)
    solve.add_argument("--p", type=int, required=True)
    solve.add_argument("--with-lemmas", action="store_true", help="Also run the lemma checker")

    sweep = commands.add_parser("sweep", parents=[common, grid], help="Enumerate every (n, p) in a range")
    sweep.add_argument("--with-lemmas", action="store_true", help="Also run the lemma checker")

    lemmas = commands.add_parser("lemmas", parents=[common, grid], help="Run the lemma checker")
    lemmas.add_argument("--n", type=int)
    lemmas.add_argument("--p", type=int)

    return parser.parse_args(argv)


def _run_pairs(
    task: Callable[..., SweepRecord],
    pairs: list[tuple[int, int]],
    jobs: int,
    **kwargs,
) -> list[SweepRecord]:
    """Run task over pairs; results come back in pair order whatever the job count."""
    if jobs == 1 or len(pairs) <= 1:
        return [task(n, p, **kwargs) for n, p in pairs]

    from joblib import Parallel, delayed

    return list(Parallel(n_jobs=jobs)(delayed(task)(n, p, **kwargs) for n, p in pairs))


def _grid(args: argparse.Namespace) -> list[tuple[int, int]]:
    if args.n_max is None:
        raise InvalidParameters("--n-max is required for a range")
    if args.n_max < 3 or args.n_min < 3:
        raise InvalidParameters(f"the range needs n >= 3, got {args.n_min}..{args.n_max}")
    if args.n_min > args.n_max:
        raise InvalidParameters(f"--n-min {args.n_min} exceeds --n-max {args.n_max}")
    if args.jobs < 1 and args.jobs != -1:
        raise InvalidParameters(f"--jobs must be positive or -1, got {args.jobs}")
    return parameter_pairs(args.n_min, args.n_max)


def _emit(report: SweepReport, args: argparse.Namespace, single: bool = False) -> None:
    text = report.render(args.format, single=single)
    if args.out is not None:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_solve(args: argparse.Namespace) -> int:
    logger = get_logger("main")
    make_flag_space(args.n, args.p)
    record = solve_pair(args.n, args.p, with_lemmas=args.with_lemmas)
    report = SweepReport([record], digits=args.digits, timings=args.timings)
    _emit(report, args, single=True)
    if not record.passed:
        logger.error(f"({args.n}, {args.p}): split {record.counts} or lemma verdicts unexpected")
        return EXIT_CERTIFICATION
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    logger = get_logger("main")
    pairs = _grid(args)
    logger.info(f"Sweeping {len(pairs)} pairs with {args.jobs} job(s)")
    records = _run_pairs(solve_pair, pairs, args.jobs, with_lemmas=args.with_lemmas)
    attach_duality(records)
    report = SweepReport(records, digits=args.digits, timings=args.timings)
    _emit(report, args)
    failure = report.first_failure
    if failure is not None:
        logger.error(f"First failing pair: (n, p) = ({failure.n}, {failure.p})")
        return EXIT_CERTIFICATION
    logger.info(f"All {len(records)} pairs give the 4 + 2 split")
    return EXIT_OK


def cmd_lemmas(args: argparse.Namespace) -> int:
    logger = get_logger("main")
    if args.n is not None or args.p is not None:
        if args.n is None or args.p is None:
            raise InvalidParameters("--n and --p must be given together")
        make_flag_space(args.n, args.p)
        pairs = [(args.n, args.p)]
    else:
        pairs = _grid(args)
    records = _run_pairs(lemma_pair, pairs, getattr(args, "jobs", 1))
    report = SweepReport(records, digits=args.digits, timings=args.timings)
    _emit(report, args, single=len(pairs) == 1)
    failures = [r for r in records if not r.lemmas.passed]
    if failures:
        for record in failures:
            ids = ", ".join(v.identifier for v in record.lemmas.failures)
            logger.error(f"({record.n}, {record.p}): lemma failures {ids}")
        return EXIT_CERTIFICATION
    logger.info(f"All applicable lemmas pass for {len(records)} pair(s)")
    return EXIT_OK


COMMANDS = {
    "solve": cmd_solve,
    "sweep": cmd_sweep,
    "lemmas": cmd_lemmas,
}


def main(argv: Optional[list[str]] = None) -> int:
    """Main entry point."""
    args = parse_args(argv)

    config = get_config()
    log_level = "DEBUG" if args.verbose else config.log_level
    log_to_file = args.log_file or config.log_to_file
    setup_logging(log_level=log_level, log_to_file=log_to_file, log_dir=config.log_dir)

    logger = get_logger("main")
    logger.debug(f"Starting {config.app_name} v{config.app_version}: {args.command}")

    try:
        return COMMANDS[args.command](args)
    except InvalidParameters as e:
        logger.error(f"Invalid parameters: {e}")
        return EXIT_INVALID
    except CertificationError as e:
        logger.error(f"Certification failed: {e}")
        return EXIT_CERTIFICATION
    except KeyboardInterrupt:
        logger.info("Interrupted by user")
        return EXIT_FATAL
    except Exception as e:
        logger.exception(f"Fatal error: {e}")
        return EXIT_FATAL


if __name__ == "__main__":
    sys.exit(main())
