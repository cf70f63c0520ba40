import argparse
import logging
import sys
from contextlib import ExitStack
from typing import List, NoReturn, Optional, Sequence

from pydantic import ValidationError
from src.config import Settings, get_settings
from src.exceptions import (
    BenchmarkException,
    ConfigurationError,
    DualizationException,
    PipelineException,
    TableArgumentError,
    TableException,
    TargetNotUsableError,
)
from src.schemas.dualize.models import DualizationEngine
from src.schemas.pipeline.models import PipelineKind
from src.services.bench.factory import make_benchmark_sweep
from src.services.bench.sweep import emit_csv
from src.services.dualize.sinks import TransversalDumpSink
from src.services.pipeline.factory import make_run_config
from src.services.pipeline.formatting import render_implications, render_relevance_csv, render_tsup_csv
from src.services.pipeline.relevance import run_relevance
from src.services.pipeline.runner import run_pipeline
from src.services.table.parser import load_table

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_TARGET_NOT_USABLE = 2

PIPELINES = {"full": PipelineKind.FULL, "small": PipelineKind.SMALL_SPACE}
ENGINES = {"rs": DualizationEngine.REVERSE_SEARCH, "bf": DualizationEngine.BRUTEFORCE}


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_target_range(text: str) -> List[int]:
    """Parse ``N`` or an inclusive ``A-B`` range of 1-based columns."""
    try:
        if "-" in text:
            start_text, end_text = text.split("-", 1)
            start, end = int(start_text), int(end_text)
        else:
            start = end = int(text)
    except ValueError:
        raise TableArgumentError(f"invalid target range {text!r}; expected N or A-B")
    if start < 1 or end < start:
        raise TableArgumentError(f"invalid target range {text!r}")
    return list(range(start, end + 1))


def _write(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(text)


def cmd_run(args: argparse.Namespace, settings: Settings) -> int:
    table = load_table(args.input)
    cfg = make_run_config(
        target=args.target,
        minsup=args.minsup,
        pipeline=PIPELINES[args.pipeline] if args.pipeline else None,
        engine=ENGINES[args.engine] if args.engine else None,
        negate_target=args.negate,
        cap=args.cap,
        settings=settings,
    )

    with ExitStack() as stack:
        observer = None
        if args.dump_transversals:
            observer = TransversalDumpSink(stack.enter_context(open(args.dump_transversals, "w", encoding="utf-8")))
        report = run_pipeline(table, cfg, observer=observer, settings=settings)

    if cfg.pipeline == PipelineKind.FULL or args.emit_implications:
        _write(render_implications(report), args.emit_implications)
    _write(render_tsup_csv(report.tsup, settings.pipeline.tsup_decimals), args.emit_tsup)
    return EXIT_OK


def cmd_relevance(args: argparse.Namespace, settings: Settings) -> int:
    table = load_table(args.input)
    minsup = settings.pipeline.minsup if args.minsup is None else args.minsup
    ranked, _, _ = run_relevance(table, args.target, minsup=minsup, settings=settings)
    _write(render_relevance_csv(ranked, settings.pipeline.tsup_decimals), args.out)
    return EXIT_OK


def cmd_bench(args: argparse.Namespace, settings: Settings) -> int:
    table = load_table(args.input)
    targets = parse_target_range(args.targets) if args.targets else list(range(1, table.n_cols + 1))
    minsup = settings.pipeline.minsup if args.minsup is None else args.minsup

    rows = make_benchmark_sweep(workers=args.workers, settings=settings).sweep(table, targets, minsup)
    if args.out is None:
        emit_csv(rows, sys.stdout)
    else:
        emit_csv(rows, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="dbasis", description="Mine implications with a fixed consequent and rank columns by total support")
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    common = _ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, help="Binary table file")
    common.add_argument("--minsup", type=int, default=None, help="Minimal support (default from settings)")

    run = subparsers.add_parser("run", parents=[common], help="Run one pipeline on one target column")
    run.add_argument("--target", type=int, required=True, help="1-based target column")
    run.add_argument("--pipeline", choices=sorted(PIPELINES), default=None)
    run.add_argument("--engine", choices=sorted(ENGINES), default=None)
    run.add_argument("--negate", action="store_true", help="Replace the target column by its complement")
    run.add_argument("--emit-implications", default=None, metavar="PATH", help="Implication listing (full pipeline)")
    run.add_argument("--emit-tsup", default=None, metavar="PATH", help="Total support CSV")
    run.add_argument("--cap", type=int, default=None, metavar="N", help="Stop after N transversals")
    run.add_argument("--dump-transversals", default=None, metavar="PATH", help="Write every transversal, one per line")
    run.set_defaults(handler=cmd_run)

    rel = subparsers.add_parser("relevance", parents=[common], help="Rank columns by relevance to a target")
    rel.add_argument("--target", type=int, required=True, help="1-based target column")
    rel.add_argument("--out", default=None, metavar="PATH")
    rel.set_defaults(handler=cmd_relevance)

    bench = subparsers.add_parser("bench", parents=[common], help="Compare both pipelines over a range of targets")
    bench.add_argument("--targets", default=None, help="1-based inclusive range A-B (default: every column)")
    bench.add_argument("--workers", type=int, default=None, metavar="N")
    bench.add_argument("--out", default=None, metavar="PATH")
    bench.set_defaults(handler=cmd_bench)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    try:
        settings = get_settings()
    except ValidationError as e:
        print(f"error: invalid configuration: {e}", file=sys.stderr)
        return EXIT_USAGE

    logging.basicConfig(level=settings.log_level, format="%(asctime)s - %(name)s - %(levelname)s - %(message)s")

    try:
        return args.handler(args, settings)
    except TargetNotUsableError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_TARGET_NOT_USABLE
    except (
        TableException,
        DualizationException,
        PipelineException,
        BenchmarkException,
        ConfigurationError,
        ValidationError,
        OSError,
    ) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
