# Command-line front end: analyze a structure, verify a theorem suite, search for counterexamples

import argparse
import logging
import sys
from typing import Optional, Sequence

from .catalog import search_counterexample
from .config import load_settings
from .configio import build_analysis_target, build_catalog, parse_search, read_document
from .errors import (
    AxiomViolation,
    ConfigError,
    DegenerateRing,
    KindMismatch,
    RadicalLabError,
    RingMismatch,
    SizeGuardExceeded,
    UnknownSuite,
)
from .radicals import radical_report, ring_properties
from .reports import (
    analysis_document,
    flags_frame,
    render_analysis,
    render_search,
    render_suite,
    search_document,
    suite_frame,
    suite_document,
    write_csv,
    write_json,
)
from .suites import SUITES, run_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

_USAGE_ERRORS = (ConfigError, UnknownSuite, AxiomViolation, DegenerateRing, KindMismatch, RingMismatch)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="radical-lab",
        description="Envelopes, prime and completely prime radicals of finite modules, checked exhaustively.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Log debug messages.")
    parser.add_argument("-q", "--quiet", action="store_true", help="Hide progress bars.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    analyze = subparsers.add_parser("analyze", help="Radicals and class flags of one ring or module.")
    analyze.add_argument("config", help="JSON document with a 'ring' and an optional 'module'.")
    analyze.add_argument("--json", dest="json_path", help="Write the full report as JSON.")
    analyze.add_argument("--csv", dest="csv_path", help="Write the flag table as CSV.")

    verify = subparsers.add_parser("verify", help="Run a theorem suite over a catalog.")
    verify.add_argument("suite", help="Suite name (see list-suites).")
    verify.add_argument("--catalog", help="JSON catalog replacing the default one.")
    verify.add_argument("--json", dest="json_path", help="Write per-instance rows as JSON.")
    verify.add_argument("--csv", dest="csv_path", help="Write per-instance rows as CSV.")
    verify.add_argument("--jobs", type=int, default=1, help="Worker processes for the instance fan-out.")

    search = subparsers.add_parser("search", help="Look for a structure satisfying a flag formula.")
    search.add_argument("config", help="JSON document with 'predicate' and 'families'.")
    search.add_argument("--budget", type=int, help="Maximum number of candidates to examine.")
    search.add_argument("--json", dest="json_path", help="Write the result and witness tables as JSON.")

    subparsers.add_parser("list-suites", help="Show the available suites.")
    return parser


def _progress(args):
    return not args.quiet and sys.stderr.isatty()


def cmd_analyze(args, settings):
    ring, module = build_analysis_target(read_document(args.config), settings=settings)
    report = radical_report(module, settings=settings)
    props = ring_properties(ring, settings=settings)
    print(render_analysis(report, props))
    if args.json_path:
        write_json(analysis_document(report, props), args.json_path)
    if args.csv_path:
        write_csv(flags_frame(report, props), args.csv_path)
    return EXIT_OK


def cmd_verify(args, settings):
    source = None
    if args.catalog:
        source = read_document(args.catalog)
        # fail fast on a bad catalog before any worker starts
        build_catalog(source, settings=settings)
    result = run_suite(args.suite, catalog_source=source, settings=settings,
                       jobs=max(1, args.jobs), progress=_progress(args))
    print(render_suite(result))
    if args.json_path:
        write_json(suite_document(result), args.json_path)
    if args.csv_path:
        write_csv(suite_frame(result), args.csv_path)
    return EXIT_OK if result.passed else EXIT_FAILURE


def cmd_search(args, settings):
    cfg = parse_search(read_document(args.config))
    budget = args.budget if args.budget is not None else cfg.budget
    result = search_counterexample(cfg.predicate, cfg.generator(), budget,
                                   settings=settings, progress=_progress(args))
    print(render_search(result))
    if args.json_path:
        write_json(search_document(result), args.json_path)
    # an absent witness after a complete enumeration is an answer
    return EXIT_BUDGET if result.witness is None and result.stats["exhausted"] else EXIT_OK


def cmd_list_suites(args, settings):
    width = max(len(name) for name in SUITES)
    for name, entry in SUITES.items():
        print(f"{name.ljust(width)}  {entry.description}")
    return EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "verify": cmd_verify,
    "search": cmd_search,
    "list-suites": cmd_list_suites,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        settings = load_settings()
        return COMMANDS[args.command](args, settings)
    except SizeGuardExceeded as err:
        print(f"size guard: {err}", file=sys.stderr)
        return EXIT_BUDGET
    except _USAGE_ERRORS as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except RadicalLabError as err:
        print(f"failure: {type(err).__name__}: {err}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    raise SystemExit(main())
