"""Command-line surface.

Subcommands: measure, locc, wootters, scan, paper-examples, schmidt,
emit-state. Exit codes: 0 success, 1 domain error, 2 parse/usage error,
3 self-check failure.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .errors import EnthierError, ParseError, SelfCheckFailed
from .linalg import seeded_rng
from .locc import (
    COMPARABLE,
    INCOMPARABLE_FULL,
    INCOMPARABLE_MIXED,
    conversion_class,
    hierarchy_dominance,
    nielsen_verdict,
)
from .measures import (
    af_concurrence,
    eof_from_concurrence,
    eof_pure,
    hierarchy,
    hierarchy_via_invariants,
    hierarchy_via_minors,
    invariants,
    ppt_check,
    renyi_entropy,
    rungta_concurrence,
    spin_flip_lambdas,
    wootters_concurrence,
)
from .reference import build_report
from .report import ReportDocument
from .statefile import parse_density, parse_state, state_document
from .states import random_pure, schmidt_rank, schmidt_spectrum

_HIERARCHY_PATHS = {
    "eig": hierarchy,
    "minors": hierarchy_via_minors,
    "newton": hierarchy_via_invariants,
}


def _digest(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _provenance(**extra) -> dict:
    base = {"tool": "enthier", "version": __version__}
    base.update(extra)
    return base


def _renyi_orders(raw: str) -> list[float]:
    try:
        orders = [float(part) for part in raw.split(",") if part.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad order list {raw!r}") from exc
    if not orders:
        raise argparse.ArgumentTypeError("need at least one order")
    return orders


def _positive_int(raw: str) -> int:
    value = int(raw)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _cmd_measure(args) -> tuple[ReportDocument, int]:
    state = parse_state(args.state, renormalize=args.renormalize)
    spectrum = schmidt_spectrum(state)
    levels = _HIERARCHY_PATHS[args.path](state)
    results = {
        "dims": [state.dim_a, state.dim_b],
        "schmidt_spectrum": [float(v) for v in spectrum],
        "schmidt_rank": schmidt_rank(spectrum),
        "hierarchy_path": args.path,
        "hierarchy": [float(v) for v in levels],
        "invariants": [float(v) for v in invariants(state)],
        "renyi": {str(order): renyi_entropy(state, order) for order in args.renyi},
        "eof": eof_pure(state),
        "af_concurrence": af_concurrence(state),
        "rungta_concurrence": rungta_concurrence(state),
    }
    provenance = _provenance(input_digest=_digest(args.state))
    return ReportDocument("measure", results, provenance), 0


def _cmd_locc(args) -> tuple[ReportDocument, int]:
    source = parse_state(args.source, renormalize=args.renormalize)
    target = parse_state(args.target, renormalize=args.renormalize)
    verdict = nielsen_verdict(source, target)
    dominance = hierarchy_dominance(source, target)
    results = {
        "verdict": verdict.verdict.value,
        "source_prefix_sums": [float(v) for v in verdict.source_prefix_sums],
        "target_prefix_sums": [float(v) for v in verdict.target_prefix_sums],
        "dominance": {
            "slacks": [float(v) for v in dominance.slacks],
            "source_dominates": dominance.source_dominates,
            "target_dominates": dominance.target_dominates,
            "mixed": dominance.mixed,
        },
        "conversion_class": conversion_class(source, target),
    }
    provenance = _provenance(
        source_digest=_digest(args.source), target_digest=_digest(args.target)
    )
    return ReportDocument("locc", results, provenance), 0


def _cmd_wootters(args) -> tuple[ReportDocument, int]:
    rho = parse_density(args.density)
    lambdas = spin_flip_lambdas(rho)
    concurrence = wootters_concurrence(rho)
    results = {
        "concurrence": concurrence,
        "eof": eof_from_concurrence(concurrence),
        "lambdas": [float(v) for v in lambdas],
        "ppt": ppt_check(rho).value,
    }
    provenance = _provenance(input_digest=_digest(args.density))
    return ReportDocument("wootters", results, provenance), 0


def _cmd_schmidt(args) -> tuple[ReportDocument, int]:
    state = parse_state(args.state, renormalize=args.renormalize)
    spectrum = schmidt_spectrum(state)
    results = {
        "dims": [state.dim_a, state.dim_b],
        "schmidt_coefficients": [float(v) for v in np.sqrt(spectrum)],
        "schmidt_spectrum": [float(v) for v in spectrum],
        "schmidt_rank": schmidt_rank(spectrum),
    }
    provenance = _provenance(input_digest=_digest(args.state))
    return ReportDocument("schmidt", results, provenance), 0


def _cmd_scan(args) -> tuple[ReportDocument, int]:
    counts = {COMPARABLE: 0, INCOMPARABLE_MIXED: 0, INCOMPARABLE_FULL: 0}
    for index in range(args.samples):
        rng = seeded_rng((args.seed, index))  # per-sample stream: schedule-independent
        first = random_pure(args.dims, args.dims, rng)
        second = random_pure(args.dims, args.dims, rng)
        counts[conversion_class(first, second)] += 1
    results = {
        "dims": args.dims,
        "samples": args.samples,
        "counts": counts,
        "frequencies": {key: value / args.samples for key, value in counts.items()},
    }
    provenance = _provenance(seed=args.seed)
    return ReportDocument("scan", results, provenance), 0


def _cmd_paper_examples(args) -> tuple[ReportDocument, int]:
    results, failures = build_report()
    report = ReportDocument("paper-examples", results, _provenance())
    if failures:
        print(f"self-check failed: {', '.join(failures)}", file=sys.stderr)
        return report, 3
    return report, 0


def _cmd_emit_state(args) -> tuple[str, int]:
    state = parse_state(args.state, renormalize=args.renormalize)
    text = json.dumps(state_document(state), indent=2)
    if args.output:
        Path(args.output).write_text(text + "\n")
        return f"wrote {args.output}", 0
    return text, 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="enthier",
        description="Concurrence hierarchies, Schmidt spectra, and LOCC convertibility.",
    )
    parser.add_argument("--version", action="version", version=f"enthier {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    def add_json(sub):
        sub.add_argument("--json", action="store_true", help="machine-readable output")

    def add_renormalize(sub):
        sub.add_argument(
            "--renormalize",
            action="store_true",
            help="accept states whose norm deviates from 1 beyond the default gate",
        )

    measure = commands.add_parser("measure", help="all measures of one pure state")
    measure.add_argument("state", help="state document (JSON)")
    measure.add_argument(
        "--path",
        choices=sorted(_HIERARCHY_PATHS),
        default="eig",
        help="hierarchy computation route",
    )
    measure.add_argument(
        "--renyi",
        type=_renyi_orders,
        default=[0.5, 1.0, 2.0],
        help="comma-separated Renyi orders (default 0.5,1,2)",
    )
    add_renormalize(measure)
    add_json(measure)
    measure.set_defaults(handler=_cmd_measure)

    locc = commands.add_parser("locc", help="convertibility verdict for a state pair")
    locc.add_argument("source")
    locc.add_argument("target")
    add_renormalize(locc)
    add_json(locc)
    locc.set_defaults(handler=_cmd_locc)

    wootters = commands.add_parser("wootters", help="two-qubit mixed-state concurrence")
    wootters.add_argument("density", help="density document (JSON)")
    add_json(wootters)
    wootters.set_defaults(handler=_cmd_wootters)

    schmidt = commands.add_parser("schmidt", help="Schmidt coefficients and rank")
    schmidt.add_argument("state")
    add_renormalize(schmidt)
    add_json(schmidt)
    schmidt.set_defaults(handler=_cmd_schmidt)

    scan = commands.add_parser(
        "scan", help="frequencies of convertibility classes over random pairs"
    )
    scan.add_argument("--dims", type=_positive_int, default=3, help="local dimension")
    scan.add_argument("--samples", type=_positive_int, default=1000)
    scan.add_argument("--seed", type=int, default=0)
    add_json(scan)
    scan.set_defaults(handler=_cmd_scan)

    examples = commands.add_parser(
        "paper-examples", help="recompute the pinned worked examples and self-check them"
    )
    add_json(examples)
    examples.set_defaults(handler=_cmd_paper_examples)

    emit = commands.add_parser(
        "emit-state", help="canonicalize a state document at full precision"
    )
    emit.add_argument("state")
    emit.add_argument("-o", "--output", help="write here instead of stdout")
    add_renormalize(emit)
    emit.set_defaults(handler=_cmd_emit_state)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return 0 if code in (None, 0) else 2
    try:
        output, exit_code = args.handler(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SelfCheckFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except EnthierError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if isinstance(output, ReportDocument):
        print(output.to_json() if getattr(args, "json", False) else output.render())
    else:
        print(output)
    return exit_code


__all__ = ["build_parser", "main"]
