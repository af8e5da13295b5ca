"""Command-line interface.

Subcommands: compute (full report), bounds (count bounds and attainable
levels), implied-weights, axioms (randomized verification suite),
compare (corrected vs naive aggregate across a dependence-entry sweep).

Exit codes: 0 success, 1 validation error, 2 axiom violation, 3 I/O
error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

import numpy as np

from .aggregation import fgt_naive, fgt_network_adjusted
from .axioms import GeneratorSettings, run_axiom_suite
from .bounds import ENUMERATION_LIMIT, attainable_scores, bounds_summary
from .core import DependenceStructure, MethodologyConfig
from .dataio import (
    _round12,
    load_config_document,
    load_dataset,
    render_report,
    resolve_methodology,
    run_report,
)
from .errors import NetpovertyError, ValidationError, WriteError
from .weights import implied_weights


def _add_config_arg(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", required=True, help="methodology config (JSON)")


def _add_k_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--alpha", type=float, default=None, help="override alpha")
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--k", type=float, default=None, help="override k (absolute)")
    group.add_argument(
        "--k-fraction",
        type=float,
        default=None,
        help="override k as a fraction of the weighted count ceiling",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="netpoverty",
        description="Dependence-aware multidimensional poverty measurement",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="compute a poverty report")
    compute.add_argument("--dataset", required=True, help="achievements CSV")
    _add_config_arg(compute)
    _add_k_args(compute)
    compute.add_argument("--out", default=None, help="report path (default: stdout)")
    compute.add_argument(
        "--diagnostic-naive",
        action="store_true",
        help="also report the uncorrected (manipulable) aggregate",
    )

    bounds = sub.add_parser("bounds", help="count bounds, jumps, attainable levels")
    _add_config_arg(bounds)
    bounds.add_argument("--out", default=None)

    implied = sub.add_parser(
        "implied-weights", help="weights implied by a symmetric structure"
    )
    _add_config_arg(implied)
    implied.add_argument("--out", default=None)

    axioms = sub.add_parser("axioms", help="run the axiom verification suite")
    _add_config_arg(axioms)
    axioms.add_argument("--alpha", type=float, default=None, help="override alpha")
    axioms.add_argument("--trials", type=int, default=200)
    axioms.add_argument("--seed", type=int, default=0)
    axioms.add_argument("--out", default=None)

    compare = sub.add_parser(
        "compare", help="corrected vs naive aggregate while one entry sweeps 0..1"
    )
    compare.add_argument("--dataset", required=True)
    _add_config_arg(compare)
    _add_k_args(compare)
    compare.add_argument("--row", type=int, required=True, help="affected dimension (1-based)")
    compare.add_argument("--col", type=int, required=True, help="affecting dimension (1-based)")
    compare.add_argument("--steps", type=int, default=11, help="sweep points (default 11)")
    compare.add_argument("--out", default=None)
    return parser


def _emit(text: str, out_path) -> None:
    if out_path is None:
        sys.stdout.write(text)
        return
    try:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise WriteError(f"could not write {out_path}: {exc}") from exc


def _warn_k_gap(config: MethodologyConfig) -> None:
    """Warn when k sits strictly inside a gap between attainable count levels."""
    if config.d > ENUMERATION_LIMIT:
        return
    levels = np.unique(attainable_scores(config.structure, config.weights))
    k = config.k
    # levels and the ceiling come from different float routes; treat
    # near-coincidence as on-level rather than warning spuriously
    tol = 1e-9 * max(1.0, abs(k))
    if np.any(np.abs(levels - k) <= tol):
        return
    if k > levels[-1]:
        print(
            f"warning: k = {k:g} exceeds the highest attainable count "
            f"{levels[-1]:g}; nobody can be identified as poor",
            file=sys.stderr,
        )
        return
    idx = int(np.searchsorted(levels, k))
    lo, hi = levels[idx - 1], levels[idx]
    print(
        f"warning: k = {k:g} lies strictly between attainable counts "
        f"{lo:g} and {hi:g}; any cutoff in ({lo:g}, {hi:g}] identifies the "
        f"same poor set",
        file=sys.stderr,
    )


def _cmd_compute(args) -> int:
    dataset = load_dataset(args.dataset)
    config = resolve_methodology(
        load_config_document(args.config),
        alpha_override=args.alpha,
        k_override=args.k,
        k_fraction_override=args.k_fraction,
    )
    _warn_k_gap(config)
    report = run_report(
        dataset, config, out_path=args.out, diagnostic_naive=args.diagnostic_naive
    )
    if args.out is None:
        sys.stdout.write(render_report(report))
    return 0


def _cmd_bounds(args) -> int:
    doc = load_config_document(args.config)
    summary = bounds_summary(doc.structure, doc.weights)
    payload = {
        "d": doc.structure.d,
        "d_bar": _round12(summary.upper),
        "d_under": _round12(summary.lower_nonzero),
        "d_tilde": _round12(summary.weighted_upper),
        "deltas": [_round12(v) for v in summary.jumps],
        "sigma": _round12(summary.entry_total),
        "sigma_cols": [_round12(v) for v in summary.column_totals],
        "attainable_scores": (
            [_round12(v) for v in attainable_scores(doc.structure, doc.weights)]
            if doc.structure.d <= ENUMERATION_LIMIT
            else None
        ),
    }
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


def _cmd_implied_weights(args) -> int:
    doc = load_config_document(args.config)
    result = implied_weights(doc.structure)
    summary = bounds_summary(doc.structure)
    payload = {
        "weights": [_round12(v) for v in result.weights.values],
        "deltas": [_round12(v) for v in summary.jumps],
        "sigma_cols": [_round12(v) for v in summary.column_totals],
        "d_bar": _round12(result.upper),
    }
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


def _cmd_axioms(args) -> int:
    doc = load_config_document(args.config)
    config = resolve_methodology(doc, alpha_override=args.alpha)
    settings = GeneratorSettings(trials=args.trials, seed=args.seed)
    reports = run_axiom_suite(config, settings)
    lines = "".join(json.dumps(asdict(r)) + "\n" for r in reports)
    _emit(lines, args.out)
    if any(r.status == "fail" for r in reports):
        return 2
    return 0


def _cmd_compare(args) -> int:
    dataset = load_dataset(args.dataset)
    doc = load_config_document(args.config)
    base = resolve_methodology(
        doc,
        alpha_override=args.alpha,
        k_override=args.k,
        k_fraction_override=args.k_fraction,
    )
    d = base.d
    row, col = args.row, args.col
    if not (1 <= row <= d and 1 <= col <= d) or row == col:
        raise ValidationError(f"--row/--col must be distinct dimensions in 1..{d}")
    if args.steps < 2:
        raise ValidationError("--steps must be at least 2")

    records = []
    y = dataset.achievements
    for t in range(args.steps):
        entry = t / (args.steps - 1)
        m = np.array(base.structure.entries, copy=True)
        m[row - 1, col - 1] = entry
        structure = DependenceStructure(m)
        adjusted = fgt_network_adjusted(
            y, base.cutoffs, structure, base.weights, base.alpha, base.k
        )
        naive = fgt_naive(y, base.cutoffs, structure, base.alpha, base.k)
        records.append(
            {
                "entry_value": _round12(entry),
                "fgt_adjusted": _round12(adjusted.value),
                "fgt_naive": _round12(naive.value),
                "naive_numerator": _round12(naive.value * naive.denominator),
            }
        )
    _emit(json.dumps(records, indent=2) + "\n", args.out)
    return 0


_COMMANDS = {
    "compute": _cmd_compute,
    "bounds": _cmd_bounds,
    "implied-weights": _cmd_implied_weights,
    "axioms": _cmd_axioms,
    "compare": _cmd_compare,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (WriteError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except NetpovertyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
