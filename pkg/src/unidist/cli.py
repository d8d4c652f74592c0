"""Command-line front end.

Exit status is 0 on success, 2 on usage errors and 1 on data errors.
Data goes to ``--output`` (stdout by default); diagnostics go to stderr.

Every subcommand accepts ``--config FILE`` with ``key = value`` lines whose
keys are option names (dashes or underscores).  Command-line flags override
config values, which override built-in defaults.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .benchmark import BenchConfig, run_synthetic_benchmark
from .classifier import classify_multi, classify_pair
from .distance import AggregateMode, DeltaMode, gu_distance
from .distributions import DEFAULT_K_PER_SIDE, Prototype, QueryVector, fit_histogram, fit_prototype
from .divergences import DEFAULT_EPSILON, kl_divergence, l2_distance, pearson_divergence
from .fileio import DataError, emit_report, read_json, read_samples_csv, to_json, write_text
from .replication import replicate_all

MODES = [m.value for m in DeltaMode]
AGGS = [a.value for a in AggregateMode]


class _Formatter(argparse.ArgumentDefaultsHelpFormatter, argparse.RawDescriptionHelpFormatter):
    pass


def _coords(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _add_common(p: argparse.ArgumentParser, output=True):
    p.add_argument("--config", metavar="FILE", help="key = value file supplying option defaults")
    if output:
        p.add_argument("-o", "--output", default="-", help="output path ('-' for stdout)")


def _add_distance_opts(p: argparse.ArgumentParser):
    p.add_argument("--mode", choices=MODES, default=DeltaMode.PRORATED.value,
                   help="how the region holding the query contributes to the correction")
    p.add_argument("--agg", choices=AGGS, default=AggregateMode.L2.value,
                   help="aggregate over coordinates: root sum of squares or plain sum")


def _add_query_opts(p: argparse.ArgumentParser):
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--query", type=_coords, help="query coordinates, comma-separated")
    g.add_argument("--query-csv", metavar="FILE", help="CSV whose first data row is the query")
    p.add_argument("--header", action="store_true", help="CSV inputs start with a header row")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unidist", description="Probability-corrected distances, classification and replication.",
        formatter_class=_Formatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("fit", help="fit a prototype from a samples CSV", formatter_class=_Formatter,
                       description="Fit one scale-quantized distribution per CSV column; writes prototype JSON.")
    p.add_argument("samples", help="CSV, one row per observation, one column per feature")
    p.add_argument("--header", action="store_true", help="CSV starts with a header row")
    p.add_argument("--k-per-side", type=_positive_int, default=DEFAULT_K_PER_SIDE,
                   help="regions on each side of the median")
    p.add_argument("--name", help="prototype label (defaults to the CSV file stem)")
    _add_common(p)

    p = sub.add_parser("dist", help="corrected distance from a query to a prototype", formatter_class=_Formatter,
                       description="Per-coordinate breakdown and total distance, as JSON.")
    _add_query_opts(p)
    p.add_argument("--prototype", required=True, metavar="FILE", help="prototype JSON")
    _add_distance_opts(p)
    _add_common(p)

    p = sub.add_parser("classify", help="assign a query to the nearest prototype", formatter_class=_Formatter,
                       description="With two prototypes applies the ratio rule (ratio <= 1 picks the second); "
                                   "with more, the smallest distance wins.")
    _add_query_opts(p)
    p.add_argument("--prototype", action="append", required=True, metavar="FILE",
                   help="prototype JSON; give at least twice")
    _add_distance_opts(p)
    _add_common(p)

    p = sub.add_parser("divergence", help="KL, Pearson and L2 between two sample sets", formatter_class=_Formatter,
                       description="Histogram both sample columns on a shared binning and compare them.")
    p.add_argument("p_samples", help="CSV of samples for the first density")
    p.add_argument("q_samples", help="CSV of samples for the second density")
    p.add_argument("--header", action="store_true", help="CSV inputs start with a header row")
    p.add_argument("--column", type=int, default=0, help="0-based column to read from each CSV")
    p.add_argument("--bins", type=_positive_int, default=20, help="number of bins")
    p.add_argument("--range", type=float, nargs=2, metavar=("LO", "HI"),
                   help="binning range (default: span of both sample sets)")
    p.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON, help="per-bin smoothing constant")
    _add_common(p)

    p = sub.add_parser("replicate", help="recompute the published example tables", formatter_class=_Formatter,
                       description="Totals, ratios and decisions for the three published examples. "
                                   "Known discrepancies are flagged; the exit status stays 0.")
    p.add_argument("--example", type=int, action="append", choices=[1, 2, 3],
                   help="example id (repeatable; default all)")
    p.add_argument("--format", choices=["json", "csv"], default="json", help="report format")
    _add_common(p)

    p = sub.add_parser("bench", help="seeded synthetic recognition benchmark", formatter_class=_Formatter,
                       description="Two Gaussian classes; compares Euclidean and corrected nearest-prototype accuracy.")
    defaults = BenchConfig()
    p.add_argument("--features", type=_positive_int, default=defaults.features, help="feature count")
    p.add_argument("--separation", type=float, default=defaults.separation, help="distance between class means")
    p.add_argument("--spread", type=float, default=defaults.spread, help="per-feature standard deviation")
    p.add_argument("--samples", type=_positive_int, default=defaults.samples, help="training draws per class")
    p.add_argument("--queries", type=_positive_int, default=defaults.queries, help="test queries per trial")
    p.add_argument("--trials", type=_positive_int, default=defaults.trials, help="number of trials")
    p.add_argument("--k-per-side", type=_positive_int, default=defaults.k_per_side,
                   help="regions on each side of the median")
    p.add_argument("--seed", type=int, default=defaults.seed, help="base random seed")
    p.add_argument("--workers", type=_positive_int, default=1, help="threads for running trials")
    _add_distance_opts(p)
    p.add_argument("--format", choices=["json", "csv"], default="json", help="report format")
    _add_common(p)
    return parser


def read_config(path) -> dict[str, str]:
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise DataError("expected key = value", line=lineno, path=path)
            key, value = (s.strip() for s in line.split("=", 1))
            values[key.replace("-", "_")] = value
    return values


def _apply_config(parser: argparse.ArgumentParser, argv: list[str]) -> argparse.Namespace:
    args = parser.parse_args(argv)
    if not args.config:
        return args
    sub = parser._subparsers._group_actions[0].choices[args.command]
    actions = {a.dest: a for a in sub._actions}
    overrides = {}
    for key, value in read_config(args.config).items():
        action = actions.get(key)
        if action is None or key in ("config", "help"):
            sub.error(f"unknown config key {key!r} in {args.config}")
        if isinstance(action, argparse._StoreTrueAction):
            overrides[key] = value.lower() in ("1", "true", "yes", "on")
        elif action.nargs is not None and action.nargs not in ("?",):
            overrides[key] = value.split()
        else:
            overrides[key] = value
    # string defaults pass through each option's type conversion on reparse
    sub.set_defaults(**overrides)
    return parser.parse_args(argv)


def _load_prototype(path) -> Prototype:
    try:
        proto = Prototype.from_dict(read_json(path))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, DataError):
            raise
        raise DataError(f"invalid prototype: {exc}", path=path) from None
    if proto.name is None:
        proto = Prototype(proto.features, name=Path(path).stem)
    return proto


def _load_query(args) -> QueryVector:
    if args.query is not None:
        return QueryVector(args.query)
    return QueryVector(read_samples_csv(args.query_csv, header=args.header)[0])


def _column(path, column: int, header: bool) -> np.ndarray:
    data = read_samples_csv(path, header=header)
    if not 0 <= column < data.shape[1]:
        raise DataError(f"column {column} out of range ({data.shape[1]} columns)", path=path)
    return data[:, column]


def _cmd_fit(args):
    data = read_samples_csv(args.samples, header=args.header)
    proto = fit_prototype(data, args.k_per_side, name=args.name or Path(args.samples).stem)
    write_text(to_json(proto.to_dict()), args.output)


def _cmd_dist(args):
    report = gu_distance(_load_query(args), _load_prototype(args.prototype), DeltaMode(args.mode),
                         AggregateMode(args.agg))
    write_text(to_json(report.to_dict()), args.output)


def _cmd_classify(args):
    if len(args.prototype) < 2:
        raise DataError("classify needs at least two --prototype files")
    protos = [_load_prototype(p) for p in args.prototype]
    sv = _load_query(args)
    mode, agg = DeltaMode(args.mode), AggregateMode(args.agg)
    if len(protos) == 2:
        decision = classify_pair(sv, protos[0], protos[1], mode, agg)
    else:
        decision = classify_multi(sv, protos, mode, agg)
    write_text(to_json(decision.to_dict()), args.output)


def _cmd_divergence(args):
    p_x = _column(args.p_samples, args.column, args.header)
    q_x = _column(args.q_samples, args.column, args.header)
    if args.range is None:
        lo = float(min(p_x.min(), q_x.min()))
        hi = float(max(p_x.max(), q_x.max()))
        if lo == hi:
            lo, hi = lo - 0.5, hi + 0.5
    else:
        lo, hi = args.range
    p = fit_histogram(p_x, args.bins, (lo, hi))
    q = fit_histogram(q_x, args.bins, (lo, hi))
    out = {
        "binning": {"lower": p.lower, "bin_width": p.bin_width, "bin_count": int(p.bins.size)},
        "epsilon": args.epsilon,
        "kl_pq": kl_divergence(p, q, args.epsilon),
        "kl_qp": kl_divergence(q, p, args.epsilon),
        "pearson_pq": pearson_divergence(p, q, args.epsilon),
        "pearson_qp": pearson_divergence(q, p, args.epsilon),
        "l2": l2_distance(p, q),
    }
    write_text(to_json(out), args.output)


def _cmd_replicate(args):
    report = replicate_all(sorted(set(args.example)) if args.example else None)
    emit_report(report, args.format, args.output)
    for ex_id, flag in report.flags:
        print(f"example {ex_id}: discrepancy {flag}", file=sys.stderr)


def _cmd_bench(args):
    config = BenchConfig(
        features=args.features, separation=args.separation, spread=args.spread, samples=args.samples,
        queries=args.queries, trials=args.trials, k_per_side=args.k_per_side, seed=args.seed,
        mode=args.mode, agg=args.agg,
    )
    emit_report(run_synthetic_benchmark(config, workers=args.workers), args.format, args.output)


COMMANDS = {
    "fit": _cmd_fit,
    "dist": _cmd_dist,
    "classify": _cmd_classify,
    "divergence": _cmd_divergence,
    "replicate": _cmd_replicate,
    "bench": _cmd_bench,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = _apply_config(parser, list(sys.argv[1:] if argv is None else argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    except (OSError, DataError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        COMMANDS[args.command](args)
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main():
    sys.exit(run())
