"""Command-line front end.

Every subcommand emits CSV (or JSON where noted) on stdout or to --out, with
full-precision shortest round-trip floats, LF line endings and a header row.
Rates are given in percent; factors are the dimensionless multiplier > 1.
When --out is used, a sibling <out>.manifest.json records the subcommand,
parameters, seed and tool version; re-running with the same parameters and
seed reproduces the primary output byte for byte.

Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import math
import sys
from datetime import datetime, timezone

import numpy as np

from . import __version__, continuous, kxfit, rational, ross, series, sweep
from .digits import digit_distribution, digit_from_mantissa
from .errors import DomainError, GridSizeError


def _write_output(text: str, out_path: str | None, subcommand: str, params: dict):
    if out_path is None or out_path == "-":
        sys.stdout.write(text)
        return
    with open(out_path, "w", newline="") as fh:
        fh.write(text)
    manifest = {
        "subcommand": subcommand,
        "parameters": {k: v for k, v in params.items() if k not in ("func", "out")},
        "seed": params.get("seed"),
        "tool_version": __version__,
        "timestamp": datetime.now(timezone.utc).isoformat(),
    }
    with open(out_path + ".manifest.json", "w") as fh:
        json.dump(manifest, fh, indent=2, default=str)
        fh.write("\n")


def _csv(rows, header, comments=()) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    for c in comments:
        buf.write(f"# {c}\n")
    return buf.getvalue()


def _digit_table(dist) -> str:
    rows = [
        (d, int(dist.counts[d - 1]), float(dist.percent[d - 1]))
        for d in range(1, 10)
    ]
    return _csv(rows, ("digit", "count", "percent"),
                (f"total = {dist.total}", f"ssd = {dist.ssd!r}"))


def _build_series(args, parser) -> series.LogSeries:
    fam = args.family
    if fam == "fixed":
        if args.periods is None:
            parser.error("--periods is required for --family fixed")
        if args.percent is None and args.factor is None:
            parser.error("--percent or --factor is required for --family fixed")
        return series.gen_fixed(
            series.GrowthSpec(base=args.base, periods=args.periods,
                              percent=args.percent, factor=args.factor)
        )
    if fam == "random":
        if args.seed is None:
            parser.error("--seed is required for --family random")
        if args.factor_low is None or args.factor_high is None or args.periods is None:
            parser.error("--factor-low, --factor-high and --periods are required for --family random")
        return series.gen_random(
            series.RandomGrowthSpec(
                base=args.base, factor_low=args.factor_low,
                factor_high=args.factor_high, periods=args.periods, seed=args.seed,
            )
        )
    if fam == "super":
        if args.factor is None or args.count is None:
            parser.error("--factor and --count are required for --family super")
        return series.gen_super(args.base, args.factor, args.count)
    if fam == "factorial":
        if args.count is None:
            parser.error("--count is required for --family factorial")
        return series.gen_factorial(args.count)
    if fam == "selfpowered":
        if args.count is None:
            parser.error("--count is required for --family selfpowered")
        return series.gen_selfpowered(args.count)
    if fam == "continuous":
        if args.factor is None or args.count is None:
            parser.error("--factor and --count are required for --family continuous")
        return series.sample_continuous(args.base, args.factor, args.stride, args.count)
    parser.error(f"unknown family {fam!r}")


def _cmd_series(args, parser):
    s = _build_series(args, parser)
    if args.emit == "digits":
        text = _digit_table(digit_distribution(s))
    else:
        mant = s.mantissas()
        rows = [
            (i, float(s.logs[i]), float(10.0 ** mant[i]), digit_from_mantissa(mant[i]))
            for i in range(len(s))
        ]
        text = _csv(rows, ("index", "log10", "significand", "first_digit"))
    _write_output(text, args.out, "series", vars(args))
    return 0


def _cmd_digits(args, parser):
    if args.input == "-":
        raw = sys.stdin.read()
    else:
        with open(args.input) as fh:
            raw = fh.read()
    try:
        values = [float(tok) for tok in raw.split()]
    except ValueError as exc:
        raise DomainError(f"input is not numeric: {exc}")
    if not values:
        parser.error("no numbers in input")
    if args.logs:
        logs = np.asarray(values)
    else:
        arr = np.abs(np.asarray(values))
        if np.any(arr == 0):
            raise DomainError("0 has no leading digit")
        logs = np.log10(arr)
    text = _digit_table(digit_distribution(logs))
    _write_output(text, args.out, "digits", vars(args))
    return 0


def _cmd_pairs(args, parser):
    pairs = rational.enumerate_pairs(args.ptop, args.tmax)
    if args.count_only:
        text = f"{len(pairs)}\n"
    else:
        rows = [(p.T, p.L, p.rate_percent, p.deviation) for p in pairs]
        text = _csv(rows, ("T", "L", "rate_percent", "deviation"))
    _write_output(text, args.out, "pairs", vars(args))
    return 0


def _cmd_detect(args, parser):
    given = [v is not None for v in (args.percent, args.factor, args.logf)]
    if sum(given) != 1:
        parser.error("give exactly one of --percent, --factor, --logf")
    if args.percent is not None:
        logf = math.log10(1.0 + args.percent / 100.0)
    elif args.factor is not None:
        logf = math.log10(args.factor)
    else:
        logf = args.logf
    hit = rational.detect_rational(logf, args.tmax, args.tolerance)
    rows = []
    if hit is not None:
        rows.append(
            (hit.L, hit.T, hit.error, rational.rate_from_pair(hit.L, hit.T),
             rational.theoretical_deviation(hit.T))
        )
    text = _csv(rows, ("L", "T", "error", "rate_percent", "deviation"))
    _write_output(text, args.out, "detect", vars(args))
    return 0


def _parse_lengths(raw: str, parser):
    try:
        lengths = tuple(int(x) for x in raw.split(","))
    except ValueError:
        parser.error(f"--lengths must be comma-separated integers, got {raw!r}")
    if not lengths or any(n < 1 for n in lengths):
        parser.error("--lengths entries must be positive element counts")
    return lengths


def _cmd_sweep(args, parser):
    lengths = _parse_lengths(args.lengths, parser)
    if args.max_evaluations in ("none", "None"):
        cap = None
    else:
        try:
            cap = int(args.max_evaluations)
        except ValueError:
            parser.error("--max-evaluations must be an integer or 'none'")

    def progress(done, total):
        print(f"swept {done}/{total} rates", file=sys.stderr, flush=True)

    result = sweep.sweep_range(
        args.start, args.end, args.increment, base=args.base, lengths=lengths,
        register_threshold=args.threshold, workers=args.workers,
        float_horizon=args.float_horizon, max_evaluations=cap,
        progress=progress if args.progress else None,
    )
    print(
        f"grid size {result.grid_size}, registered {len(result.records)} "
        f"over threshold {result.threshold}",
        file=sys.stderr,
    )
    rows = [
        (r.rate_percent, r.best_length, r.min_ssd, r.exponent_diff)
        for r in result.records
    ]
    text = _csv(rows, ("rate_percent", "best_length", "min_ssd", "exponent_diff"))
    _write_output(text, args.out, "sweep", vars(args))
    return 0


def _cmd_experiment(args, parser):
    lengths = _parse_lengths(args.lengths, parser)
    summary = sweep.random_rate_experiment(
        args.low, args.high, args.samples, base=args.base, lengths=lengths,
        seed=args.seed, workers=args.workers, float_horizon=args.float_horizon,
    )
    payload = {
        "config": {
            "low_percent": args.low,
            "high_percent": args.high,
            "samples": args.samples,
            "base": args.base,
            "lengths": list(lengths),
            "seed": args.seed,
            "float_horizon": args.float_horizon,
        },
        **dataclasses.asdict(summary),
    }
    text = json.dumps(payload, indent=2) + "\n"
    _write_output(text, args.out, "experiment", vars(args))
    return 0


def _cmd_kxfit(args, parser):
    if args.percent is None and args.factor is None:
        parser.error("--percent or --factor is required")
    spec_factor = args.factor if args.factor is not None else 1.0 + args.percent / 100.0
    s = series.sample_continuous(args.base, spec_factor, args.stride, args.count)
    hist = kxfit.histogram(s, args.lo, args.hi, args.bins)
    fit = kxfit.fit_k(hist)
    rows = [
        (float(m), int(c), float(fit.k / m))
        for m, c in zip(hist.midpoints, hist.counts)
    ]
    text = _csv(
        rows,
        ("midpoint", "count", "k_over_x"),
        (
            f"k = {fit.k!r}",
            f"sse = {fit.sse!r}",
            f"numerator = {fit.numerator!r}",
            f"denominator = {fit.denominator!r}",
            f"excluded = {hist.excluded}",
        ),
    )
    _write_output(text, args.out, "kxfit", vars(args))
    return 0


def _cmd_dwell(args, parser):
    if args.table == "crossings":
        table = continuous.crossing_table(args.factor)
        rows = [(q, t) for q, t in table.rows]
        text = _csv(rows, ("quantity", "time_periods"))
    else:
        intervals = continuous.dwell_intervals(args.factor, args.start)
        shares = continuous.dwell_proportions(args.factor, args.start).proportions
        rows = [
            (d, t, float(100.0 * shares[d - 1]))
            for d, t in intervals
        ]
        text = _csv(rows, ("digit", "interval_periods", "share_percent"))
    _write_output(text, args.out, "dwell", vars(args))
    return 0


def _cmd_ross(args, parser):
    if args.model in ("model1", "model2"):
        if args.periods is None:
            parser.error(f"--periods is required for --model {args.model}")
        config = ross.RossConfig(
            model=args.model, population=args.population, seed=args.seed,
            periods=args.periods,
        )
    else:
        if args.max_age is None:
            parser.error("--max-age is required for --model inverted")
        config = ross.RossConfig(
            model=args.model, population=args.population, seed=args.seed,
            max_age=args.max_age, base=args.base, factor=args.factor,
        )
    dist = ross.run_ross(config)
    if args.format == "csv":
        text = _digit_table(dist)
    else:
        payload = {
            "config": {k: v for k, v in dataclasses.asdict(config).items() if v is not None},
            "counts": [int(c) for c in dist.counts],
            "percent": [float(p) for p in dist.percent],
            "total": dist.total,
            "ssd": dist.ssd,
        }
        text = json.dumps(payload, indent=2) + "\n"
    _write_output(text, args.out, "ross", vars(args))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="benfordlab",
        description="First-digit law laboratory for exponential growth series.",
    )
    parser.add_argument("--version", action="version", version=f"benfordlab {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_out(p):
        p.add_argument("--out", default=None,
                       help="output file path (default: stdout); a manifest JSON is written alongside")

    p = sub.add_parser("series", help="generate a growth series and emit values or digit tallies")
    p.add_argument("--family", default="fixed",
                   choices=["fixed", "random", "super", "factorial", "selfpowered", "continuous"],
                   help="series family (default fixed)")
    p.add_argument("--base", type=float, default=1.0, help="initial base value B > 0")
    p.add_argument("--percent", type=float, default=None,
                   help="growth rate per period, percent units (e.g. 7 for 7%%)")
    p.add_argument("--factor", type=float, default=None,
                   help="growth factor per period, dimensionless > 1 (alternative to --percent)")
    p.add_argument("--periods", type=int, default=None,
                   help="number of growth periods N (series has N+1 elements)")
    p.add_argument("--count", type=int, default=None,
                   help="element count for super/factorial/selfpowered/continuous families")
    p.add_argument("--stride", type=float, default=1.0,
                   help="periods between samples for --family continuous (default 1)")
    p.add_argument("--factor-low", type=float, default=None,
                   help="lower uniform support for --family random, factor units > 1")
    p.add_argument("--factor-high", type=float, default=None,
                   help="upper uniform support for --family random, factor units")
    p.add_argument("--seed", type=int, default=None,
                   help="RNG seed (required for --family random)")
    p.add_argument("--emit", default="values", choices=["values", "digits"],
                   help="emit per-element rows or the digit distribution table")
    add_out(p)
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("digits", help="digit distribution and SSD of numbers read from a file or stdin")
    p.add_argument("--input", default="-", help="input path with whitespace-separated numbers (default stdin)")
    p.add_argument("--logs", action="store_true", help="treat the input as log10 values")
    add_out(p)
    p.set_defaults(func=_cmd_digits)

    p = sub.add_parser("pairs", help="enumerate reduced disruptive {T, L} pairs on a percent interval")
    p.add_argument("--ptop", type=float, required=True, help="upper end of the rate interval, percent units")
    p.add_argument("--tmax", type=int, default=50, help="largest cycle length T (default 50)")
    p.add_argument("--count-only", action="store_true", help="print only the reduced pair count")
    add_out(p)
    p.set_defaults(func=_cmd_pairs)

    p = sub.add_parser("detect", help="best rational L/T near a growth rate's log-factor")
    p.add_argument("--percent", type=float, default=None, help="growth rate, percent units")
    p.add_argument("--factor", type=float, default=None, help="growth factor, dimensionless > 1")
    p.add_argument("--logf", type=float, default=None, help="log10 of the growth factor, in (0, 1]")
    p.add_argument("--tmax", type=int, default=50, help="largest denominator T searched (default 50)")
    p.add_argument("--tolerance", type=float, default=1e-9,
                   help="max |log10(F) - L/T| to report a resonance (default 1e-9)")
    add_out(p)
    p.set_defaults(func=_cmd_detect)

    p = sub.add_parser("sweep", help="scan a rate grid and register rates whose min SSD exceeds a threshold")
    p.add_argument("--start", type=float, required=True, help="first rate, percent units")
    p.add_argument("--end", type=float, required=True, help="last rate, percent units")
    p.add_argument("--increment", type=float, required=True, help="grid step, percent units")
    p.add_argument("--base", type=float, default=sweep.DEFAULT_BASE,
                   help=f"series base value (default {sweep.DEFAULT_BASE})")
    p.add_argument("--lengths", default=",".join(str(x) for x in sweep.DEFAULT_LENGTHS),
                   help="comma-separated element counts scanned per rate")
    p.add_argument("--threshold", type=float, default=sweep.DEFAULT_REGISTER_THRESHOLD,
                   help=f"register SSD threshold (default {sweep.DEFAULT_REGISTER_THRESHOLD})")
    p.add_argument("--workers", type=int, default=None,
                   help="worker threads (default: BENFORDLAB_WORKERS or all cores)")
    p.add_argument("--float-horizon", action="store_true",
                   help="clamp series lengths at the float representability ceiling "
                        "(the finite-precision protocol of linear-domain pipelines)")
    p.add_argument("--max-evaluations", default=str(sweep.DEFAULT_EVALUATION_CAP),
                   help="rate x length evaluation cap; 'none' lifts it for full-scale runs")
    p.add_argument("--progress", action="store_true", help="print progress to stderr")
    add_out(p)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("experiment", help="min-SSD statistics for random growth rates")
    p.add_argument("--low", type=float, required=True, help="lower rate bound, percent units")
    p.add_argument("--high", type=float, required=True, help="upper rate bound, percent units")
    p.add_argument("--samples", type=int, required=True, help="number of random rates")
    p.add_argument("--base", type=float, default=sweep.DEFAULT_BASE,
                   help=f"series base value (default {sweep.DEFAULT_BASE})")
    p.add_argument("--seed", type=int, required=True, help="RNG seed (PCG64)")
    p.add_argument("--lengths", default=",".join(str(x) for x in sweep.DEFAULT_LENGTHS),
                   help="comma-separated element counts scanned per rate")
    p.add_argument("--workers", type=int, default=None,
                   help="worker threads (default: BENFORDLAB_WORKERS or all cores)")
    p.add_argument("--float-horizon", action="store_true",
                   help="clamp series lengths at the float representability ceiling")
    add_out(p)
    p.set_defaults(func=_cmd_experiment)

    p = sub.add_parser("kxfit", help="histogram a growth series over a range and fit k/x")
    p.add_argument("--base", type=float, default=1.0, help="initial base value B > 0")
    p.add_argument("--percent", type=float, default=None, help="growth rate per period, percent units")
    p.add_argument("--factor", type=float, default=None, help="growth factor per period, > 1")
    p.add_argument("--stride", type=float, default=1.0, help="periods between samples (default 1)")
    p.add_argument("--count", type=int, required=True, help="number of elements")
    p.add_argument("--lo", type=float, default=1.0, help="histogram range start (linear units)")
    p.add_argument("--hi", type=float, default=10.0, help="histogram range end (linear units)")
    p.add_argument("--bins", type=int, default=27, help="bin count (default 27)")
    add_out(p)
    p.set_defaults(func=_cmd_kxfit)

    p = sub.add_parser("dwell", help="continuous-growth digit crossing times and dwell shares")
    p.add_argument("--factor", type=float, required=True, help="growth factor per period, > 1")
    p.add_argument("--start", type=float, default=1.0,
                   help="decade start quantity; the span is (start, 10*start] (default 1)")
    p.add_argument("--table", default="dwell", choices=["dwell", "crossings"],
                   help="which table to emit (default dwell)")
    add_out(p)
    p.set_defaults(func=_cmd_dwell)

    p = sub.add_parser("ross", help="random-growth population models: digit law of last terms")
    p.add_argument("--model", required=True, choices=["model1", "model2", "inverted"])
    p.add_argument("--periods", type=int, default=None, help="growth periods N (model1/model2)")
    p.add_argument("--max-age", type=int, default=None, help="largest series age (inverted)")
    p.add_argument("--population", type=int, required=True, help="number of series")
    p.add_argument("--base", type=float, default=3.0, help="fixed base for inverted model")
    p.add_argument("--factor", type=float, default=1.07, help="fixed factor for inverted model, > 1")
    p.add_argument("--seed", type=int, required=True, help="RNG seed (PCG64)")
    p.add_argument("--format", default="json", choices=["json", "csv"], help="output format")
    add_out(p)
    p.set_defaults(func=_cmd_ross)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except (DomainError, GridSizeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
