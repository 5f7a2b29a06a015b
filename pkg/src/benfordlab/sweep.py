"""Empirical rate-scan engines.

Each growth rate is scored by its minimum SSD across a set of series lengths;
the length set exists to let low rates find a nearly integral exponent
difference (the same calibration a k/x span needs). Rates whose minimum SSD
still exceeds the register threshold are the empirically rebellious ones.

Two measurement protocols are supported:

* the default evaluates every length in full in the log domain, which is the
  honest mathematical reading of a 3000-element series at any rate;
* `float_horizon=True` clamps each length to the number of elements whose
  linear value stays below the double-precision ceiling (~1.8e308). High
  rates then get much shorter effective series. This reproduces the
  published sweep statistics, which were measured with linear-domain floats
  and therefore could never see a long series at a high rate. Capped
  lengths widen the disruption zone around each rational rate roughly in
  proportion to 1/(T * length).

Scans are chunked deterministically: results are identical for any worker
count because chunk boundaries depend only on the grid.
"""

from __future__ import annotations

import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _kernel
from .errors import DomainError, GridSizeError

# Series lengths (element counts) scanned per rate; listed order breaks ties.
DEFAULT_LENGTHS = (3000, 2897, 2800, 2697, 2597, 2297, 2284, 2262, 1930, 1759, 1433, 1268, 822)

DEFAULT_REGISTER_THRESHOLD = 8.88
DEFAULT_BASE = 3.0
DEFAULT_EVALUATION_CAP = 5_000_000

# log10 of the largest finite double: the representability ceiling emulated
# by the float_horizon protocol.
FLOAT_HORIZON_LOG10 = math.log10(sys.float_info.max)

_CHUNK = 4096


@dataclass(frozen=True)
class SweepRecord:
    rate_percent: float
    best_length: int
    min_ssd: float
    exponent_diff: float


@dataclass(frozen=True)
class SweepResult:
    """Registered records (ascending rate) plus the size of the full grid."""

    records: tuple[SweepRecord, ...]
    grid_size: int
    threshold: float


@dataclass(frozen=True)
class ExperimentSummary:
    count: int
    mean_ssd: float
    median_ssd: float
    n_over_10: int
    n_over_50: int
    n_over_100: int


@dataclass(frozen=True)
class RateCluster:
    """A maximal run of registered rates separated by at most the grid step."""

    lo: float
    hi: float
    center: float
    width: float
    count: int
    peak_ssd: float


def _workers(workers: int | None) -> int:
    if workers is None:
        workers = int(os.environ.get("BENFORDLAB_WORKERS", "0")) or (os.cpu_count() or 1)
    return max(1, workers)


def _scan_rates(
    rates: np.ndarray,
    base: float,
    lengths,
    horizon: float,
    workers: int | None,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(min_ssd, best_length, log_factors) for an array of percent rates."""
    if np.any(rates <= 0):
        raise DomainError("growth rates must be positive percent values")
    log_base = math.log10(base)
    logfs = np.log10(1.0 + rates / 100.0)
    nworkers = _workers(workers)
    chunks = [slice(lo, min(lo + _CHUNK, rates.size)) for lo in range(0, rates.size, _CHUNK)]

    def run(sl: slice):
        return _kernel.batch_min_ssd(log_base, logfs[sl], lengths, horizon)

    if nworkers == 1 or len(chunks) == 1:
        parts = [run(sl) for sl in chunks]
    else:
        with ThreadPoolExecutor(max_workers=nworkers) as pool:
            parts = list(pool.map(run, chunks))
    ssds = np.concatenate([p[0] for p in parts])
    lens = np.concatenate([p[1] for p in parts])
    return ssds, lens, logfs


def best_ssd_over_lengths(
    rate_percent: float,
    base: float = DEFAULT_BASE,
    lengths=DEFAULT_LENGTHS,
    float_horizon: bool = False,
) -> SweepRecord:
    """Generate the rate's series at each length and keep the lowest SSD."""
    if not (rate_percent > 0):
        raise DomainError(f"rate must be positive, got {rate_percent}")
    horizon = FLOAT_HORIZON_LOG10 if float_horizon else math.inf
    rates = np.asarray([rate_percent], dtype=float)
    ssds, lens, logfs = _scan_rates(rates, base, lengths, horizon, workers=1)
    return SweepRecord(
        rate_percent=float(rate_percent),
        best_length=int(lens[0]),
        min_ssd=float(ssds[0]),
        exponent_diff=float((lens[0] - 1) * logfs[0]),
    )


def grid_points(start_percent: float, end_percent: float, increment: float) -> int:
    if not (start_percent < end_percent):
        raise DomainError("need start < end")
    if not (increment > 0):
        raise DomainError(f"increment must be positive, got {increment}")
    return int(math.floor((end_percent - start_percent) / increment)) + 1


def sweep_range(
    start_percent: float,
    end_percent: float,
    increment: float,
    base: float = DEFAULT_BASE,
    lengths=DEFAULT_LENGTHS,
    register_threshold: float = DEFAULT_REGISTER_THRESHOLD,
    workers: int | None = None,
    float_horizon: bool = False,
    max_evaluations: int | None = DEFAULT_EVALUATION_CAP,
    progress=None,
) -> SweepResult:
    """Scan the grid start + k * increment and register rates over threshold.

    Refuses grids whose rate x length evaluation count exceeds
    `max_evaluations` (pass None to lift the cap for full-scale runs).
    `progress`, if given, is called with (rates_done, rates_total).
    """
    n = grid_points(start_percent, end_percent, increment)
    evaluations = n * len(tuple(lengths))
    if max_evaluations is not None and evaluations > max_evaluations:
        raise GridSizeError(
            f"sweep needs {evaluations} evaluations ({n} rates x {len(tuple(lengths))} "
            f"lengths), over the cap of {max_evaluations}; raise max_evaluations "
            f"or pass None to run it anyway"
        )
    rates = start_percent + np.arange(n) * increment
    horizon = FLOAT_HORIZON_LOG10 if float_horizon else math.inf

    records = []
    done = 0
    # Outer blocks keep memory flat and give progress granularity; inner
    # chunking/threading happens in _scan_rates.
    block = 65536
    for lo in range(0, n, block):
        block_rates = rates[lo:lo + block]
        ssds, lens, logfs = _scan_rates(block_rates, base, lengths, horizon, workers)
        for i in np.nonzero(ssds > register_threshold)[0]:
            records.append(
                SweepRecord(
                    rate_percent=float(block_rates[i]),
                    best_length=int(lens[i]),
                    min_ssd=float(ssds[i]),
                    exponent_diff=float((lens[i] - 1) * logfs[i]),
                )
            )
        done += block_rates.size
        if progress is not None:
            progress(done, n)
    return SweepResult(records=tuple(records), grid_size=n, threshold=register_threshold)


def random_rate_experiment(
    low_percent: float,
    high_percent: float,
    samples: int,
    base: float = DEFAULT_BASE,
    lengths=DEFAULT_LENGTHS,
    seed: int = 0,
    workers: int | None = None,
    float_horizon: bool = False,
) -> ExperimentSummary:
    """Min-SSD statistics for `samples` rates drawn Uniform(low, high).

    All rates are drawn upfront from PCG64(seed), so the result is
    deterministic per seed and independent of the worker count.
    """
    if not (0 < low_percent < high_percent):
        raise DomainError("need 0 < low < high")
    if samples < 1:
        raise DomainError(f"samples must be >= 1, got {samples}")
    rng = np.random.default_rng(seed)
    rates = rng.uniform(low_percent, high_percent, samples)
    horizon = FLOAT_HORIZON_LOG10 if float_horizon else math.inf
    ssds, _, _ = _scan_rates(rates, base, lengths, horizon, workers)
    return ExperimentSummary(
        count=samples,
        mean_ssd=float(np.mean(ssds)),
        median_ssd=float(np.median(ssds)),
        n_over_10=int(np.sum(ssds > 10.0)),
        n_over_50=int(np.sum(ssds > 50.0)),
        n_over_100=int(np.sum(ssds > 100.0)),
    )


def find_clusters(records, max_gap: float) -> list[RateCluster]:
    """Group registered records into clusters of nearby rates.

    Consecutive records whose rates differ by at most `max_gap` (use about
    1.5x the sweep increment) belong to one cluster.
    """
    recs = sorted(records, key=lambda r: r.rate_percent)
    clusters = []
    run = []
    for r in recs:
        if run and r.rate_percent - run[-1].rate_percent > max_gap:
            clusters.append(run)
            run = []
        run.append(r)
    if run:
        clusters.append(run)
    return [
        RateCluster(
            lo=c[0].rate_percent,
            hi=c[-1].rate_percent,
            center=(c[0].rate_percent + c[-1].rate_percent) / 2.0,
            width=c[-1].rate_percent - c[0].rate_percent,
            count=len(c),
            peak_ssd=max(r.min_ssd for r in c),
        )
        for c in clusters
    ]
