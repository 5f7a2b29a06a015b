"""Continuous growth: digit-crossing times and dwell proportions.

For X(t) = start * F^t, the time with first digit d is the time spent
between the boundary quantities d*10^j and (d+1)*10^j. Over any full decade
(start, 10*start] the dwell share of digit d equals log10(1 + 1/d) for every
factor F - the one digit law here that is exact rather than approximate.
All crossing-time arithmetic reduces to ratios of logs, so any log base
works; natural logs are used throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError


@dataclass(frozen=True, eq=False)
class CrossingTable:
    """Times at which X(t) = 1 * F^t reaches the quantities 1..10."""

    factor: float
    rows: tuple  # (quantity, time in periods)


@dataclass(frozen=True, eq=False)
class DwellProportions:
    factor: float
    proportions: np.ndarray


def crossing_time(factor: float, quantity: float) -> float:
    """Periods for growth at `factor` to carry quantity 1 up to `quantity`."""
    if not (factor > 1):
        raise DomainError(f"factor must exceed 1, got {factor}")
    if not (quantity >= 1):
        raise DomainError(f"quantity must be >= 1, got {quantity}")
    return math.log(quantity) / math.log(factor)


def crossing_table(factor: float) -> CrossingTable:
    return CrossingTable(
        factor=factor,
        rows=tuple((q, crossing_time(factor, q)) for q in range(1, 11)),
    )


def dwell_intervals(factor: float, start: float = 1.0) -> list[tuple[int, float]]:
    """Periods spent on each leading digit across the decade (start, 10*start].

    Computed from explicit boundary-crossing times t(q) = log(q/start)/log(F)
    at every quantity q = d * 10^j inside the decade, so shifting the decade
    (any start > 0) is exercised for real rather than assumed.
    """
    if not (factor > 1):
        raise DomainError(f"factor must exceed 1, got {factor}")
    if not (start > 0):
        raise DomainError(f"start must be positive, got {start}")
    log_f = math.log(factor)
    lo = math.log10(start)
    totals = [0.0] * 10
    for j in (math.floor(lo), math.floor(lo) + 1):
        for d in range(1, 10):
            seg_lo = max(j + math.log10(d), lo)
            seg_hi = min(j + math.log10(d + 1), lo + 1.0)
            if seg_hi > seg_lo:
                # convert the log10 span to periods
                totals[d] += (seg_hi - seg_lo) * math.log(10) / log_f
    return [(d, totals[d]) for d in range(1, 10)]


def dwell_proportions(factor: float, start: float = 1.0) -> DwellProportions:
    """Share of one full decade each digit leads; equals Benford exactly."""
    intervals = dwell_intervals(factor, start)
    total = sum(t for _, t in intervals)
    return DwellProportions(
        factor=factor,
        proportions=np.array([t / total for _, t in intervals]),
    )
