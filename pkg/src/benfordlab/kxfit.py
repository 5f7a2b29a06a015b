"""Histogram a growth series over a decade and fit the k/x density.

The fit is the closed-form least-squares k: setting d(SSE)/dk = 0 for
SSE = sum_i (k / mid_i - count_i)^2 gives k = sum(count_i / mid_i) divided
by sum(1 / mid_i^2).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError


@dataclass(frozen=True, eq=False)
class Histogram:
    lo: float
    hi: float
    bin_count: int
    edges: np.ndarray
    midpoints: np.ndarray
    counts: np.ndarray
    excluded: int


@dataclass(frozen=True)
class KxFit:
    k: float
    sse: float
    numerator: float
    denominator: float


def histogram(series, lo: float, hi: float, bins: int) -> Histogram:
    """Equal-width bins over [lo, hi) in the linear domain.

    Bins are half-open with the final bin closed at hi; values outside are
    excluded and counted in `excluded`. Midpoints are carried at full
    precision (display rounding is the caller's business).
    """
    if not (lo < hi):
        raise DomainError("need lo < hi")
    if bins < 1:
        raise DomainError(f"need at least one bin, got {bins}")
    logs = np.asarray(getattr(series, "logs", series), dtype=float)
    values = 10.0 ** logs
    edges = np.linspace(lo, hi, bins + 1)
    inside = (values >= lo) & (values <= hi)
    idx = np.searchsorted(edges, values[inside], side="right") - 1
    idx[idx == bins] = bins - 1  # hi itself closes the last bin
    counts = np.bincount(idx, minlength=bins)[:bins]
    return Histogram(
        lo=float(lo),
        hi=float(hi),
        bin_count=bins,
        edges=edges,
        midpoints=(edges[:-1] + edges[1:]) / 2.0,
        counts=counts.astype(np.int64),
        excluded=int(values.size - inside.sum()),
    )


def fit_k(hist: Histogram) -> KxFit:
    """Unique SSE-minimizing k for a k/x fit through the histogram."""
    if np.any(hist.midpoints <= 0):
        raise DomainError("k/x fit needs positive midpoints")
    if not np.any(hist.counts):
        raise DomainError("k/x fit needs at least one nonzero count")
    numerator = float(np.sum(hist.counts / hist.midpoints))
    denominator = float(np.sum(1.0 / hist.midpoints**2))
    k = numerator / denominator
    sse = float(np.sum((k / hist.midpoints - hist.counts) ** 2))
    return KxFit(k=k, sse=sse, numerator=numerator, denominator=denominator)


def doubling_check(hist: Histogram, x_low_mid: float, x_high_mid: float) -> float:
    """Frequency drop across a doubling of x; exactly 0.5 for an ideal k/x.

    Both arguments must match histogram midpoints, and the high one must sit
    within a bin width of twice the low one.
    """
    width = (hist.hi - hist.lo) / hist.bin_count

    def _bin_of(x):
        i = int(np.argmin(np.abs(hist.midpoints - x)))
        if abs(hist.midpoints[i] - x) > width / 2:
            raise DomainError(f"{x} is not a histogram midpoint")
        return i

    i_low, i_high = _bin_of(x_low_mid), _bin_of(x_high_mid)
    if abs(hist.midpoints[i_high] - 2.0 * hist.midpoints[i_low]) > width:
        raise DomainError("high midpoint is not a doubling of the low one")
    c_low = float(hist.counts[i_low])
    c_high = float(hist.counts[i_high])
    if c_low == 0:
        raise DomainError("low bin is empty; reduction undefined")
    return (c_low - c_high) / c_low
