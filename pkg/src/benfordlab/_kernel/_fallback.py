"""NumPy implementation of the walk kernels (used when the C extension is absent)."""

from __future__ import annotations

import math

import numpy as np


def _mantissas(log_base: float, log_step: float, n: int) -> np.ndarray:
    m = (log_base + np.arange(n) * log_step) % 1.0
    m[m >= 1.0] -= 1.0
    return m


def digit_counts_progression(log_base, log_step, n, thresholds, out):
    d = np.searchsorted(thresholds, _mantissas(log_base, log_step, n), side="right")
    out += np.bincount(d, minlength=9).astype(np.int64)


def batch_min_ssd(
    log_base, log_factors, lengths_asc, listed_rank, thresholds, benford_pct, horizon, out_ssd, out_len
):
    for i, logf in enumerate(log_factors):
        if math.isfinite(horizon):
            n_ov = max(1, int((horizon - log_base) / logf) + 1)
            eff = np.minimum(lengths_asc, n_ov)
        else:
            eff = lengths_asc
        d = np.searchsorted(thresholds, _mantissas(log_base, logf, int(eff[-1])), side="right")
        counts = np.zeros(9, dtype=np.int64)
        done = 0
        best = math.inf
        best_len = 0
        best_rank = np.iinfo(np.int64).max
        for j, length in enumerate(eff):
            length = int(length)
            if length > done:
                counts += np.bincount(d[done:length], minlength=9)
                done = length
            s = float(np.sum((counts / length * 100.0 - benford_pct) ** 2))
            if s < best or (s == best and listed_rank[j] < best_rank):
                best, best_len, best_rank = s, length, listed_rank[j]
        out_ssd[i] = best
        out_len[i] = best_len
