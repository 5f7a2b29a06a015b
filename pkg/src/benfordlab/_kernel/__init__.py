"""Hot-loop kernels for digit tallies of arithmetic log progressions.

Two interchangeable backends: a compiled Cython walker (`_native`) and a
NumPy fallback (`_fallback`). Both compute the mantissa of element k as
fmod(log_base + k * log_step, 1.0), so their digit tallies agree bit for
bit; selection happens once at import. Set BENFORDLAB_PURE=1 to force the
fallback (used by the benchmark and the cross-check tests).
"""

from __future__ import annotations

import math
import os

import numpy as np

from ..digits import BENFORD_PERCENT, DIGIT_THRESHOLDS

if os.environ.get("BENFORDLAB_PURE", "0") not in ("", "0"):
    from . import _fallback as _impl

    BACKEND = "fallback"
else:
    try:
        from . import _native as _impl  # type: ignore[attr-defined]

        BACKEND = "native"
    except ImportError:
        from . import _fallback as _impl

        BACKEND = "fallback"

_THRESHOLDS = np.ascontiguousarray(DIGIT_THRESHOLDS, dtype=np.float64)
_BENFORD = np.ascontiguousarray(BENFORD_PERCENT, dtype=np.float64)


def backend() -> str:
    return BACKEND


def digit_counts_progression(log_base: float, log_step: float, n: int) -> np.ndarray:
    """First-digit counts of the series log_base + k * log_step, k = 0..n-1."""
    if n < 1:
        raise ValueError(f"need at least one element, got {n}")
    out = np.zeros(9, dtype=np.int64)
    _impl.digit_counts_progression(float(log_base), float(log_step), int(n), _THRESHOLDS, out)
    return out


def batch_min_ssd(
    log_base: float,
    log_factors: np.ndarray,
    lengths,
    horizon: float = math.inf,
) -> tuple[np.ndarray, np.ndarray]:
    """Minimum SSD over a length set, for a batch of log-factors.

    For each log-factor: generate the progression, take the SSD of its first
    digits at every checkpoint length, and keep the minimum. Ties go to the
    length listed first in `lengths`. With a finite `horizon` (a log10
    ceiling), each length is clamped to the count of elements that stay
    below it, reproducing what a linear-domain float pipeline could see.

    Returns (min_ssd, best_length) aligned with log_factors; best_length is
    the element count actually used (possibly clamped).
    """
    log_factors = np.ascontiguousarray(log_factors, dtype=np.float64)
    if np.any(log_factors <= 0):
        raise ValueError("log-factors must be positive")
    listed = np.asarray(lengths, dtype=np.int64)
    if listed.size == 0 or np.any(listed < 1):
        raise ValueError("lengths must be positive element counts")
    order = np.argsort(listed, kind="stable")
    lengths_asc = np.ascontiguousarray(listed[order])
    listed_rank = np.ascontiguousarray(order, dtype=np.int64)
    out_ssd = np.empty(log_factors.size, dtype=np.float64)
    out_len = np.empty(log_factors.size, dtype=np.int64)
    _impl.batch_min_ssd(
        float(log_base),
        log_factors,
        lengths_asc,
        listed_rank,
        _THRESHOLDS,
        _BENFORD,
        float(horizon),
        out_ssd,
        out_len,
    )
    return out_ssd, out_len
