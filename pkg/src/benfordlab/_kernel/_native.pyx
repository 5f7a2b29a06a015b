# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled walk kernel: digit tallies of arithmetic log progressions.

Mirrors _fallback.py operation for operation; both compute element mantissas
as fmod(log_base + k * log_step, 1.0) so tallies agree bit for bit.
"""

from libc.math cimport isfinite, trunc


cdef inline int _digit_index(double m, const double* th) noexcept nogil:
    # number of thresholds <= m, i.e. digit - 1
    cdef int j = 0
    while j < 8 and m >= th[j]:
        j += 1
    return j


cdef inline double _mantissa(double log_base, double log_step, long long k) noexcept nogil:
    # x - trunc(x) equals fmod(x, 1.0) exactly for every double, at a
    # fraction of the cost
    cdef double x = log_base + k * log_step
    cdef double m = x - trunc(x)
    if m < 0.0:
        m += 1.0
    if m >= 1.0:
        m -= 1.0
    return m


def digit_counts_progression(double log_base, double log_step, long long n,
                             double[::1] thresholds, long long[::1] out):
    cdef double th[8]
    cdef long long counts[9]
    cdef long long k
    cdef int d
    for d in range(8):
        th[d] = thresholds[d]
    for d in range(9):
        counts[d] = 0
    with nogil:
        for k in range(n):
            counts[_digit_index(_mantissa(log_base, log_step, k), th)] += 1
    for d in range(9):
        out[d] += counts[d]


def batch_min_ssd(double log_base, double[::1] log_factors,
                  long long[::1] lengths_asc, long long[::1] listed_rank,
                  double[::1] thresholds, double[::1] benford_pct,
                  double horizon,
                  double[::1] out_ssd, long long[::1] out_len):
    cdef double th[8]
    cdef double ben[9]
    cdef long long lens[64]
    cdef long long rank[64]
    cdef int nlen = lengths_asc.shape[0]
    cdef Py_ssize_t nrates = log_factors.shape[0]
    cdef Py_ssize_t i
    cdef int d, j
    cdef long long counts[9]
    cdef long long k, target, n_ov, best_len, best_rank
    cdef double logf, s, diff, best
    cdef bint capped = isfinite(horizon)

    if nlen > 64:
        raise ValueError("at most 64 checkpoint lengths supported")
    for d in range(8):
        th[d] = thresholds[d]
    for d in range(9):
        ben[d] = benford_pct[d]
    for j in range(nlen):
        lens[j] = lengths_asc[j]
        rank[j] = listed_rank[j]

    with nogil:
        for i in range(nrates):
            logf = log_factors[i]
            n_ov = 0
            if capped:
                n_ov = <long long>((horizon - log_base) / logf) + 1
                if n_ov < 1:
                    n_ov = 1
            for d in range(9):
                counts[d] = 0
            k = 0
            best = -1.0
            best_len = 0
            best_rank = 0
            for j in range(nlen):
                target = lens[j]
                if capped and target > n_ov:
                    target = n_ov
                while k < target:
                    counts[_digit_index(_mantissa(log_base, logf, k), th)] += 1
                    k += 1
                s = 0.0
                for d in range(9):
                    diff = counts[d] * 100.0 / target - ben[d]
                    s += diff * diff
                if best < 0.0 or s < best or (s == best and rank[j] < best_rank):
                    best = s
                    best_len = target
                    best_rank = rank[j]
            out_ssd[i] = best
            out_len[i] = best_len
