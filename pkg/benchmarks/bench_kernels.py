"""Benchmark the compiled walk kernel against the NumPy fallback.

Usage: python benchmarks/bench_kernels.py [--quick]

Times the two hot entry points on sweep-shaped workloads and prints a
speedup table. Both backends are imported directly, so one process can
compare them regardless of which one the package selected.
"""

import argparse
import math
import time

import numpy as np

from benfordlab import DEFAULT_LENGTHS
from benfordlab._kernel import _BENFORD, _THRESHOLDS, _fallback

try:
    from benfordlab._kernel import _native
except ImportError:
    _native = None


def time_call(fn, repeat=3):
    best = math.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_progression(impl, n_series, length):
    def run():
        out = np.zeros(9, dtype=np.int64)
        for i in range(n_series):
            impl.digit_counts_progression(
                math.log10(3.0), math.log10(1.0 + (1.0 + i * 0.01) / 100.0),
                length, _THRESHOLDS, out,
            )
    return run


def bench_batch(impl, rates, horizon):
    listed = np.asarray(DEFAULT_LENGTHS, dtype=np.int64)
    order = np.argsort(listed, kind="stable")
    lengths_asc = np.ascontiguousarray(listed[order])
    rank = np.ascontiguousarray(order, dtype=np.int64)
    logfs = np.ascontiguousarray(np.log10(1.0 + rates / 100.0))
    out_ssd = np.empty(rates.size)
    out_len = np.empty(rates.size, dtype=np.int64)

    def run():
        impl.batch_min_ssd(math.log10(3.0), logfs, lengths_asc, rank,
                           _THRESHOLDS, _BENFORD, horizon, out_ssd, out_len)
    return run


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    args = parser.parse_args()

    scale = 10 if args.quick else 1
    rng = np.random.default_rng(1)
    workloads = [
        ("progression 500x3000", bench_progression, dict(n_series=500 // scale, length=3000)),
        ("min-ssd 1000 rates (1-50%)", bench_batch,
         dict(rates=rng.uniform(1, 50, 1000 // scale), horizon=math.inf)),
        ("min-ssd 1000 rates (1-890%, capped)", bench_batch,
         dict(rates=rng.uniform(1, 890, 1000 // scale),
              horizon=math.log10(1.7976931348623157e308))),
    ]

    print(f"{'workload':<38} {'fallback':>10} {'native':>10} {'speedup':>8}")
    for name, factory, kwargs in workloads:
        t_fb = time_call(factory(_fallback, **kwargs))
        if _native is None:
            print(f"{name:<38} {t_fb:>9.3f}s {'absent':>10} {'-':>8}")
            continue
        t_nat = time_call(factory(_native, **kwargs))
        print(f"{name:<38} {t_fb:>9.3f}s {t_nat:>9.3f}s {t_fb / t_nat:>7.1f}x")


if __name__ == "__main__":
    main()
