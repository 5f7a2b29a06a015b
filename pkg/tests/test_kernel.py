"""Cross-checks between the compiled kernel and the NumPy fallback."""

import math

import numpy as np
import pytest

import benfordlab as bl
from benfordlab import _kernel
from benfordlab._kernel import _fallback

native = pytest.importorskip("benfordlab._kernel._native")

THRESH = np.ascontiguousarray(_kernel._THRESHOLDS)
BEN = np.ascontiguousarray(_kernel._BENFORD)


def run_counts(impl, log_base, log_step, n):
    out = np.zeros(9, dtype=np.int64)
    impl.digit_counts_progression(float(log_base), float(log_step), int(n), THRESH, out)
    return out


def run_batch(impl, log_base, logfs, lengths, horizon=math.inf):
    listed = np.asarray(lengths, dtype=np.int64)
    order = np.argsort(listed, kind="stable")
    out_ssd = np.empty(len(logfs), dtype=np.float64)
    out_len = np.empty(len(logfs), dtype=np.int64)
    impl.batch_min_ssd(
        float(log_base), np.ascontiguousarray(logfs, dtype=np.float64),
        np.ascontiguousarray(listed[order]), np.ascontiguousarray(order, dtype=np.int64),
        THRESH, BEN, float(horizon), out_ssd, out_len,
    )
    return out_ssd, out_len


class TestBackendsAgree:
    def test_progression_counts_identical(self):
        rng = np.random.default_rng(99)
        for _ in range(50):
            log_base = math.log10(rng.uniform(0.01, 100))
            log_step = math.log10(1 + rng.uniform(0.5, 890) / 100)
            n = int(rng.integers(1, 3000))
            a = run_counts(native, log_base, log_step, n)
            b = run_counts(_fallback, log_base, log_step, n)
            assert np.array_equal(a, b)
            assert a.sum() == n

    @pytest.mark.parametrize("horizon", [math.inf, bl.sweep.FLOAT_HORIZON_LOG10])
    def test_batch_min_ssd_agrees(self, horizon):
        rng = np.random.default_rng(123)
        logfs = np.log10(1 + rng.uniform(1, 890, 300) / 100)
        a_ssd, a_len = run_batch(native, math.log10(3), logfs, bl.DEFAULT_LENGTHS, horizon)
        b_ssd, b_len = run_batch(_fallback, math.log10(3), logfs, bl.DEFAULT_LENGTHS, horizon)
        assert np.array_equal(a_len, b_len)
        assert np.max(np.abs(a_ssd - b_ssd)) < 1e-10


class TestKernelSemantics:
    def test_counts_match_series_path(self):
        # the kernel must agree exactly with digit_distribution(gen_fixed(...))
        rng = np.random.default_rng(17)
        for _ in range(30):
            base = rng.uniform(0.5, 50)
            rate = rng.uniform(0.5, 890)
            n = int(rng.integers(2, 2500))
            counts = _kernel.digit_counts_progression(
                math.log10(base), math.log10(1 + rate / 100), n
            )
            dist = bl.digit_distribution(
                bl.gen_fixed(bl.GrowthSpec(base=base, periods=n - 1, percent=rate))
            )
            assert np.array_equal(counts, dist.counts)

    def test_horizon_clamps_length(self):
        # at 890% each element adds ~0.9956 decades; overflow hits near 310
        logf = math.log10(9.9)
        ssd_unc, len_unc = _kernel.batch_min_ssd(
            math.log10(3), np.array([logf]), bl.DEFAULT_LENGTHS
        )
        ssd_cap, len_cap = _kernel.batch_min_ssd(
            math.log10(3), np.array([logf]), bl.DEFAULT_LENGTHS,
            horizon=bl.sweep.FLOAT_HORIZON_LOG10,
        )
        assert len_unc[0] in bl.DEFAULT_LENGTHS
        expected = int((bl.sweep.FLOAT_HORIZON_LOG10 - math.log10(3)) / logf) + 1
        assert len_cap[0] == expected

    def test_tie_break_prefers_listed_order(self):
        # duplicate checkpoint lengths produced by clamping collapse to the
        # same SSD; the winner is the first in listed order
        logf = math.log10(9.9)
        _, len_cap = _kernel.batch_min_ssd(
            math.log10(3), np.array([logf]), (3000, 2897, 822),
            horizon=bl.sweep.FLOAT_HORIZON_LOG10,
        )
        n_ov = int((bl.sweep.FLOAT_HORIZON_LOG10 - math.log10(3)) / logf) + 1
        assert len_cap[0] == n_ov

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            _kernel.batch_min_ssd(0.0, np.array([-0.1]), (100,))
        with pytest.raises(ValueError):
            _kernel.digit_counts_progression(0.0, 0.1, 0)
