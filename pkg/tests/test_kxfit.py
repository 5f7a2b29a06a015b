import numpy as np
import pytest

import benfordlab as bl
from benfordlab.errors import DomainError
from benfordlab.kxfit import Histogram

MONTHLY_BINS = [71, 55, 45, 38, 33, 29, 26, 23, 21, 20, 18, 17, 16, 15, 14,
                13, 13, 12, 12, 10, 11, 10, 10, 9, 9, 8, 9]


@pytest.fixture(scope="module")
def monthly_series():
    # 5% yearly growth read monthly: factor is the 12th root of 1.05
    return bl.gen_fixed(bl.GrowthSpec(base=1, periods=566, factor=1.05 ** (1 / 12)))


@pytest.fixture(scope="module")
def monthly_hist(monthly_series):
    return bl.histogram(monthly_series, 1.0, 10.0, 27)


class TestHistogram:
    def test_monthly_counts(self, monthly_hist):
        assert monthly_hist.counts.tolist() == MONTHLY_BINS
        assert monthly_hist.excluded == 0
        assert monthly_hist.counts.sum() == 567

    def test_midpoints(self, monthly_hist):
        mids = np.round(monthly_hist.midpoints, 3)
        assert mids[0] == 1.167
        assert mids[1] == 1.5
        assert mids[-1] == 9.833

    def test_equal_spacing(self, monthly_hist):
        widths = np.diff(monthly_hist.edges)
        assert np.max(np.abs(widths - 9.0 / 27.0)) < 1e-12

    def test_single_value_placement(self):
        h = bl.histogram(np.array([np.log10(5.0)]), 1.0, 10.0, 9)
        assert h.counts.tolist() == [0, 0, 0, 0, 1, 0, 0, 0, 0]

    def test_out_of_range_excluded(self):
        h = bl.histogram(np.log10(np.array([0.5, 2.0, 12.0])), 1.0, 10.0, 9)
        assert h.counts.sum() == 1
        assert h.excluded == 2

    def test_hi_closes_last_bin(self):
        h = bl.histogram(np.array([1.0]), 1.0, 10.0, 9)  # value exactly 10
        assert h.counts.tolist()[-1] == 1

    def test_bad_args(self):
        with pytest.raises(DomainError):
            bl.histogram(np.array([0.0]), 5.0, 1.0, 9)
        with pytest.raises(DomainError):
            bl.histogram(np.array([0.0]), 1.0, 10.0, 0)


class TestFitK:
    def test_monthly_fit(self, monthly_hist):
        fit = bl.fit_k(monthly_hist)
        assert fit.k == pytest.approx(82.4, abs=0.5)
        assert fit.numerator == pytest.approx(220.28, abs=0.1)
        assert fit.denominator == pytest.approx(2.67, abs=0.01)
        assert fit.k == pytest.approx(fit.numerator / fit.denominator, abs=1e-12)

    def test_perfect_fit(self):
        mids = np.linspace(1, 10, 28)
        mids = (mids[:-1] + mids[1:]) / 2
        h = Histogram(lo=1, hi=10, bin_count=27, edges=np.linspace(1, 10, 28),
                      midpoints=mids, counts=42.0 / mids, excluded=0)
        fit = bl.fit_k(h)
        assert fit.k == pytest.approx(42.0, rel=1e-12)
        assert fit.sse == pytest.approx(0.0, abs=1e-18)

    def test_two_bin_hand_example(self):
        h = Histogram(lo=0.5, hi=2.5, bin_count=2, edges=np.array([0.5, 1.5, 2.5]),
                      midpoints=np.array([1.0, 2.0]), counts=np.array([2, 1]),
                      excluded=0)
        assert bl.fit_k(h).k == pytest.approx(2.0, abs=1e-15)

    def test_minimizes_sse(self, monthly_hist):
        fit = bl.fit_k(monthly_hist)

        def sse(k):
            return float(np.sum((k / monthly_hist.midpoints - monthly_hist.counts) ** 2))

        delta = 1e-3 * fit.k
        assert sse(fit.k + delta) > fit.sse
        assert sse(fit.k - delta) > fit.sse

    def test_derivative_zero_at_fit(self, monthly_hist):
        fit = bl.fit_k(monthly_hist)

        def sse(k):
            return float(np.sum((k / monthly_hist.midpoints - monthly_hist.counts) ** 2))

        h = fit.k * 1e-6
        derivative = (sse(fit.k + h) - sse(fit.k - h)) / (2 * h)
        scale = abs(sse(fit.k)) / fit.k
        assert abs(derivative) / max(scale, 1.0) < 1e-6

    def test_empty_counts_rejected(self):
        h = Histogram(lo=1, hi=10, bin_count=2, edges=np.array([1.0, 5.5, 10.0]),
                      midpoints=np.array([3.25, 7.75]), counts=np.array([0, 0]),
                      excluded=0)
        with pytest.raises(DomainError):
            bl.fit_k(h)


class TestDoublingCheck:
    def test_monthly_doublings(self, monthly_hist):
        assert bl.doubling_check(monthly_hist, 1.167, 2.500) == pytest.approx(
            38 / 71, abs=1e-9
        )
        assert bl.doubling_check(monthly_hist, 2.167, 4.500) == pytest.approx(
            20 / 38, abs=1e-9
        )
        assert bl.doubling_check(monthly_hist, 4.167, 8.500) == pytest.approx(
            0.5, abs=1e-12
        )

    def test_ideal_reciprocal_density(self):
        # midpoints 1..8, so (2, 4), (3, 6) and (4, 8) are exact doublings
        edges = np.linspace(0.5, 8.5, 9)
        mids = (edges[:-1] + edges[1:]) / 2
        h = Histogram(lo=0.5, hi=8.5, bin_count=8, edges=edges,
                      midpoints=mids, counts=100.0 / mids, excluded=0)
        for low, high in [(2.0, 4.0), (3.0, 6.0), (4.0, 8.0)]:
            assert bl.doubling_check(h, low, high) == pytest.approx(0.5, abs=1e-12)

    def test_rejects_non_midpoint(self, monthly_hist):
        with pytest.raises(DomainError):
            bl.doubling_check(monthly_hist, 0.3, 0.6)

    def test_rejects_non_doubling(self, monthly_hist):
        with pytest.raises(DomainError):
            bl.doubling_check(monthly_hist, 1.167, 4.500)

    def test_rejects_empty_low_bin(self):
        h = Histogram(lo=1, hi=10, bin_count=9,
                      edges=np.linspace(1, 10, 10),
                      midpoints=(np.linspace(1, 10, 10)[:-1] + np.linspace(1, 10, 10)[1:]) / 2,
                      counts=np.zeros(9, dtype=int), excluded=0)
        with pytest.raises(DomainError):
            bl.doubling_check(h, 1.5, 3.5)


class TestMonthlyEndToEnd:
    def test_digits_and_ssd(self, monthly_series):
        dist = bl.digit_distribution(monthly_series)
        want = [30.16, 17.64, 12.35, 9.70, 7.94, 6.70, 5.82, 5.11, 4.59]
        assert np.max(np.abs(dist.percent - np.array(want))) < 0.02
        assert dist.ssd <= 0.05

    def test_span(self, monthly_series):
        assert len(monthly_series) == 567
        assert 10 ** float(monthly_series.logs[-1]) == pytest.approx(9.987, abs=5e-4)
