import numpy as np
import pytest

# Published golden table: digit percentages and SSD of 1000-element series
# from base 3 at rates with log-factor exactly 1/T. Rows marked exact
# reproduce under correctly-rounded arithmetic; the others embed the original
# program's float drift at the significand-3.0 boundary (those series revisit
# the value 3 x 10^k, which exact arithmetic keeps at digit 3) and are
# exercised only by the strict-xfail acceptance check.
GOLDEN_RATIONAL_ROWS = {
    1: ([0.0, 0.0, 100.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0], 9155.8, True),
    2: ([0.0, 0.0, 50.0, 0.0, 0.0, 0.0, 0.0, 0.0, 50.0], 4947.6, True),
    3: ([33.3, 0.0, 33.3, 0.0, 0.0, 33.3, 0.0, 0.0, 0.0], 1701.8, False),
    4: ([25.0, 22.7, 2.3, 0.0, 25.0, 0.0, 0.0, 0.0, 25.0], 1063.3, False),
    5: ([40.0, 0.0, 20.0, 20.0, 0.0, 0.0, 20.0, 0.0, 0.0], 926.9, True),
    6: ([16.6, 16.6, 16.7, 16.7, 0.0, 16.7, 0.0, 0.0, 16.7], 619.8, True),
    7: ([28.6, 14.2, 14.3, 14.3, 14.3, 0.0, 0.0, 14.3, 0.0], 262.9, True),
    8: ([25.0, 24.5, 0.5, 12.5, 12.5, 0.0, 12.5, 0.0, 12.5], 424.9, False),
    9: ([33.3, 11.1, 22.3, 0.0, 11.1, 11.1, 0.0, 11.1, 0.0], 362.6, True),
    10: ([30.0, 10.0, 20.0, 10.0, 10.0, 0.0, 10.0, 0.0, 10.0], 236.7, True),
    11: ([36.4, 14.1, 13.1, 9.1, 9.1, 9.1, 0.0, 9.1, 0.0], 130.3, False),
    12: ([24.9, 16.6, 16.8, 8.4, 8.4, 8.3, 8.3, 0.0, 8.3], 97.4, True),
    13: ([30.8, 22.8, 7.9, 7.7, 7.7, 7.7, 7.7, 7.7, 0.0], 84.8, False),
    14: ([28.4, 20.9, 7.7, 14.4, 7.2, 7.2, 0.0, 7.1, 7.1], 103.6, False),
    15: ([33.2, 19.4, 7.2, 13.4, 6.7, 6.7, 6.7, 6.7, 0.0], 80.3, False),
    16: ([31.0, 12.4, 12.6, 12.6, 6.3, 6.3, 6.3, 6.3, 6.2], 43.5, True),
    17: ([35.3, 11.6, 17.7, 5.9, 11.8, 5.9, 5.9, 5.9, 0.0], 141.9, True),
    18: ([27.5, 16.5, 16.8, 5.6, 11.2, 5.6, 5.6, 5.6, 5.6], 56.6, True),
    19: ([31.4, 15.6, 15.9, 10.6, 5.3, 5.3, 10.6, 5.3, 0.0], 71.0, True),
    20: ([30.0, 15.0, 15.0, 10.0, 10.0, 5.0, 5.0, 5.0, 5.0], 21.2, True),
    25: ([28.0, 16.0, 16.0, 8.0, 8.0, 8.0, 4.0, 4.0, 8.0], 40.1, True),
    35: ([28.1, 16.8, 14.5, 8.7, 8.7, 5.8, 5.8, 5.8, 5.8], 13.1, True),
    40: ([30.0, 17.5, 12.5, 10.0, 10.0, 5.0, 7.5, 5.0, 2.5], 14.5, True),
    50: ([30.0, 16.0, 14.0, 10.0, 8.0, 6.0, 6.0, 4.0, 6.0], 8.8, True),
    100: ([30.0, 17.9, 12.1, 10.0, 8.0, 6.0, 6.0, 5.0, 5.0], 1.1, False),
    200: ([30.0, 17.5, 12.5, 10.0, 8.0, 6.5, 6.0, 5.0, 4.5], 0.2, True),
}


def rational_row(T: int, elements: int = 1000, base: float = 3.0):
    """Digit distribution of the rate with log-factor exactly 1/T."""
    import benfordlab as bl

    rate = bl.rate_from_pair(1, T)
    spec = bl.GrowthSpec(base=base, periods=elements - 1, percent=rate)
    return bl.digit_distribution(bl.gen_fixed(spec))


@pytest.fixture
def rng():
    return np.random.default_rng(20240815)
