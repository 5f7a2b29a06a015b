"""benfordlab: a first-digit law laboratory for exponential growth series.

Generates growth-series families as log10-domain carriers, measures
first-digit conformance with the SSD metric, classifies and enumerates
rational-resonance anomalies, runs calibrated rate sweeps and random-rate
experiments, fits k/x densities over a decade, and simulates random-growth
population models.
"""

__version__ = "0.1.0"

from ._kernel import backend as kernel_backend
from .continuous import (
    CrossingTable,
    DwellProportions,
    crossing_table,
    crossing_time,
    dwell_intervals,
    dwell_proportions,
)
from .digits import (
    BENFORD_PERCENT,
    BENFORD_PROBS,
    BenfordReference,
    DigitDistribution,
    MantissaDecomposition,
    benford_expected,
    digit_distribution,
    first_digit,
    first_digit_from_log,
    mantissa_decompose,
    ssd,
)
from .errors import DomainError, GridSizeError
from .kxfit import Histogram, KxFit, doubling_check, fit_k, histogram
from .rational import (
    DisruptivePair,
    RationalApprox,
    cycle_structure,
    detect_rational,
    enumerate_pairs,
    rate_from_pair,
    raw_pair_count,
    theoretical_deviation,
)
from .ross import RossConfig, ross_inverted, ross_model1, ross_model2, run_ross
from .series import (
    GrowthSpec,
    LogSeries,
    RandomGrowthSpec,
    exponent_difference,
    gen_factorial,
    gen_fixed,
    gen_random,
    gen_selfpowered,
    gen_super,
    sample_continuous,
)
from .sweep import (
    DEFAULT_LENGTHS,
    DEFAULT_REGISTER_THRESHOLD,
    ExperimentSummary,
    RateCluster,
    SweepRecord,
    SweepResult,
    best_ssd_over_lengths,
    find_clusters,
    random_rate_experiment,
    sweep_range,
)

__all__ = [name for name in dir() if not name.startswith("_")]
