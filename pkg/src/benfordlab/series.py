"""Growth-series generators.

Every generator emits a LogSeries: the series carried as log10 values. That
is the only representation that survives the interesting regimes (factorials
beyond 170!, self-powers beyond 143^143, hourly-compounded growth reaching
10^219), where linear doubles overflow. Linear values are materialized only
on demand for display.

Length convention: a fixed-rate spec with N periods yields N + 1 elements
including the base.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError


@dataclass(frozen=True)
class GrowthSpec:
    """Fixed-factor growth: base B, factor F = 1 + percent/100, N periods."""

    base: float
    periods: int
    percent: float | None = None
    factor: float | None = None

    def __post_init__(self):
        if self.percent is None and self.factor is None:
            raise DomainError("specify percent or factor")
        if self.percent is None:
            object.__setattr__(self, "percent", 100.0 * (self.factor - 1.0))
        elif self.factor is None:
            object.__setattr__(self, "factor", 1.0 + self.percent / 100.0)
        elif abs(self.factor - (1.0 + self.percent / 100.0)) > 1e-12:
            raise DomainError(
                f"factor {self.factor} inconsistent with percent {self.percent}"
            )
        if not (self.base > 0):
            raise DomainError(f"base must be positive, got {self.base}")
        if not (self.factor > 1):
            raise DomainError(f"factor must exceed 1, got {self.factor}")
        if self.periods < 1:
            raise DomainError(f"periods must be >= 1, got {self.periods}")

    @property
    def log_factor(self) -> float:
        return math.log10(self.factor)


@dataclass(frozen=True)
class RandomGrowthSpec:
    """Growth with per-period factors drawn Uniform(factor_low, factor_high)."""

    base: float
    factor_low: float
    factor_high: float
    periods: int
    seed: int

    def __post_init__(self):
        if not (self.base > 0):
            raise DomainError(f"base must be positive, got {self.base}")
        if not (1.0 < self.factor_low < self.factor_high):
            raise DomainError(
                f"need 1 < factor_low < factor_high, got "
                f"({self.factor_low}, {self.factor_high})"
            )
        if self.periods < 1:
            raise DomainError(f"periods must be >= 1, got {self.periods}")


@dataclass(frozen=True, eq=False)
class LogSeries:
    """A growth series represented as log10 values."""

    logs: np.ndarray
    meta: str = field(default="")

    def __len__(self) -> int:
        return int(self.logs.size)

    def mantissas(self) -> np.ndarray:
        m = self.logs % 1.0
        m[m >= 1.0] -= 1.0
        return m

    def values(self) -> np.ndarray:
        """Linear values; overflows to inf where 10^log exceeds float range."""
        with np.errstate(over="ignore"):
            return np.power(10.0, self.logs)


def gen_fixed(spec: GrowthSpec) -> LogSeries:
    """B, BF, BF^2, ..., BF^N as logs: log10(B) + n * log10(F)."""
    n = np.arange(spec.periods + 1, dtype=float)
    logs = math.log10(spec.base) + n * spec.log_factor
    return LogSeries(
        logs=logs,
        meta=f"fixed(base={spec.base}, percent={spec.percent}, periods={spec.periods})",
    )


def gen_random(spec: RandomGrowthSpec) -> LogSeries:
    """B, BU1, BU1U2, ... with Ui ~ Uniform(low, high) in the linear domain.

    Factors are drawn uniformly as linear multipliers and only then taken to
    logs. The generator is NumPy's default PCG64 seeded with spec.seed, so a
    given spec reproduces bit-identically.
    """
    rng = np.random.default_rng(spec.seed)
    steps = np.log10(rng.uniform(spec.factor_low, spec.factor_high, spec.periods))
    logs = np.empty(spec.periods + 1)
    logs[0] = math.log10(spec.base)
    logs[1:] = logs[0] + np.cumsum(steps)
    return LogSeries(
        logs=logs,
        meta=(
            f"random(base={spec.base}, support=({spec.factor_low}, "
            f"{spec.factor_high}), periods={spec.periods}, seed={spec.seed})"
        ),
    )


def gen_super(base: float, factor: float, count: int) -> LogSeries:
    """Growth whose factors themselves grow: exponents 0, 1, 3, 6, ... (n^2+n)/2.

    The base counts as element 1 (exponent 0).
    """
    if not (base > 0):
        raise DomainError(f"base must be positive, got {base}")
    if not (factor > 1):
        raise DomainError(f"factor must exceed 1, got {factor}")
    if count < 1:
        raise DomainError(f"count must be >= 1, got {count}")
    n = np.arange(count, dtype=float)
    logs = math.log10(base) + (n * n + n) / 2.0 * math.log10(factor)
    return LogSeries(logs=logs, meta=f"super(base={base}, factor={factor}, count={count})")


def gen_factorial(count: int) -> LogSeries:
    """1!, 2!, ..., count! as a cumulative sum of log10(k)."""
    if count < 1:
        raise DomainError(f"count must be >= 1, got {count}")
    logs = np.cumsum(np.log10(np.arange(1, count + 1, dtype=float)))
    return LogSeries(logs=logs, meta=f"factorial(count={count})")


def gen_selfpowered(count: int) -> LogSeries:
    """1^1, 2^2, ..., count^count: logs are n * log10(n)."""
    if count < 1:
        raise DomainError(f"count must be >= 1, got {count}")
    n = np.arange(1, count + 1, dtype=float)
    logs = n * np.log10(n)
    return LogSeries(logs=logs, meta=f"selfpowered(count={count})")


def sample_continuous(
    base: float, factor_per_period: float, stride: float, count: int
) -> LogSeries:
    """Read the continuous curve B * F^t once every `stride` periods.

    Equivalent to fixed growth with effective factor F^stride; with stride 60
    and F = 1.05 this is the hourly reader of a per-minute 5% curve.
    """
    if not (base > 0):
        raise DomainError(f"base must be positive, got {base}")
    if not (factor_per_period > 1):
        raise DomainError(f"factor must exceed 1, got {factor_per_period}")
    if not (stride > 0):
        raise DomainError(f"stride must be positive, got {stride}")
    if count < 1:
        raise DomainError(f"count must be >= 1, got {count}")
    n = np.arange(count, dtype=float)
    logs = math.log10(base) + n * (stride * math.log10(factor_per_period))
    return LogSeries(
        logs=logs,
        meta=(
            f"continuous(base={base}, factor={factor_per_period}, "
            f"stride={stride}, count={count})"
        ),
    )


def exponent_difference(series: LogSeries) -> float:
    """log10(last) - log10(first): the order of magnitude of the series."""
    logs = np.asarray(getattr(series, "logs", series), dtype=float)
    if logs.size == 0:
        raise DomainError("empty series has no exponent difference")
    return float(logs[-1] - logs[0])
