"""Random-growth population models: digit law of the last terms.

Model 1 draws one base and one factor per series; model 2 redraws the factor
every period; the inverted model fixes base and factor and randomizes only
the series age. Only last terms are tallied (that is the model), unless
`include_trajectory` asks for every intermediate term as a contrast.

The factor/base support defaults to Uniform(1, 10]. NumPy's uniform samples
the half-open [low, high); whether the boundary sits at 1 or at 10 is
immaterial at double precision and ignored here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .digits import DigitDistribution, digits_from_mantissas, ssd
from .errors import DomainError


@dataclass(frozen=True)
class RossConfig:
    """Parameters for one model run, mostly for CLI echo / manifests."""

    model: str
    population: int
    seed: int
    periods: int | None = None
    max_age: int | None = None
    base: float | None = None
    factor: float | None = None


def _distribution_from_counts(counts: np.ndarray) -> DigitDistribution:
    total = int(counts.sum())
    proportions = counts / total
    return DigitDistribution(
        counts=counts.astype(np.int64),
        total=total,
        proportions=proportions,
        ssd=ssd(100.0 * proportions),
    )


def _tally_logs(logs: np.ndarray) -> DigitDistribution:
    m = logs % 1.0
    m[m >= 1.0] -= 1.0
    d = digits_from_mantissas(m)
    return _distribution_from_counts(np.bincount(d, minlength=10)[1:10])


def _check(periods: int, population: int):
    # periods 0 is the no-growth baseline: digits of the bare base draw
    if periods < 0:
        raise DomainError(f"periods must be >= 0, got {periods}")
    if population < 1:
        raise DomainError(f"population must be >= 1, got {population}")


def ross_model1(
    periods: int,
    population: int,
    seed: int,
    support=(1.0, 10.0),
    include_trajectory: bool = False,
) -> DigitDistribution:
    """Last terms of B * F^N over a population with B, F ~ Uniform(support)."""
    _check(periods, population)
    rng = np.random.default_rng(seed)
    log_b = np.log10(rng.uniform(support[0], support[1], population))
    log_f = np.log10(rng.uniform(support[0], support[1], population))
    if include_trajectory:
        logs = log_b[:, None] + np.arange(periods + 1) * log_f[:, None]
        return _tally_logs(logs.ravel())
    return _tally_logs(log_b + periods * log_f)


def ross_model2(
    periods: int,
    population: int,
    seed: int,
    support=(1.0, 10.0),
    include_trajectory: bool = False,
) -> DigitDistribution:
    """As model 1, but the factor is redrawn independently every period."""
    _check(periods, population)
    rng = np.random.default_rng(seed)
    log_b = np.log10(rng.uniform(support[0], support[1], population))
    steps = np.log10(rng.uniform(support[0], support[1], (population, periods)))
    if include_trajectory:
        logs = np.concatenate(
            [log_b[:, None], log_b[:, None] + np.cumsum(steps, axis=1)], axis=1
        )
        return _tally_logs(logs.ravel())
    return _tally_logs(log_b + steps.sum(axis=1))


def ross_inverted(
    base: float,
    factor: float,
    max_age: int,
    population: int,
    seed: int,
    include_trajectory: bool = False,
) -> DigitDistribution:
    """Fixed base and factor; only the series age varies, uniform on 0..max_age."""
    if not (base > 0):
        raise DomainError(f"base must be positive, got {base}")
    if not (factor > 1):
        raise DomainError(f"factor must exceed 1, got {factor}")
    if max_age < 0:
        raise DomainError(f"max_age must be >= 0, got {max_age}")
    if population < 1:
        raise DomainError(f"population must be >= 1, got {population}")
    rng = np.random.default_rng(seed)
    ages = rng.integers(0, max_age + 1, population)
    log_b = math.log10(base)
    log_f = math.log10(factor)
    if include_trajectory:
        # term k exists in every series at least k periods old
        weights = np.cumsum(np.bincount(ages, minlength=max_age + 1)[::-1])[::-1]
        m = (log_b + np.arange(max_age + 1) * log_f) % 1.0
        m[m >= 1.0] -= 1.0
        d = digits_from_mantissas(m)
        counts = np.zeros(10, dtype=np.int64)
        np.add.at(counts, d, weights)
        return _distribution_from_counts(counts[1:10])
    return _tally_logs(log_b + ages * log_f)


def run_ross(config: RossConfig) -> DigitDistribution:
    """Dispatch a RossConfig to the matching model."""
    if config.model == "model1":
        return ross_model1(config.periods, config.population, config.seed)
    if config.model == "model2":
        return ross_model2(config.periods, config.population, config.seed)
    if config.model == "inverted":
        return ross_inverted(
            config.base, config.factor, config.max_age, config.population, config.seed
        )
    raise DomainError(f"unknown model {config.model!r}")
