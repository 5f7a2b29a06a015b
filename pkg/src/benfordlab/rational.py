"""Rational-resonance theory of anomalous growth rates.

A fixed-rate series is rebellious when log10(F) = L/T in lowest terms: its
significands then cycle with period T (climbing L whole decades per cycle)
and the mantissa never equidistributes. These helpers classify rates,
enumerate every disruptive pair on a percent interval, and expose the cycle
itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError


@dataclass(frozen=True)
class RationalApprox:
    """Best rational L/T near a log-factor, with its absolute error."""

    L: int
    T: int
    error: float
    reduced: bool


@dataclass(frozen=True)
class DisruptivePair:
    """A reduced pair {T, L} with its implied growth rate and 500/T heuristic.

    `boundary` marks L == T (the 900% edge of the interval), enumerated but
    usually excluded from deviation rankings.
    """

    T: int
    L: int
    rate_percent: float
    deviation: float
    boundary: bool


def rate_from_pair(L: int, T: int) -> float:
    """Percent growth rate whose log-factor is exactly L/T."""
    if L < 1 or T < 1:
        raise DomainError(f"L and T must be positive integers, got ({L}, {T})")
    return 100.0 * (10.0 ** (L / T) - 1.0)


def detect_rational(
    logF: float, Tmax: int, tolerance: float
) -> RationalApprox | None:
    """Best reduced L/T with T <= Tmax, if within tolerance of logF.

    Exhaustive search over T (Tmax is small in this theory, so this is exact
    and trivially verifiable); ties go to the smaller T, whose predicted
    disruption 500/T is stronger.
    """
    if not (0.0 < logF <= 1.0):
        raise DomainError(f"log-factor must lie in (0, 1], got {logF}")
    if Tmax < 1:
        raise DomainError(f"Tmax must be >= 1, got {Tmax}")
    if tolerance < 0:
        raise DomainError(f"tolerance must be >= 0, got {tolerance}")
    best: tuple[float, int, int] | None = None
    for T in range(1, Tmax + 1):
        L = max(1, round(logF * T))
        err = abs(logF - L / T)
        if best is None or err < best[0]:
            best = (err, T, L)
    err, T, L = best
    if err > tolerance:
        return None
    g = math.gcd(L, T)
    return RationalApprox(L=L // g, T=T // g, error=err, reduced=True)


def max_whole_decades(T: int, Ptop: float) -> int:
    """Largest L allowed at cycle length T on the interval (0, Ptop]."""
    return math.floor(T * math.log10(1.0 + Ptop / 100.0))


def raw_pair_count(Ptop: float, Tmax: int) -> int:
    """Pair count before discarding non-reduced forms."""
    if not (Ptop > 0) or Tmax < 1:
        raise DomainError("need Ptop > 0 and Tmax >= 1")
    return sum(max_whole_decades(T, Ptop) for T in range(1, Tmax + 1))


def enumerate_pairs(Ptop: float, Tmax: int) -> list[DisruptivePair]:
    """All reduced disruptive pairs with T <= Tmax and rate <= Ptop percent.

    L is capped by L <= T * log10(1 + Ptop/100); non-reduced forms are
    duplicates of smaller cycles and are dropped. Sorted by growth rate.
    """
    if not (Ptop > 0) or Tmax < 1:
        raise DomainError("need Ptop > 0 and Tmax >= 1")
    pairs = []
    for T in range(1, Tmax + 1):
        for L in range(1, max_whole_decades(T, Ptop) + 1):
            if math.gcd(L, T) == 1:
                pairs.append(
                    DisruptivePair(
                        T=T,
                        L=L,
                        rate_percent=rate_from_pair(L, T),
                        deviation=theoretical_deviation(T),
                        boundary=(L == T),
                    )
                )
    pairs.sort(key=lambda p: p.rate_percent)
    return pairs


def theoretical_deviation(T: int) -> float:
    """The 500/T heuristic: a ranking device, not an SSD predictor."""
    if T < 1:
        raise DomainError(f"T must be >= 1, got {T}")
    return 500.0 / T


def cycle_structure(L: int, T: int, base: float) -> list[float]:
    """The T significands a rebellious series repeats forever.

    Element n of the series has significand 10^frac(log10(B) + n * L/T);
    there are exactly T distinct ones.
    """
    if L < 1 or T < 1:
        raise DomainError(f"L and T must be positive integers, got ({L}, {T})")
    if math.gcd(L, T) != 1:
        raise DomainError(f"{L}/{T} is not reduced; divide out gcd first")
    if not (base > 0):
        raise DomainError(f"base must be positive, got {base}")
    n = np.arange(T, dtype=float)
    m = (math.log10(base) + n * L / T) % 1.0
    m[m >= 1.0] -= 1.0
    return [float(s) for s in 10.0 ** m]
