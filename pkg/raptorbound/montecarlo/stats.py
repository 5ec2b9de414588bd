"""Confidence intervals for failure-rate estimates."""

import math
from collections.abc import Sequence

import numpy as np
from scipy.stats import binomtest, norm

CONFIDENCE = 0.95


def wilson_interval(
    failures: int, trials: int, confidence: float = CONFIDENCE
) -> tuple[float, float]:
    """Two-sided Wilson score interval for a binomial proportion."""
    if trials < 1:
        raise ValueError("Need at least one trial")
    ci = binomtest(failures, trials).proportion_ci(confidence_level=confidence, method="wilson")
    return float(ci.low), float(ci.high)


def zero_failure_interval(trials: int, confidence: float = CONFIDENCE) -> tuple[float, float]:
    """One-sided exact upper limit when no failure was observed."""
    if trials < 1:
        raise ValueError("Need at least one trial")
    test = binomtest(0, trials, alternative="less")
    ci = test.proportion_ci(confidence_level=confidence, method="exact")
    return 0.0, float(ci.high)


def normal_interval(rates: Sequence[float], confidence: float = CONFIDENCE) -> tuple[float, float]:
    """Normal-approximation interval for the mean of per-code rates, clipped to [0, 1]."""
    values = np.asarray(rates, dtype=float)
    if values.size < 2:
        raise ValueError("Need at least two rates for a normal interval")
    mean = float(values.mean())
    half = float(norm.ppf(0.5 + confidence / 2) * values.std(ddof=1) / math.sqrt(values.size))
    return max(0.0, mean - half), min(1.0, mean + half)


def binomial_sigma(rate: float, trials: int) -> float:
    """Standard error of a binomial proportion."""
    return math.sqrt(rate * (1 - rate) / trials) if trials else math.inf
