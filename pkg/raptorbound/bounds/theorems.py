"""Upper bounds on the ML decoding failure probability of q-ary Raptor codes.

All three bounds share sum_{l>=1} A_l pi_l^(k+delta); they differ in the
enumerator they accept and in the factor 1/(q-1) gained by counting one
codeword per scalar class.
"""

import math
from collections.abc import Iterable
from dataclasses import dataclass, field

import numpy as np
from scipy.special import logsumexp

from raptorbound.bounds.pi import pi_table
from raptorbound.codes.distribution import DegreeDistribution
from raptorbound.codes.enumerators import EnumeratorKind, WeightEnumerator
from raptorbound.core.errors import DomainError
from raptorbound.gf.field import FieldSpec


@dataclass(frozen=True)
class BoundPoint:
    raw: float
    clamped: float


@dataclass
class BoundCurve:
    """Bound values per overhead for one code, distribution and field."""

    h: int
    k: int
    q: int
    distribution: str
    theorem: int
    points: dict[int, BoundPoint] = field(default_factory=dict)

    def rows(self) -> list[tuple[int, float, float]]:
        return [(delta, p.raw, p.clamped) for delta, p in sorted(self.points.items())]


def _log_sum(
    we: WeightEnumerator, k: int, delta: int, h: int, dist: DegreeDistribution, f: FieldSpec
) -> float:
    """log of sum_{l=1}^h A_l pi_l^(k+delta) over the stored multiplicities."""
    if we.h != h:
        raise DomainError(f"Enumerator length {we.h} does not match h={h}")
    if we.q != f.q:
        raise DomainError(f"Enumerator over GF({we.q}) used with GF({f.q})")
    if delta < 0:
        raise DomainError(f"Overhead must be >= 0, got {delta}")
    if k < 0:
        raise DomainError(f"k must be >= 0, got {k}")

    exponent = k + delta
    log_pi = np.asarray(pi_table(h, dist, f).log_values[1:])
    log_a = np.asarray(we.log_values[1:])
    if exponent == 0:
        terms = log_a
    else:
        with np.errstate(invalid="ignore"):
            terms = log_a + exponent * log_pi
        # 0 * pi^e and A * 0 both contribute nothing
        terms = np.where(np.isneginf(log_a) | np.isneginf(log_pi), -np.inf, terms)
    if terms.size == 0 or np.all(np.isneginf(terms)):
        return -math.inf
    return float(logsumexp(terms))


def _finish(log_value: float) -> float:
    if log_value == -math.inf:
        return 0.0
    try:
        return math.exp(log_value)
    except OverflowError:
        return math.inf


def bound_theorem1(
    we: WeightEnumerator, k: int, delta: int, h: int, dist: DegreeDistribution, f: FieldSpec
) -> float:
    """sum_{l=1}^h A_l pi_l^(k+delta), unclamped."""
    log_value = _log_sum(we, k, delta, h, dist, f)
    if we.kind is EnumeratorKind.PROJECTIVE:
        log_value += math.log(f.q - 1)
    return _finish(log_value)


def bound_theorem2(
    we: WeightEnumerator, k: int, delta: int, h: int, dist: DegreeDistribution, f: FieldSpec
) -> float:
    """Theorem 1 bound divided by q - 1."""
    log_value = _log_sum(we, k, delta, h, dist, f)
    if we.kind is not EnumeratorKind.PROJECTIVE:
        log_value -= math.log(f.q - 1)
    return _finish(log_value)


def bound_theorem3(
    expected_we: WeightEnumerator,
    k: int,
    delta: int,
    h: int,
    dist: DegreeDistribution,
    f: FieldSpec,
) -> float:
    """Ensemble-average bound from an expected enumerator; k is the design dimension."""
    if expected_we.kind is not EnumeratorKind.EXPECTED:
        raise DomainError(
            f"The ensemble bound needs an expected enumerator, got {expected_we.kind.value}"
        )
    return bound_theorem2(expected_we, k, delta, h, dist, f)


BOUNDS = {1: bound_theorem1, 2: bound_theorem2, 3: bound_theorem3}


def bound_curve(
    we: WeightEnumerator,
    k: int,
    deltas: Iterable[int],
    h: int,
    dist: DegreeDistribution,
    f: FieldSpec,
    theorem: int,
) -> BoundCurve:
    """Evaluate one bound over a range of overheads."""
    try:
        bound = BOUNDS[theorem]
    except KeyError:
        raise DomainError(f"Unknown theorem {theorem}; choose 1, 2 or 3") from None
    curve = BoundCurve(h=h, k=k, q=f.q, distribution=dist.name, theorem=theorem)
    for delta in deltas:
        raw = bound(we, k, delta, h, dist, f)
        curve.points[delta] = BoundPoint(raw=raw, clamped=min(1.0, raw))
    return curve
