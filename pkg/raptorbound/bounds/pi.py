"""pi_l: probability that an LT output symbol is zero on a weight-l word.

Both evaluation paths work in exact rationals and convert to float once,
so they agree to the last bit whenever the Krawtchouk identity holds.
"""

import logging
import math
from fractions import Fraction
from functools import lru_cache

from raptorbound.bounds.krawtchouk import krawtchouk
from raptorbound.bounds.symbols import phi, theta
from raptorbound.codes.distribution import DegreeDistribution
from raptorbound.core.errors import DomainError
from raptorbound.gf.field import FieldSpec

logger = logging.getLogger(__name__)


def _check(l: int, h: int, dist: DegreeDistribution) -> None:
    if dist.d_max > h:
        raise DomainError(f"Maximum degree {dist.d_max} exceeds h={h}")
    if not 0 <= l <= h:
        raise DomainError(f"Weight l={l} out of range [0, {h}]")


def pi_l_direct_exact(l: int, h: int, dist: DegreeDistribution, f: FieldSpec) -> Fraction:
    _check(l, h, dist)
    total = Fraction(0)
    for d, omega in dist.exact_pairs():
        inner = sum(
            (theta(i, l, d, h) * phi(i, f) for i in range(min(d, l) + 1)),
            Fraction(0),
        )
        total += omega * inner
    return total


def pi_l_krawtchouk_exact(l: int, h: int, dist: DegreeDistribution, f: FieldSpec) -> Fraction:
    _check(l, h, dist)
    q = f.q
    ratio_sum = Fraction(0)
    for d, omega in dist.exact_pairs():
        ratio_sum += omega * Fraction(krawtchouk(d, l, h, f), krawtchouk(d, 0, h, f))
    return Fraction(1, q) + Fraction(q - 1, q) * ratio_sum


def pi_l_direct(l: int, h: int, dist: DegreeDistribution, f: FieldSpec) -> float:
    """Sum over degrees and overlaps of theta * phi."""
    return float(pi_l_direct_exact(l, h, dist, f))


def pi_l_krawtchouk(l: int, h: int, dist: DegreeDistribution, f: FieldSpec) -> float:
    """1/q + (q-1)/q * sum_j Omega_j K_dj(l) / K_dj(0)."""
    return float(pi_l_krawtchouk_exact(l, h, dist, f))


class PiTable:
    """pi_0..pi_h for one (h, q, distribution), shared across an overhead sweep."""

    def __init__(self, h: int, dist: DegreeDistribution, f: FieldSpec):
        self.h = h
        self.dist = dist
        self.field = f
        self.values = tuple(pi_l_krawtchouk(l, h, dist, f) for l in range(h + 1))
        self.log_values = tuple(math.log(p) if p > 0 else -math.inf for p in self.values)

    def __getitem__(self, l: int) -> float:
        return self.values[l]

    def __len__(self) -> int:
        return len(self.values)


@lru_cache(maxsize=64)
def pi_table(h: int, dist: DegreeDistribution, f: FieldSpec) -> PiTable:
    """Memoized PiTable."""
    logger.debug("Computing pi table for h=%d, q=%d, dist=%s", h, f.q, dist.name)
    return PiTable(h, dist, f)
