"""Exact failure probabilities for toy-sized codes.

Decoding fails iff some nonzero codeword is orthogonal to every received
column. The set of such codewords only shrinks as columns arrive, so the
failure probability after m columns follows from a Markov chain whose state
is that set (a bitmask over the nonzero codewords) and whose transitions
enumerate every possible LT column with its exact probability.
"""

import itertools
from collections import defaultdict
from collections.abc import Iterable
from fractions import Fraction
from math import comb

import numpy as np

from raptorbound.codes.distribution import DegreeDistribution
from raptorbound.codes.outer import OuterCode
from raptorbound.core.errors import DomainError

MAX_TOY_CODEWORDS = 4096


def _column_transitions(code: OuterCode, dist: DegreeDistribution) -> dict[int, Fraction]:
    """Probability of each 'annihilated codewords' mask produced by a single column."""
    if dist.d_max > code.h:
        raise DomainError(f"Maximum degree {dist.d_max} exceeds h={code.h}")
    words = code.codewords()[1:]
    if len(words) > MAX_TOY_CODEWORDS:
        raise DomainError(f"Code has {len(words) + 1} codewords; the exact oracle is for toy codes")
    f = code.field
    q1 = f.q - 1
    transitions: dict[int, Fraction] = defaultdict(Fraction)
    for d, omega in dist.exact_pairs():
        weight = omega / (comb(code.h, d) * q1**d)
        for support in itertools.combinations(range(code.h), d):
            sub = words[:, list(support)]
            for coeffs in itertools.product(range(1, f.q), repeat=d):
                products = f.mul_array(sub, np.asarray(coeffs, dtype=np.int64)[None, :])
                inner = np.bitwise_xor.reduce(products, axis=1)
                mask = 0
                for i in np.flatnonzero(inner == 0):
                    mask |= 1 << int(i)
                transitions[mask] += weight
    return dict(transitions)


def exact_failure_curve(
    code: OuterCode, dist: DegreeDistribution, ms: Iterable[int]
) -> dict[int, Fraction]:
    """Exact failure probability after each number of received columns in ``ms``."""
    targets = sorted(set(ms))
    if targets and targets[0] < 0:
        raise DomainError("Number of received columns must be >= 0")
    transitions = _column_transitions(code, dist)
    n_words = code.q ** code.true_dimension() - 1
    state: dict[int, Fraction] = {(1 << n_words) - 1: Fraction(1)}
    curve: dict[int, Fraction] = {}
    step = 0
    for m in targets:
        while step < m:
            nxt: dict[int, Fraction] = defaultdict(Fraction)
            for survivors, p in state.items():
                if survivors == 0:
                    nxt[0] += p
                    continue
                for mask, t in transitions.items():
                    nxt[survivors & mask] += p * t
            state = dict(nxt)
            step += 1
        curve[m] = sum((p for s, p in state.items() if s), Fraction(0))
    return curve


def exact_failure_probability(code: OuterCode, dist: DegreeDistribution, m: int) -> Fraction:
    """Probability that ML decoding fails with m received LT columns."""
    return exact_failure_curve(code, dist, [m])[m]
