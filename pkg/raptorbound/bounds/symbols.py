"""Probabilities of zero-valued LT output symbols.

``phi`` is the closed form for the chance that i i.i.d. uniform nonzero
field elements sum to zero. The two ``lemma1_*`` functions compute the
same quantity from first principles over the additive group (Z_2)^m and
serve as oracles for it.
"""

from fractions import Fraction
from math import comb

import numpy as np
from scipy.linalg import hadamard

from raptorbound.core.errors import DomainError
from raptorbound.gf.field import FieldSpec

ORACLE_MAX_DEGREE = 8


def phi(i: int, f: FieldSpec) -> Fraction:
    """(1/q) (1 + (-1)^i / (q-1)^(i-1))."""
    if i < 0:
        raise DomainError(f"phi needs i >= 0, got {i}")
    q = f.q
    sign = 1 if i % 2 == 0 else -1
    return Fraction(1, q) * (1 + sign * Fraction(q - 1) ** (1 - i))


def lemma1_convolution_oracle(l: int, f: FieldSpec) -> Fraction:
    """P(X_1 + ... + X_l = 0) by l - 1 explicit XOR convolutions."""
    if l < 1:
        raise DomainError(f"Need l >= 1, got {l}")
    if f.m > ORACLE_MAX_DEGREE:
        raise DomainError(f"Convolution oracle limited to m <= {ORACLE_MAX_DEGREE}")
    q = f.q
    # counts[a] = number of nonzero l-tuples summing to a
    step = [0] + [1] * (q - 1)
    counts = list(step)
    for _ in range(l - 1):
        nxt = [0] * q
        for a, ca in enumerate(counts):
            if ca:
                for b in range(1, q):
                    nxt[a ^ b] += ca
        counts = nxt
    return Fraction(counts[0], (q - 1) ** l)


def lemma1_transform(l: int, f: FieldSpec) -> Fraction:
    """Same probability through the Walsh-Hadamard transform of the nonzero indicator."""
    if l < 1:
        raise DomainError(f"Need l >= 1, got {l}")
    if f.m > ORACLE_MAX_DEGREE:
        raise DomainError(f"Transform oracle limited to m <= {ORACLE_MAX_DEGREE}")
    q = f.q
    indicator = np.ones(q, dtype=np.int64)
    indicator[0] = 0
    spectrum = hadamard(q, dtype=np.int64) @ indicator
    total = sum(int(s) ** l for s in spectrum)
    return Fraction(total, q * (q - 1) ** l)


def theta(i: int, l: int, j: int, h: int) -> Fraction:
    """Hypergeometric probability that a degree-j support meets exactly i of l nonzero positions."""
    if i < 0 or i > l or j - i < 0 or j - i > h - l:
        return Fraction(0)
    return Fraction(comb(l, i) * comb(h - l, j - i), comb(h, j))
