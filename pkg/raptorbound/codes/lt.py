"""Random LT output columns.

Each received symbol is a column of length h over GF(q): a degree d drawn
from Omega, a support of d distinct positions drawn uniformly, and nonzero
coefficients drawn uniformly on that support.
"""

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from raptorbound.codes.distribution import DegreeDistribution
from raptorbound.core.errors import DomainError
from raptorbound.gf import gf2
from raptorbound.gf.field import FieldSpec
from raptorbound.gf.matrix import FqMatrix


@dataclass(frozen=True)
class ReceivedMatrix:
    """The h x m matrix of received LT columns, stored column by column."""

    h: int
    q: int
    supports: tuple[tuple[int, ...], ...]
    coefficients: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.supports) != len(self.coefficients):
            raise DomainError("Each column needs one coefficient per support position")
        for support, coeffs in zip(self.supports, self.coefficients):
            if len(support) != len(coeffs) or len(set(support)) != len(support):
                raise DomainError(f"Malformed column support {support}")
            if any(not 0 <= i < self.h for i in support):
                raise DomainError(f"Support {support} out of range for h={self.h}")
            if any(not 0 < c < self.q for c in coeffs):
                raise DomainError(f"Coefficients must be nonzero GF({self.q}) elements")

    @property
    def m(self) -> int:
        return len(self.supports)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.supports)

    @cached_property
    def columns(self) -> FqMatrix:
        entries = np.zeros((self.h, self.m), dtype=np.int64)
        for j, (support, coeffs) in enumerate(zip(self.supports, self.coefficients)):
            entries[list(support), j] = coeffs
        return FqMatrix(entries, self.q)

    @cached_property
    def packed_columns(self) -> list[int]:
        """Each column as a packed GF(2) row of length h."""
        if self.q != 2:
            raise DomainError("Packed columns are only defined over GF(2)")
        return [gf2.support_mask(s) for s in self.supports]

    def extend(self, other: "ReceivedMatrix") -> "ReceivedMatrix":
        """Append the columns of another matrix."""
        if (other.h, other.q) != (self.h, self.q):
            raise DomainError("Cannot join received matrices of different shape or field")
        return ReceivedMatrix(
            h=self.h,
            q=self.q,
            supports=self.supports + other.supports,
            coefficients=self.coefficients + other.coefficients,
        )

    def prefix(self, m: int) -> "ReceivedMatrix":
        return ReceivedMatrix(
            h=self.h, q=self.q, supports=self.supports[:m], coefficients=self.coefficients[:m]
        )


def sample_support(h: int, d: int, rng: np.random.Generator) -> tuple[int, ...]:
    """d distinct positions out of h via a partial Fisher-Yates shuffle."""
    pool = list(range(h))
    offsets = rng.integers(0, h - np.arange(d))
    for i, offset in enumerate(offsets):
        j = i + int(offset)
        pool[i], pool[j] = pool[j], pool[i]
    return tuple(pool[:d])


def sample_received_matrix(
    h: int, m: int, dist: DegreeDistribution, f: FieldSpec, rng: np.random.Generator
) -> ReceivedMatrix:
    """Draw m independent LT columns."""
    if dist.d_max > h:
        raise DomainError(f"Maximum degree {dist.d_max} exceeds h={h}")
    if m < 0:
        raise DomainError(f"Number of columns must be >= 0, got {m}")
    supports = []
    coefficients = []
    for d in dist.sample(rng, m):
        d = int(d)
        supports.append(sample_support(h, d, rng))
        coefficients.append(tuple(int(c) for c in rng.integers(1, f.q, size=d)))
    return ReceivedMatrix(h=h, q=f.q, supports=tuple(supports), coefficients=tuple(coefficients))
