"""Dense matrices over GF(2^m) and their linear algebra.

GF(2) inputs are routed to the bit-packed routines in ``gf2``; every other
field uses numpy row operations with the field's multiplication tables.
Both paths compute the same reduced row echelon form, so rank and
nullspace results are identical whichever path runs.
"""

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from raptorbound.core.errors import DomainError
from raptorbound.gf import gf2
from raptorbound.gf.field import FieldSpec


@dataclass(frozen=True)
class FqMatrix:
    """Immutable rows x cols matrix with entries in [0, q - 1]."""

    entries: np.ndarray
    q: int

    def __post_init__(self) -> None:
        entries = np.array(self.entries, dtype=np.int64, copy=True)
        if entries.ndim != 2:
            raise DomainError(f"Matrix entries must be 2-dimensional, got shape {entries.shape}")
        if entries.size and (entries.min() < 0 or entries.max() >= self.q):
            raise DomainError(f"Matrix entries must lie in [0, {self.q - 1}]")
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @property
    def rows(self) -> int:
        return int(self.entries.shape[0])

    @property
    def cols(self) -> int:
        return int(self.entries.shape[1])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[int]], q: int, cols: int | None = None
    ) -> "FqMatrix":
        if not rows:
            return cls.zeros(0, cols or 0, q)
        return cls(np.array(rows, dtype=np.int64), q)

    @classmethod
    def zeros(cls, rows: int, cols: int, q: int) -> "FqMatrix":
        return cls(np.zeros((rows, cols), dtype=np.int64), q)

    @classmethod
    def identity(cls, n: int, q: int) -> "FqMatrix":
        return cls(np.eye(n, dtype=np.int64), q)

    def transpose(self) -> "FqMatrix":
        return FqMatrix(self.entries.T, self.q)

    def vstack(self, other: "FqMatrix") -> "FqMatrix":
        if other.cols != self.cols or other.q != self.q:
            raise DomainError(f"Cannot stack {self.shape} over GF({self.q}) with {other.shape}")
        return FqMatrix(np.vstack([self.entries, other.entries]), self.q)

    def to_lists(self) -> list[list[int]]:
        return [[int(x) for x in row] for row in self.entries]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FqMatrix):
            return NotImplemented
        return self.q == other.q and np.array_equal(self.entries, other.entries)

    def __hash__(self) -> int:
        return hash((self.q, self.entries.shape, self.entries.tobytes()))


def _check_field(matrix: FqMatrix, f: FieldSpec) -> None:
    if matrix.q != f.q:
        raise DomainError(f"Matrix over GF({matrix.q}) used with GF({f.q})")


def row_reduce(matrix: FqMatrix, f: FieldSpec) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form (pivots normalised to 1) and pivot columns.

    Works on a copy; the input matrix is never mutated.
    """
    _check_field(matrix, f)
    if f.q == 2:
        reduced, pivots = gf2.rref_packed(gf2.pack_rows(matrix.entries), matrix.cols)
        return gf2.unpack_rows(reduced, matrix.cols), pivots

    work = matrix.entries.copy()
    n_rows, n_cols = work.shape
    pivots: list[int] = []
    r = 0
    for col in range(n_cols):
        if r == n_rows:
            break
        nonzero = np.flatnonzero(work[r:, col])
        if nonzero.size == 0:
            continue
        pivot_row = r + int(nonzero[0])
        if pivot_row != r:
            work[[r, pivot_row]] = work[[pivot_row, r]]
        work[r] = f.mul_array(f.inv(int(work[r, col])), work[r])
        factors = work[:, col].copy()
        factors[r] = 0
        targets = np.flatnonzero(factors)
        if targets.size:
            work[targets] ^= f.mul_array(factors[targets, None], work[r][None, :])
        pivots.append(col)
        r += 1
    return work[:r], pivots


def rank(matrix: FqMatrix, f: FieldSpec) -> int:
    """Rank over GF(q); 0 <= rank <= min(rows, cols)."""
    _check_field(matrix, f)
    if f.q == 2:
        return gf2.rank_packed(gf2.pack_rows(matrix.entries))
    return len(row_reduce(matrix, f)[1])


def nullspace_basis(matrix: FqMatrix, f: FieldSpec) -> FqMatrix:
    """(h - rank) x h matrix whose rows span {v : M v^T = 0}."""
    _check_field(matrix, f)
    h = matrix.cols
    if f.q == 2:
        basis = gf2.nullspace_packed(gf2.pack_rows(matrix.entries), h)
        return FqMatrix(gf2.unpack_rows(basis, h).reshape(len(basis), h), 2)

    reduced, pivots = row_reduce(matrix, f)
    pivot_set = set(pivots)
    free_cols = [c for c in range(h) if c not in pivot_set]
    basis = np.zeros((len(free_cols), h), dtype=np.int64)
    for i, free in enumerate(free_cols):
        basis[i, free] = 1
        # characteristic 2: -x = x
        for row, pivot in enumerate(pivots):
            basis[i, pivot] = reduced[row, free]
    return FqMatrix(basis, f.q)


def matmul(a: FqMatrix, b: FqMatrix, f: FieldSpec) -> FqMatrix:
    """Matrix product over GF(q)."""
    _check_field(a, f)
    _check_field(b, f)
    if a.cols != b.rows:
        raise DomainError(f"Cannot multiply {a.shape} by {b.shape}")
    if f.q == 2:
        return FqMatrix((a.entries @ b.entries) & 1, 2)
    product = np.zeros((a.rows, b.cols), dtype=np.int64)
    for t in range(a.cols):
        product ^= f.mul_array(a.entries[:, t, None], b.entries[None, t, :])
    return FqMatrix(product, f.q)
