"""Bit-packed GF(2) linear algebra.

A row of length n is a Python int whose bit i holds column i, so row
additions are single word-wide XORs. Binary rank computations dominate
the Monte Carlo workload, hence this dedicated path.
"""

from collections.abc import Iterable, Sequence

import numpy as np


def pack_rows(entries: np.ndarray) -> list[int]:
    """Pack the rows of a 0/1 matrix into ints (bit i = column i)."""
    rows, cols = entries.shape
    if rows == 0:
        return []
    if cols == 0:
        return [0] * rows
    packed = np.packbits(np.asarray(entries, dtype=np.uint8), axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def unpack_rows(rows: Sequence[int], cols: int) -> np.ndarray:
    """Inverse of pack_rows."""
    out = np.zeros((len(rows), cols), dtype=np.int64)
    for i, row in enumerate(rows):
        bits = row
        while bits:
            low = bits & -bits
            out[i, low.bit_length() - 1] = 1
            bits ^= low
    return out


def support_mask(indices: Iterable[int]) -> int:
    """Packed row with ones at the given column indices."""
    mask = 0
    for index in indices:
        mask |= 1 << index
    return mask


def rank_packed(rows: Iterable[int]) -> int:
    """Rank over GF(2) of packed rows; the input is not modified."""
    basis: dict[int, int] = {}
    for row in rows:
        while row:
            lead = row.bit_length() - 1
            pivot = basis.get(lead)
            if pivot is None:
                basis[lead] = row
                break
            row ^= pivot
    return len(basis)


def rref_packed(rows: Sequence[int], cols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form with pivots chosen by first nonzero column.

    Returns the nonzero reduced rows (in pivot order) and their pivot columns.
    """
    work = [row for row in rows if row]
    pivots: list[int] = []
    r = 0
    for col in range(cols):
        bit = 1 << col
        pivot_row = next((i for i in range(r, len(work)) if work[i] & bit), None)
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        for i in range(len(work)):
            if i != r and work[i] & bit:
                work[i] ^= work[r]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def nullspace_packed(rows: Sequence[int], cols: int) -> list[int]:
    """Basis of {v : M v^T = 0} over GF(2), one packed vector per free column."""
    reduced, pivots = rref_packed(rows, cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(cols):
        if free in pivot_set:
            continue
        vector = 1 << free
        for row, pivot in zip(reduced, pivots):
            if row >> free & 1:
                vector |= 1 << pivot
        basis.append(vector)
    return basis
