"""Inactivation decoding.

Received LT equations are peeled while some equation has exactly one
unresolved unknown. When peeling stalls, the unresolved unknown that occurs
in most pending equations is inactivated (ties go to the lowest index) and
peeling resumes. Leftover equations, together with the outer code's
parity-check rows, form a dense system over the unknowns that were not
peeled, solved by Gaussian elimination.

Every peeled equation owns a pivot column that was eliminated from all
other equations, so the total rank is the peel count plus the rank of the
dense system and the failure flag matches ``ml_failure`` exactly.
"""

import numpy as np

from raptorbound.codes.lt import ReceivedMatrix
from raptorbound.codes.outer import CodeForm, OuterCode
from raptorbound.decoder.ml import DecodeOutcome, check_compatible
from raptorbound.gf import gf2
from raptorbound.gf.field import FieldSpec
from raptorbound.gf.matrix import FqMatrix, matmul, rank


def _most_frequent(counts: list[int] | np.ndarray) -> int | None:
    """Index of the largest positive count, lowest index on ties."""
    best = int(np.argmax(counts))
    return best if counts[best] > 0 else None


def _decode_binary(lt_rows: list[int], dense_rows: list[int], n: int) -> tuple[int, int]:
    """Peel and inactivate over packed GF(2) rows; returns (rank deficit, inactivations)."""
    rows = lt_rows + dense_rows
    pending = list(range(len(lt_rows)))
    remaining = list(range(len(rows)))
    active = (1 << n) - 1
    peeled = inactivations = 0

    while active and pending:
        peel = next((e for e in pending if (rows[e] & active).bit_count() == 1), None)
        if peel is not None:
            bit = rows[peel] & active
            pending.remove(peel)
            remaining.remove(peel)
            for e in remaining:
                if rows[e] & bit:
                    rows[e] ^= rows[peel]
            active ^= bit
            peeled += 1
            continue

        counts = [0] * n
        for e in pending:
            residual = rows[e] & active
            while residual:
                low = residual & -residual
                counts[low.bit_length() - 1] += 1
                residual ^= low
        column = _most_frequent(counts)
        if column is None:
            break
        active ^= 1 << column
        inactivations += 1

    dense_rank = gf2.rank_packed(rows[e] for e in remaining)
    return n - peeled - dense_rank, inactivations


def _decode_field(lt_rows: np.ndarray, dense_rows: np.ndarray, f: FieldSpec) -> tuple[int, int]:
    """Same schedule as _decode_binary on numpy rows over GF(q)."""
    work = np.vstack([lt_rows, dense_rows]).astype(np.int64)
    n = work.shape[1]
    pending = list(range(lt_rows.shape[0]))
    remaining = list(range(work.shape[0]))
    active = np.ones(n, dtype=bool)
    peeled = inactivations = 0

    while active.any() and pending:
        residual = (work[pending] != 0) & active
        degrees = residual.sum(axis=1)
        singles = np.flatnonzero(degrees == 1)
        if singles.size:
            peel = pending[int(singles[0])]
            column = int(np.flatnonzero(residual[singles[0]])[0])
            work[peel] = f.mul_array(f.inv(int(work[peel, column])), work[peel])
            pending.remove(peel)
            remaining.remove(peel)
            targets = [e for e in remaining if work[e, column]]
            if targets:
                factors = work[targets, column]
                work[targets] ^= f.mul_array(factors[:, None], work[peel][None, :])
            active[column] = False
            peeled += 1
            continue

        best = _most_frequent(residual.sum(axis=0))
        if best is None:
            break
        active[best] = False
        inactivations += 1

    dense = FqMatrix(work[remaining], f.q)
    return n - peeled - rank(dense, f), inactivations


def inactivation_failure(code: OuterCode, rx: ReceivedMatrix) -> DecodeOutcome:
    """ML failure test computed by peeling plus inactivation."""
    check_compatible(code, rx)
    f = code.field
    if code.form is CodeForm.PARITY:
        n = code.h
        if f.q == 2:
            deficit, inactivations = _decode_binary(rx.packed_columns, code.packed_rows, n)
        else:
            lt_rows = rx.columns.transpose().entries
            deficit, inactivations = _decode_field(lt_rows, code.matrix.entries, f)
    else:
        n = code.k
        # one equation over the k input symbols per received column
        equations = matmul(code.matrix, rx.columns, f).transpose()
        empty = np.zeros((0, n), dtype=np.int64)
        if f.q == 2:
            deficit, inactivations = _decode_binary(gf2.pack_rows(equations.entries), [], n)
        else:
            deficit, inactivations = _decode_field(equations.entries, empty, f)
    return DecodeOutcome(failed=deficit > 0, rank_deficit=deficit, inactivations=inactivations)
