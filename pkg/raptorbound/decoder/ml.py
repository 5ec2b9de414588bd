"""Maximum-likelihood decoding failure test on the erasure channel."""

from dataclasses import dataclass

from raptorbound.codes.lt import ReceivedMatrix
from raptorbound.codes.outer import CodeForm, OuterCode
from raptorbound.core.errors import DomainError
from raptorbound.gf import gf2
from raptorbound.gf.matrix import matmul, rank


@dataclass(frozen=True)
class DecodeOutcome:
    """Result of one decoding attempt."""

    failed: bool
    rank_deficit: int
    inactivations: int | None = None

    def __post_init__(self) -> None:
        if self.rank_deficit < 0:
            raise ValueError(f"rank_deficit must be >= 0, got {self.rank_deficit}")
        if self.failed != (self.rank_deficit > 0):
            raise ValueError("failed must hold exactly when rank_deficit > 0")


def check_compatible(code: OuterCode, rx: ReceivedMatrix) -> None:
    if code.h != rx.h:
        raise DomainError(f"Outer code length {code.h} does not match received height {rx.h}")
    if code.q != rx.q:
        raise DomainError(f"Outer code over GF({code.q}) but received matrix over GF({rx.q})")


def ml_failure(code: OuterCode, rx: ReceivedMatrix) -> DecodeOutcome:
    """Decide whether the received columns pin down the intermediate word.

    Parity form: fails iff [H; columns^T] has rank < h, i.e. some nonzero
    codeword is orthogonal to every received column. Generator form: fails
    iff G_o * columns has rank < k.
    """
    check_compatible(code, rx)
    if code.form is CodeForm.PARITY:
        if code.q == 2:
            achieved = gf2.rank_packed(code.packed_rows + rx.packed_columns)
        else:
            achieved = rank(code.matrix.vstack(rx.columns.transpose()), code.field)
        deficit = code.h - achieved
    else:
        product = matmul(code.matrix, rx.columns, code.field)
        deficit = code.k - rank(product, code.field)
    return DecodeOutcome(failed=deficit > 0, rank_deficit=deficit)
