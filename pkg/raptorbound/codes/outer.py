"""Outer (precode) codes given by a generator or a parity-check matrix."""

import hashlib
import itertools
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

import numpy as np

from raptorbound.codes.enumerators import WeightEnumerator
from raptorbound.core.errors import DomainError
from raptorbound.gf import gf2
from raptorbound.gf.field import FieldSpec
from raptorbound.gf.matrix import FqMatrix, nullspace_basis, rank

HAMMING_MAX_T = 10
MAX_ENUMERATED_CODEWORDS = 1 << 20


class CodeForm(str, Enum):
    GENERATOR = "generator"
    PARITY = "parity"


@dataclass(frozen=True)
class OuterCode:
    """Linear [h, k] code over GF(q).

    In generator form ``matrix`` is the k x h generator G_o. In parity form
    it is an (h - k) x h parity-check matrix H, which may be rank deficient;
    the true dimension is then larger than the design dimension k.
    """

    h: int
    k: int
    field: FieldSpec
    form: CodeForm
    matrix: FqMatrix
    name: str = "custom"

    def __post_init__(self) -> None:
        if not 0 < self.k <= self.h:
            raise DomainError(f"Need 0 < k <= h, got h={self.h}, k={self.k}")
        if self.matrix.q != self.field.q:
            raise DomainError(f"Matrix over GF({self.matrix.q}) does not match GF({self.field.q})")
        rows = self.k if self.form is CodeForm.GENERATOR else self.h - self.k
        expected = (rows, self.h)
        if self.matrix.shape != expected:
            raise DomainError(
                f"{self.form.value} matrix must be {expected}, got {self.matrix.shape}"
            )
        if self.form is CodeForm.GENERATOR and rank(self.matrix, self.field) != self.k:
            raise DomainError("Generator matrix must have full row rank")

    @property
    def q(self) -> int:
        return self.field.q

    @cached_property
    def packed_rows(self) -> list[int]:
        """Bit-packed rows of the stored matrix (GF(2) only)."""
        if self.q != 2:
            raise DomainError("Packed rows are only defined over GF(2)")
        return gf2.pack_rows(self.matrix.entries)

    def generator_matrix(self) -> FqMatrix:
        """A basis of the code, one codeword per row."""
        if self.form is CodeForm.GENERATOR:
            return self.matrix
        return nullspace_basis(self.matrix, self.field)

    def true_dimension(self) -> int:
        if self.form is CodeForm.GENERATOR:
            return self.k
        return self.h - rank(self.matrix, self.field)

    def codewords(self) -> np.ndarray:
        """All q^k_C codewords as rows, starting with the zero word."""
        basis = self.generator_matrix()
        count = self.q**basis.rows
        if count > MAX_ENUMERATED_CODEWORDS:
            raise DomainError(f"Refusing to enumerate {count} codewords")
        words = np.zeros((count, self.h), dtype=np.int64)
        for i, coeffs in enumerate(itertools.product(range(self.q), repeat=basis.rows)):
            word = np.zeros(self.h, dtype=np.int64)
            for c, row in zip(coeffs, basis.entries):
                if c:
                    word ^= self.field.mul_array(c, row)
            words[i] = word
        return words

    def fingerprint(self) -> str:
        header = f"{self.form.value}:{self.h}:{self.k}:{self.q}:".encode()
        payload = header + self.matrix.entries.tobytes()
        return hashlib.sha256(payload).hexdigest()


def build_hamming(t: int) -> OuterCode:
    """Binary Hamming code; H columns are 1..2^t - 1, row 0 the most significant bit."""
    if not 2 <= t <= HAMMING_MAX_T:
        raise DomainError(f"Hamming parameter t must be in [2, {HAMMING_MAX_T}], got {t}")
    h = (1 << t) - 1
    values = np.arange(1, h + 1)
    shifts = np.arange(t - 1, -1, -1)[:, None]
    parity = (values[None, :] >> shifts) & 1
    return OuterCode(
        h=h,
        k=h - t,
        field=FieldSpec.for_degree(1),
        form=CodeForm.PARITY,
        matrix=FqMatrix(parity, 2),
        name=f"hamming:{t}",
    )


def sample_uniform_parity_code(h: int, k: int, f: FieldSpec, rng: np.random.Generator) -> OuterCode:
    """Parity-check matrix with i.i.d. uniform GF(q) entries."""
    if not 0 < k < h:
        raise DomainError(f"Need 0 < k < h, got h={h}, k={k}")
    parity = rng.integers(0, f.q, size=(h - k, h), dtype=np.int64)
    return OuterCode(
        h=h,
        k=k,
        field=f,
        form=CodeForm.PARITY,
        matrix=FqMatrix(parity, f.q),
        name=f"uniform:{h}:{k}",
    )


def uncoded_outer(k: int, f: FieldSpec) -> OuterCode:
    """Identity precode: the Raptor code degenerates to an LT code."""
    return OuterCode(
        h=k,
        k=k,
        field=f,
        form=CodeForm.GENERATOR,
        matrix=FqMatrix.identity(k, f.q),
        name=f"unrestricted:{k}",
    )


def brute_force_weight_enumerator(code: OuterCode) -> WeightEnumerator:
    """Enumerator obtained by listing every codeword."""
    weights = np.count_nonzero(code.codewords(), axis=1)
    counts = np.bincount(weights, minlength=code.h + 1)
    return WeightEnumerator.from_exact([int(c) for c in counts], k=code.k, q=code.q)
