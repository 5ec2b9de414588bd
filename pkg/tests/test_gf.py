"""Tests for GF(2^m) arithmetic and matrices, using galois as the oracle."""

import numpy as np
import pytest

from raptorbound.core.errors import DomainError
from raptorbound.gf import gf2
from raptorbound.gf.field import (
    REDUCTION_POLYNOMIALS,
    FieldSpec,
    field_add,
    field_inv,
    field_mul,
    is_irreducible,
)
from raptorbound.gf.matrix import FqMatrix, matmul, nullspace_basis, rank, row_reduce

galois = pytest.importorskip("galois")


def galois_field(f: FieldSpec) -> type:
    if f.m == 1:
        return galois.GF(2)
    return galois.GF(f.q, irreducible_poly=f.reduction_polynomial)


class TestField:
    @pytest.mark.parametrize("m", sorted(REDUCTION_POLYNOMIALS))
    def test_tabulated_polynomials_are_irreducible(self, m: int) -> None:
        assert is_irreducible(REDUCTION_POLYNOMIALS[m])
        assert FieldSpec.for_degree(m).q == 2**m

    def test_reducible_polynomial_rejected(self) -> None:
        with pytest.raises(DomainError):
            FieldSpec(2, 0b101)  # (x + 1)^2

    @pytest.mark.parametrize("m", [0, 17])
    def test_degree_out_of_range(self, m: int) -> None:
        with pytest.raises(DomainError):
            FieldSpec.for_degree(m)

    def test_gf4_multiplication_table(self, gf4: FieldSpec) -> None:
        # x^2 = x + 1: 2*2 = 3, 2*3 = 1, 3*3 = 2
        assert field_mul(2, 2, gf4) == 3
        assert field_mul(2, 3, gf4) == 1
        assert field_mul(3, 3, gf4) == 2
        assert field_add(3, 1, gf4) == 2

    @pytest.mark.parametrize("m", [2, 3, 4, 8, 11, 16])
    def test_multiplication_matches_galois(self, m: int) -> None:
        f = FieldSpec.for_degree(m)
        GF = galois_field(f)
        rng = np.random.default_rng(m)
        a = rng.integers(0, f.q, size=200)
        b = rng.integers(0, f.q, size=200)
        expected = np.asarray(GF(a) * GF(b), dtype=np.int64)
        assert np.array_equal(f.mul_array(a, b), expected)
        assert [field_mul(int(x), int(y), f) for x, y in zip(a[:20], b[:20])] == list(expected[:20])

    @pytest.mark.parametrize("m", [1, 3, 8, 12])
    def test_inverse(self, m: int) -> None:
        f = FieldSpec.for_degree(m)
        for a in range(1, min(f.q, 300)):
            assert field_mul(a, field_inv(a, f), f) == 1

    def test_inverse_of_zero(self, gf16: FieldSpec) -> None:
        with pytest.raises(DomainError):
            field_inv(0, gf16)

    def test_element_out_of_range(self, gf4: FieldSpec) -> None:
        with pytest.raises(DomainError):
            field_mul(4, 1, gf4)


class TestMatrix:
    def test_entries_are_validated_and_frozen(self) -> None:
        with pytest.raises(DomainError):
            FqMatrix(np.array([[0, 4]]), 4)
        matrix = FqMatrix(np.array([[1, 0]]), 2)
        with pytest.raises(ValueError):
            matrix.entries[0, 0] = 0

    @pytest.mark.parametrize("m", [1, 2, 4])
    def test_rank_matches_galois(self, m: int) -> None:
        f = FieldSpec.for_degree(m)
        GF = galois_field(f)
        rng = np.random.default_rng(100 + m)
        for rows, cols in [(6, 70), (20, 12), (5, 5), (1, 9)]:
            entries = rng.integers(0, f.q, size=(rows, cols))
            entries[rows // 2] = 0
            assert rank(FqMatrix(entries, f.q), f) == np.linalg.matrix_rank(GF(entries))

    def test_rank_of_empty_matrix(self, gf2: FieldSpec) -> None:
        assert rank(FqMatrix.zeros(0, 5, 2), gf2) == 0
        assert rank(FqMatrix.zeros(3, 0, 2), gf2) == 0

    @pytest.mark.parametrize("m", [1, 2, 4])
    def test_nullspace_is_annihilated(self, m: int) -> None:
        f = FieldSpec.for_degree(m)
        GF = galois_field(f)
        rng = np.random.default_rng(200 + m)
        entries = rng.integers(0, f.q, size=(6, 15))
        entries[5] = entries[0]  # force a rank deficit
        matrix = FqMatrix(entries, f.q)
        basis = nullspace_basis(matrix, f)
        assert basis.shape == (15 - rank(matrix, f), 15)
        assert not np.any(GF(entries) @ GF(basis.entries).T)
        assert rank(basis, f) == basis.rows

    def test_row_reduce_leaves_input_untouched(self, gf4: FieldSpec) -> None:
        entries = np.array([[2, 3, 1], [1, 1, 0], [3, 2, 1]])
        matrix = FqMatrix(entries, 4)
        reduced, pivots = row_reduce(matrix, gf4)
        assert np.array_equal(matrix.entries, entries)
        for row, pivot in enumerate(pivots):
            assert reduced[row, pivot] == 1
            assert np.count_nonzero(reduced[:, pivot]) == 1

    @pytest.mark.parametrize("m", [1, 2])
    def test_rref_matches_galois(self, m: int) -> None:
        f = FieldSpec.for_degree(m)
        rng = np.random.default_rng(7)
        entries = rng.integers(0, f.q, size=(8, 12))
        entries[3] = entries[1]
        reduced, pivots = row_reduce(FqMatrix(entries, f.q), f)
        rref = galois_field(f)(entries).row_reduce()
        nonzero = rref[np.any(rref, axis=1)]
        assert np.array_equal(reduced, np.asarray(nonzero, dtype=np.int64))
        assert len(pivots) == nonzero.shape[0]

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_matmul_matches_galois(self, m: int) -> None:
        f = FieldSpec.for_degree(m)
        GF = galois_field(f)
        rng = np.random.default_rng(300 + m)
        a = rng.integers(0, f.q, size=(4, 7))
        b = rng.integers(0, f.q, size=(7, 3))
        product = matmul(FqMatrix(a, f.q), FqMatrix(b, f.q), f)
        assert np.array_equal(product.entries, np.asarray(GF(a) @ GF(b), dtype=np.int64))

    def test_matmul_shape_mismatch(self, gf2: FieldSpec) -> None:
        with pytest.raises(DomainError):
            matmul(FqMatrix.zeros(2, 3, 2), FqMatrix.zeros(2, 3, 2), gf2)

    def test_field_mismatch(self, gf4: FieldSpec) -> None:
        with pytest.raises(DomainError):
            rank(FqMatrix.identity(3, 2), gf4)


class TestPacked:
    def test_pack_layout(self) -> None:
        entries = np.array([[1, 0, 1, 1], [0, 0, 0, 0]])
        assert gf2.pack_rows(entries) == [0b1101, 0]
        assert np.array_equal(gf2.unpack_rows([0b1101, 0], 4), entries)

    def test_rank_packed_does_not_mutate(self) -> None:
        rows = [0b011, 0b110, 0b101]
        assert gf2.rank_packed(rows) == 2
        assert rows == [0b011, 0b110, 0b101]
