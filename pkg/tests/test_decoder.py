"""Tests for the ML and inactivation decoders."""

import itertools

import numpy as np
import pytest

from raptorbound.codes.distribution import DegreeDistribution
from raptorbound.codes.lt import ReceivedMatrix, sample_received_matrix
from raptorbound.codes.outer import CodeForm, OuterCode, build_hamming, sample_uniform_parity_code
from raptorbound.core.errors import DomainError
from raptorbound.decoder import DecodeOutcome, inactivation_failure, ml_failure
from raptorbound.gf.field import FieldSpec
from raptorbound.gf.matrix import FqMatrix


def columns(h: int, q: int, supports: list[tuple[int, ...]]) -> ReceivedMatrix:
    return ReceivedMatrix(
        h=h, q=q, supports=tuple(supports), coefficients=tuple((1,) * len(s) for s in supports)
    )


def brute_force_failed(code: OuterCode, rx: ReceivedMatrix) -> bool:
    """Some nonzero codeword is orthogonal to every received column."""
    words = code.codewords()[1:]
    if rx.m == 0:
        return len(words) > 0
    f = code.field
    survivors = np.ones(len(words), dtype=bool)
    for support, coeffs in zip(rx.supports, rx.coefficients):
        products = f.mul_array(words[:, list(support)], np.asarray(coeffs, dtype=np.int64)[None, :])
        survivors &= np.bitwise_xor.reduce(products, axis=1) == 0
    return bool(survivors.any())


def as_generator(code: OuterCode) -> OuterCode:
    return OuterCode(
        h=code.h,
        k=code.k,
        field=code.field,
        form=CodeForm.GENERATOR,
        matrix=code.generator_matrix(),
    )


class TestDecodeOutcome:
    def test_flag_follows_deficit(self) -> None:
        assert DecodeOutcome(failed=True, rank_deficit=2).failed
        with pytest.raises(ValueError):
            DecodeOutcome(failed=False, rank_deficit=1)
        with pytest.raises(ValueError):
            DecodeOutcome(failed=False, rank_deficit=-1)


class TestML:
    def test_nothing_received(self, toy_code: OuterCode) -> None:
        outcome = ml_failure(toy_code, columns(5, 2, []))
        assert outcome.failed
        assert outcome.rank_deficit == toy_code.k

    def test_unit_columns_decode(self, toy_code: OuterCode) -> None:
        outcome = ml_failure(toy_code, columns(5, 2, [(i,) for i in range(5)]))
        assert not outcome.failed and outcome.rank_deficit == 0

    def test_known_failure(self, toy_code: OuterCode) -> None:
        # codeword 10111 is orthogonal to both columns
        outcome = ml_failure(toy_code, columns(5, 2, [(1,), (0, 2)]))
        assert outcome.failed

    def test_height_mismatch(self, toy_code: OuterCode) -> None:
        with pytest.raises(DomainError):
            ml_failure(toy_code, columns(6, 2, [(0,)]))

    def test_field_mismatch(self, toy_code: OuterCode) -> None:
        with pytest.raises(DomainError):
            ml_failure(toy_code, columns(5, 4, [(0,)]))

    def test_more_columns_never_hurt(
        self,
        r10: DegreeDistribution,
        gf2: FieldSpec,
        rng: np.random.Generator,
    ) -> None:
        code = build_hamming(6)
        for _ in range(20):
            rx = sample_received_matrix(63, 70, r10, gf2, rng)
            deficits = [ml_failure(code, rx.prefix(m)).rank_deficit for m in range(50, 71, 5)]
            assert deficits == sorted(deficits, reverse=True)

    @pytest.mark.parametrize("m", [1, 2])
    def test_generator_form_agrees(self, m: int, r10: DegreeDistribution) -> None:
        f = FieldSpec.for_degree(m)
        rng = np.random.default_rng(40 + m)
        code = sample_uniform_parity_code(70, 64, f, rng)
        generator = as_generator(code)
        for _ in range(30):
            rx = sample_received_matrix(70, 64 + int(rng.integers(0, 6)), r10, f, rng)
            parity, gen = ml_failure(code, rx), ml_failure(generator, rx)
            assert parity.failed == gen.failed
            assert parity.rank_deficit == gen.rank_deficit


class TestInactivation:
    def test_nothing_received(self, toy_code: OuterCode) -> None:
        outcome = inactivation_failure(toy_code, columns(5, 2, []))
        assert outcome.rank_deficit == toy_code.k
        assert outcome.inactivations == 0

    def test_degree_one_cover_needs_no_inactivation(self, gf4: FieldSpec) -> None:
        code = sample_uniform_parity_code(8, 5, gf4, np.random.default_rng(1))
        rx = ReceivedMatrix(
            h=8,
            q=4,
            supports=tuple((i,) for i in range(8)),
            coefficients=tuple((1 + i % 3,) for i in range(8)),
        )
        outcome = inactivation_failure(code, rx)
        assert not outcome.failed
        assert outcome.inactivations == 0

    def test_cycle_needs_an_inactivation(self, gf2: FieldSpec) -> None:
        code = OuterCode(
            h=3, k=2, field=gf2, form=CodeForm.PARITY, matrix=FqMatrix.from_rows([[1, 1, 1]], 2)
        )
        rx = columns(3, 2, [(0, 1), (1, 2), (0, 2)])
        outcome = inactivation_failure(code, rx)
        assert outcome.inactivations == 1
        assert outcome.rank_deficit == ml_failure(code, rx).rank_deficit == 0

    @pytest.mark.parametrize(
        "h,parity,max_columns",
        [
            (5, [[1, 1, 0, 1, 0], [0, 1, 1, 0, 1]], 5),
            (6, [[1, 1, 0, 1, 0, 0], [0, 1, 1, 0, 1, 0], [1, 0, 1, 0, 0, 1]], 3),
            pytest.param(5, [[1, 1, 0, 1, 0], [0, 1, 1, 0, 1]], 15, marks=pytest.mark.slow),
            pytest.param(
                6,
                [[1, 1, 0, 1, 0, 0], [0, 1, 1, 0, 1, 0], [1, 0, 1, 0, 0, 1]],
                6,
                marks=pytest.mark.slow,
            ),
        ],
    )
    def test_exhaustive_small_codes(
        self,
        gf2: FieldSpec,
        h: int,
        parity: list[list[int]],
        max_columns: int,
    ) -> None:
        matrix = FqMatrix.from_rows(parity, 2)
        code = OuterCode(h=h, k=h - len(parity), field=gf2, form=CodeForm.PARITY, matrix=matrix)
        types = [(i,) for i in range(h)] + list(itertools.combinations(range(h), 2))
        for size in range(max_columns + 1):
            for chosen in itertools.combinations(types, size):
                rx = columns(h, 2, list(chosen))
                expected = brute_force_failed(code, rx)
                ml = ml_failure(code, rx)
                assert ml.failed == expected, chosen
                outcome = inactivation_failure(code, rx)
                assert outcome.failed == expected, chosen
                assert outcome.rank_deficit == ml.rank_deficit

    @pytest.mark.parametrize("m", [1, 2, 4])
    @pytest.mark.parametrize("instances", [150, pytest.param(10_000, marks=pytest.mark.slow)])
    def test_matches_ml(self, m: int, instances: int, r10: DegreeDistribution) -> None:
        f = FieldSpec.for_degree(m)
        rng = np.random.default_rng(500 + m)
        per_code = 25
        for _ in range(instances // per_code):
            code = sample_uniform_parity_code(70, 64, f, rng)
            generator = as_generator(code)
            for _ in range(per_code):
                rx = sample_received_matrix(70, 60 + int(rng.integers(0, 10)), r10, f, rng)
                ml = ml_failure(code, rx)
                inact = inactivation_failure(code, rx)
                assert (inact.failed, inact.rank_deficit) == (ml.failed, ml.rank_deficit)
                assert inactivation_failure(generator, rx).failed == ml.failed

    def test_hamming_matches_ml(
        self,
        r10: DegreeDistribution,
        gf2: FieldSpec,
        rng: np.random.Generator,
    ) -> None:
        code = build_hamming(6)
        for _ in range(100):
            rx = sample_received_matrix(63, 57 + int(rng.integers(0, 8)), r10, gf2, rng)
            assert inactivation_failure(code, rx).rank_deficit == ml_failure(code, rx).rank_deficit
