"""Tests for Krawtchouk polynomials, pi_l and the failure-probability bounds."""

import itertools
import math
from fractions import Fraction

import pytest

from raptorbound.bounds import pi as pi_module
from raptorbound.bounds.krawtchouk import krawtchouk
from raptorbound.bounds.pi import PiTable, pi_l_direct, pi_l_krawtchouk, pi_table
from raptorbound.bounds.symbols import lemma1_convolution_oracle, lemma1_transform, phi, theta
from raptorbound.bounds.theorems import (
    bound_curve,
    bound_theorem1,
    bound_theorem2,
    bound_theorem3,
)
from raptorbound.checks.suite import truncated_distribution
from raptorbound.codes.distribution import DegreeDistribution
from raptorbound.codes.enumerators import (
    WeightEnumerator,
    hamming_weight_enumerator,
    uniform_ensemble_weight_enumerator,
    unrestricted_weight_enumerator,
)
from raptorbound.core.errors import DomainError
from raptorbound.gf.field import FieldSpec


class TestKrawtchouk:
    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_at_zero(self, m: int) -> None:
        f = FieldSpec.for_degree(m)
        for j in range(8):
            assert krawtchouk(j, 0, 7, f) == math.comb(7, j) * (f.q - 1) ** j

    @pytest.mark.parametrize("m", [1, 2])
    def test_degree_one(self, m: int) -> None:
        f = FieldSpec.for_degree(m)
        for x in range(11):
            assert krawtchouk(1, x, 10, f) == (10 - x) * (f.q - 1) - x

    def test_hand_value(self, gf2: FieldSpec) -> None:
        assert krawtchouk(2, 1, 3, gf2) == -1

    def test_out_of_range(self, gf2: FieldSpec) -> None:
        with pytest.raises(DomainError):
            krawtchouk(4, 1, 3, gf2)


class TestSymbols:
    def test_phi_values(self, gf4: FieldSpec) -> None:
        for m in (1, 2, 3):
            f = FieldSpec.for_degree(m)
            assert phi(0, f) == 1
            assert phi(1, f) == 0
        assert phi(2, gf4) == Fraction(1, 3)
        assert phi(3, gf4) == Fraction(2, 9)

    def test_phi_is_zero_sum_probability(self, gf4: FieldSpec) -> None:
        for i in range(1, 5):
            tuples = list(itertools.product(range(1, 4), repeat=i))
            zero = 0
            for t in tuples:
                total = 0
                for x in t:
                    total ^= x
                zero += total == 0
            assert phi(i, gf4) == Fraction(zero, len(tuples))

    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_lemma1_oracles(self, m: int) -> None:
        f = FieldSpec.for_degree(m)
        for l in range(1, 9):
            assert lemma1_convolution_oracle(l, f) == phi(l, f)
            assert lemma1_transform(l, f) == phi(l, f)

    def test_lemma1_small_cases(self) -> None:
        assert lemma1_convolution_oracle(1, FieldSpec.for_degree(3)) == 0
        assert lemma1_convolution_oracle(2, FieldSpec.for_degree(1)) == 1

    def test_oracle_scale_limit(self) -> None:
        with pytest.raises(DomainError):
            lemma1_convolution_oracle(2, FieldSpec.for_degree(9))

    def test_theta(self) -> None:
        assert theta(1, 1, 2, 4) == Fraction(1, 2)
        assert theta(0, 0, 3, 10) == 1
        assert theta(1, 0, 3, 10) == 0
        assert theta(3, 2, 3, 10) == 0
        assert sum(theta(i, 5, 3, 63) for i in range(4)) == 1


class TestPi:
    def test_weight_zero(self, r10: DegreeDistribution, gf4: FieldSpec) -> None:
        assert pi_l_direct(0, 63, r10, gf4) == 1.0
        assert pi_l_krawtchouk(0, 63, r10, gf4) == 1.0

    def test_degree_one(self, degree_one: DegreeDistribution, gf2: FieldSpec) -> None:
        for l in range(11):
            assert pi_l_direct(l, 10, degree_one, gf2) == pytest.approx(1 - l / 10, abs=1e-15)
            assert pi_l_krawtchouk(l, 10, degree_one, gf2) == pytest.approx(1 - l / 10, abs=1e-15)

    def test_degree_two_hand_value(self, gf2: FieldSpec) -> None:
        dist = DegreeDistribution.from_pairs([(2, 1.0)])
        assert pi_l_direct(2, 4, dist, gf2) == pytest.approx(1 / 3, rel=1e-15)

    @pytest.mark.parametrize("h", [7, 63, 70])
    @pytest.mark.parametrize("m", [1, 2])
    def test_paths_agree(self, h: int, m: int, r10: DegreeDistribution) -> None:
        f = FieldSpec.for_degree(m)
        dist = truncated_distribution(r10, h)
        for l in range(h + 1):
            direct = pi_l_direct(l, h, dist, f)
            assert 0.0 <= direct <= 1.0
            assert pi_l_krawtchouk(l, h, dist, f) == pytest.approx(direct, rel=1e-12, abs=0)

    def test_degree_above_length(self, r10: DegreeDistribution, gf2: FieldSpec) -> None:
        with pytest.raises(DomainError):
            pi_l_direct(1, 30, r10, gf2)
        with pytest.raises(DomainError):
            pi_l_krawtchouk(1, 30, r10, gf2)

    def test_table_is_memoized(self, r10: DegreeDistribution, gf2: FieldSpec) -> None:
        table = pi_table(63, r10, gf2)
        assert isinstance(table, PiTable)
        assert pi_table(63, r10, gf2) is table
        assert len(table) == 64
        assert table[32] == pi_l_krawtchouk(32, 63, r10, gf2)

    def test_uses_krawtchouk_lookup(
        self,
        monkeypatch: pytest.MonkeyPatch,
        degree_one: DegreeDistribution,
        gf2: FieldSpec,
    ) -> None:
        monkeypatch.setattr(pi_module, "krawtchouk", lambda j, x, n, f: math.comb(n, j))
        assert pi_l_krawtchouk(3, 10, degree_one, gf2) == 1.0
        assert pi_l_direct(3, 10, degree_one, gf2) == pytest.approx(0.7)


class TestTheorems:
    def test_hamming_seven_four_by_hand(
        self,
        degree_one: DegreeDistribution,
        gf2: FieldSpec,
    ) -> None:
        we = hamming_weight_enumerator(3)
        expected = 7 * (4 / 7) ** 4 + 7 * (3 / 7) ** 4
        assert bound_theorem1(we, 4, 0, 7, degree_one, gf2) == pytest.approx(expected, rel=1e-12)

    def test_no_nonzero_codewords(self, r10: DegreeDistribution, gf2: FieldSpec) -> None:
        we = WeightEnumerator.from_exact([1] + [0] * 63, k=0, q=2)
        assert bound_theorem1(we, 0, 3, 63, r10, gf2) == 0.0

    def test_theorem2_binary_equals_theorem1(self, r10: DegreeDistribution, gf2: FieldSpec) -> None:
        we = hamming_weight_enumerator(6)
        for delta in range(6):
            t1 = bound_theorem1(we, 57, delta, 63, r10, gf2)
            assert bound_theorem2(we, 57, delta, 63, r10, gf2) == t1

    def test_theorem2_divides_by_q_minus_one(self, r10: DegreeDistribution, gf4: FieldSpec) -> None:
        we = WeightEnumerator.from_exact([1, 0, 3, 0, 12], k=2, q=4)
        dist = truncated_distribution(r10, 4)
        for delta in range(4):
            t1 = bound_theorem1(we, 2, delta, 4, dist, gf4)
            assert bound_theorem2(we, 2, delta, 4, dist, gf4) == pytest.approx(t1 / 3, rel=1e-14)

    @pytest.mark.parametrize("m", [1, 2])
    def test_lt_specialization(self, m: int, r10: DegreeDistribution) -> None:
        f = FieldSpec.for_degree(m)
        k = 64
        we = unrestricted_weight_enumerator(k, f)
        pis = [pi_l_direct(l, k, r10, f) for l in range(k + 1)]
        for delta in range(21):
            direct = math.fsum(
                math.comb(k, l) * (f.q - 1) ** (l - 1) * pis[l] ** (k + delta)
                for l in range(1, k + 1)
            )
            assert bound_theorem2(we, k, delta, k, r10, f) == pytest.approx(direct, rel=1e-12)

    def test_theorem3_needs_expected_enumerator(
        self,
        r10: DegreeDistribution,
        gf2: FieldSpec,
    ) -> None:
        with pytest.raises(DomainError):
            bound_theorem3(hamming_weight_enumerator(6), 57, 0, 63, r10, gf2)

    @pytest.mark.parametrize("m", [1, 2])
    def test_theorem3_is_monotone_and_vanishes(self, m: int, r10: DegreeDistribution) -> None:
        f = FieldSpec.for_degree(m)
        we = uniform_ensemble_weight_enumerator(70, 64, f)
        deltas = list(range(0, 61, 4)) + [200]
        values = [bound_theorem3(we, 64, delta, 70, r10, f) for delta in deltas]
        for before, after in zip(values, values[1:]):
            assert after <= before * (1 + 1e-12)
        # the weight-1 term A_1 pi_1^(k+delta) / (q-1) dominates at large overhead
        pi_1 = pi_l_direct(1, 70, r10, f)
        for delta, value in zip(deltas, values):
            leading = 70 / f.q**6 * pi_1 ** (64 + delta)
            assert value >= leading * (1 - 1e-12)
            if delta >= 60:
                assert value <= 1.2 * leading
        assert values[-1] < 1e-6

    def test_mismatched_length(self, r10: DegreeDistribution, gf2: FieldSpec) -> None:
        with pytest.raises(DomainError):
            bound_theorem1(hamming_weight_enumerator(6), 57, 0, 70, r10, gf2)

    def test_negative_overhead(self, r10: DegreeDistribution, gf2: FieldSpec) -> None:
        with pytest.raises(DomainError):
            bound_theorem1(hamming_weight_enumerator(6), 57, -1, 63, r10, gf2)


class TestBoundCurve:
    def test_fixed_code_curve(self, r10: DegreeDistribution, gf2: FieldSpec) -> None:
        curve = bound_curve(hamming_weight_enumerator(6), 57, range(13), 63, r10, gf2, theorem=1)
        rows = curve.rows()
        assert [r[0] for r in rows] == list(range(13))
        for delta, raw, clamped in rows:
            assert raw >= 0
            assert clamped == min(1.0, raw)
        for before, after in zip(rows, rows[1:]):
            assert after[1] <= before[1] * (1 + 1e-12)

    def test_curve_matches_direct_evaluation(self, r10: DegreeDistribution, gf2: FieldSpec) -> None:
        we = hamming_weight_enumerator(6)
        pis = [pi_l_direct(l, 63, r10, gf2) for l in range(64)]
        curve = bound_curve(we, 57, range(13), 63, r10, gf2, theorem=1)
        for delta, point in curve.points.items():
            direct = math.fsum(
                a * pis[l] ** (57 + delta) for l, a in enumerate(we.exact or ()) if l
            )
            assert point.raw == pytest.approx(direct, rel=1e-12)

    def test_unknown_theorem(self, r10: DegreeDistribution, gf2: FieldSpec) -> None:
        with pytest.raises(DomainError):
            bound_curve(hamming_weight_enumerator(6), 57, [0], 63, r10, gf2, theorem=4)
