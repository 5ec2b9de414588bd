"""Tests for the cross-oracle consistency checks."""

from math import comb

import pytest

from raptorbound.bounds import pi as pi_module
from raptorbound.checks.suite import (
    check_decoder_equivalence,
    check_hamming_enumerator,
    check_lt_specialization,
    check_phi_lemma1,
    check_pi_cross_path,
    run_checks,
    toy_code,
    truncated_distribution,
)
from raptorbound.codes.distribution import r10_distribution
from raptorbound.gf.field import FieldSpec


def unsigned_krawtchouk(j: int, x: int, n: int, f: FieldSpec) -> int:
    """Krawtchouk sum with the alternating sign dropped."""
    return sum(comb(x, i) * comb(n - x, j - i) * (f.q - 1) ** (j - i) for i in range(min(j, x) + 1))


def test_all_checks_pass() -> None:
    results = run_checks(instances=20, seed=1)
    assert [r.name for r in results] == [
        "phi_lemma1",
        "pi_l_cross_path",
        "hamming_enumerator",
        "lt_specialization",
        "decoder_equivalence",
    ]
    for result in results:
        assert result.passed, f"{result.name}: {result.detail}"


@pytest.mark.parametrize(
    "check",
    [check_phi_lemma1, check_pi_cross_path, check_hamming_enumerator, check_lt_specialization],
)
def test_individual_checks(check) -> None:  # type: ignore[no-untyped-def]
    result = check()
    assert result.passed
    assert result.max_deviation <= 1e-12


@pytest.mark.slow
def test_decoder_equivalence_at_full_size() -> None:
    assert check_decoder_equivalence(instances=10_000, seed=3).passed


def test_broken_krawtchouk_is_caught(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setattr(pi_module, "krawtchouk", unsigned_krawtchouk)
    result = check_pi_cross_path()
    assert not result.passed
    assert result.max_deviation > 1e-12
    assert "l=" in result.detail


def test_exception_counts_as_failure(monkeypatch: pytest.MonkeyPatch) -> None:
    def boom(*args: object) -> int:
        raise RuntimeError("boom")

    monkeypatch.setattr(pi_module, "krawtchouk", boom)
    by_name = {r.name: r for r in run_checks(instances=2)}
    assert not by_name["pi_l_cross_path"].passed
    assert "RuntimeError" in by_name["pi_l_cross_path"].detail
    assert by_name["phi_lemma1"].passed


def test_truncated_distribution() -> None:
    dist = truncated_distribution(r10_distribution(), 7)
    assert dist.degrees == (1, 2, 3, 4)
    assert sum(dist.probabilities) == pytest.approx(1.0, abs=1e-12)
    assert dist.probability(2) / dist.probability(3) == pytest.approx(0.4590 / 0.2110)


def test_toy_code() -> None:
    code = toy_code()
    assert (code.h, code.k, code.true_dimension()) == (5, 3, 3)
