"""Shared fixtures for the raptorbound test suite."""

from collections.abc import Iterator

import numpy as np
import pytest

from raptorbound.bounds.pi import pi_table
from raptorbound.codes.distribution import DegreeDistribution, r10_distribution
from raptorbound.codes.outer import CodeForm, OuterCode
from raptorbound.gf.field import FieldSpec
from raptorbound.gf.matrix import FqMatrix


@pytest.fixture
def gf2() -> FieldSpec:
    return FieldSpec.for_degree(1)


@pytest.fixture
def gf4() -> FieldSpec:
    return FieldSpec.for_degree(2)


@pytest.fixture
def gf16() -> FieldSpec:
    return FieldSpec.for_degree(4)


@pytest.fixture
def r10() -> DegreeDistribution:
    return r10_distribution()


@pytest.fixture
def degree_one() -> DegreeDistribution:
    return DegreeDistribution.from_pairs([(1, 1.0)], name="degree-1")


@pytest.fixture
def low_degree() -> DegreeDistribution:
    """Degrees 1 and 2 only, small enough for exhaustive oracles."""
    return DegreeDistribution.from_pairs([(1, 0.5), (2, 0.5)], name="low")


@pytest.fixture
def toy_code(gf2: FieldSpec) -> OuterCode:
    """[5, 3] binary code with a full-rank 2 x 5 parity-check matrix."""
    parity = FqMatrix.from_rows([[1, 1, 0, 1, 0], [0, 1, 1, 0, 1]], 2)
    return OuterCode(h=5, k=3, field=gf2, form=CodeForm.PARITY, matrix=parity, name="toy")


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture(autouse=True)
def fresh_pi_tables() -> Iterator[None]:
    """Tests may patch the Krawtchouk lookup; keep memoized tables from leaking across them."""
    pi_table.cache_clear()
    yield
    pi_table.cache_clear()
