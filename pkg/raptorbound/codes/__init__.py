"""Outer codes, their weight enumerators and the LT column sampler."""

from raptorbound.codes.distribution import (
    DegreeDistribution,
    load_distribution,
    r10_distribution,
    resolve_distribution,
)
from raptorbound.codes.enumerators import (
    EnumeratorKind,
    WeightEnumerator,
    hamming_weight_enumerator,
    uniform_ensemble_weight_enumerator,
    unrestricted_weight_enumerator,
)
from raptorbound.codes.lt import ReceivedMatrix, sample_received_matrix
from raptorbound.codes.outer import (
    CodeForm,
    OuterCode,
    brute_force_weight_enumerator,
    build_hamming,
    sample_uniform_parity_code,
    uncoded_outer,
)

__all__ = [
    "CodeForm",
    "DegreeDistribution",
    "EnumeratorKind",
    "OuterCode",
    "ReceivedMatrix",
    "WeightEnumerator",
    "brute_force_weight_enumerator",
    "build_hamming",
    "hamming_weight_enumerator",
    "load_distribution",
    "r10_distribution",
    "resolve_distribution",
    "sample_received_matrix",
    "sample_uniform_parity_code",
    "uncoded_outer",
    "unrestricted_weight_enumerator",
    "uniform_ensemble_weight_enumerator",
]
