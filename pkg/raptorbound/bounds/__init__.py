"""Failure-probability bounds and the quantities they are built from."""

from raptorbound.bounds.krawtchouk import krawtchouk
from raptorbound.bounds.pi import PiTable, pi_l_direct, pi_l_krawtchouk, pi_table
from raptorbound.bounds.symbols import lemma1_convolution_oracle, lemma1_transform, phi, theta
from raptorbound.bounds.theorems import (
    BoundCurve,
    BoundPoint,
    bound_curve,
    bound_theorem1,
    bound_theorem2,
    bound_theorem3,
)
from raptorbound.codes.distribution import DegreeDistribution

__all__ = [
    "BoundCurve",
    "BoundPoint",
    "DegreeDistribution",
    "PiTable",
    "bound_curve",
    "bound_theorem1",
    "bound_theorem2",
    "bound_theorem3",
    "krawtchouk",
    "lemma1_convolution_oracle",
    "lemma1_transform",
    "phi",
    "pi_l_direct",
    "pi_l_krawtchouk",
    "pi_table",
    "theta",
]
