"""Erasure decoding failure tests."""

from raptorbound.decoder.inactivation import inactivation_failure
from raptorbound.decoder.ml import DecodeOutcome, ml_failure

__all__ = ["DecodeOutcome", "inactivation_failure", "ml_failure"]
