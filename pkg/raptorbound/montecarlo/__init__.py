"""Monte Carlo protocols and their exact toy-scale oracle."""

from raptorbound.montecarlo.oracle import exact_failure_curve, exact_failure_probability
from raptorbound.montecarlo.runner import (
    SimPoint,
    SimResult,
    run_ensemble,
    run_fixed_code,
    sample_ensemble_code,
)

__all__ = [
    "SimPoint",
    "SimResult",
    "exact_failure_curve",
    "exact_failure_probability",
    "run_ensemble",
    "run_fixed_code",
    "sample_ensemble_code",
]
