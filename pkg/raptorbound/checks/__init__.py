"""Consistency checks between independent implementations."""

from raptorbound.checks.suite import CheckResult, run_checks

__all__ = ["CheckResult", "run_checks"]
