"""Experiment configuration loading and merging."""

from pathlib import Path
from typing import Any

import yaml
from pydantic import ValidationError

from raptorbound.core.errors import SpecError
from raptorbound.core.models import ExperimentSpec

CONFIG_NAMES = ("raptorbound.yaml", "raptorbound.yml")


def merge_options(*layers: dict[str, Any]) -> dict[str, Any]:
    """Overlay option layers, later ones winning; None means "not given".

    Keys may use dashes or underscores and must name an ExperimentSpec field.
    """
    merged: dict[str, Any] = {}
    for layer in layers:
        for key, value in layer.items():
            name = str(key).replace("-", "_")
            if name not in ExperimentSpec.model_fields:
                raise SpecError(f"Unknown option '{key}'")
            if value is not None:
                merged[name] = value
    return merged


def load_yaml_file(path: Path) -> dict[str, Any]:
    """Load a YAML mapping; a missing or empty file yields {}."""
    if not path.exists():
        return {}
    try:
        content = yaml.safe_load(path.read_text())
    except yaml.YAMLError as e:
        raise SpecError(f"Cannot parse {path}", original_error=e) from e
    if content is None:
        return {}
    if not isinstance(content, dict):
        raise SpecError(f"{path} must contain a mapping of option names to values")
    return content


def find_config_file(config_path: str | None = None) -> Path | None:
    """Explicit path if given, else raptorbound.yaml / .yml in the working directory."""
    if config_path:
        path = Path(config_path)
        if path.exists():
            return path
        raise SpecError(f"Config file not found: {config_path}")

    for name in CONFIG_NAMES:
        path = Path.cwd() / name
        if path.exists():
            return path
    return None


def load_config(
    config_path: str | None = None,
    cli_overrides: dict[str, Any] | None = None,
) -> ExperimentSpec:
    """Build an ExperimentSpec.

    Priority (highest to lowest):
    1. CLI flags
    2. raptorbound.yaml (or --config)
    3. ExperimentSpec defaults
    """
    config_file = find_config_file(config_path)
    file_options = load_yaml_file(config_file) if config_file else {}
    merged = merge_options(file_options, cli_overrides or {})

    try:
        return ExperimentSpec.model_validate(merged)
    except ValidationError as e:
        details = "; ".join(
            f"{'.'.join(str(p) for p in err['loc']) or 'spec'}: {err['msg']}" for err in e.errors()
        )
        raise SpecError(f"Invalid experiment: {details}", original_error=e) from e


def create_sample_config() -> str:
    """Commented sample raptorbound.yaml."""
    return """# raptorbound experiment configuration
# Every key mirrors a command-line flag; flags override values set here.

# Field GF(2^m)
field: 1

# Outer code: hamming:t | uniform:h:k | unrestricted:k | code:PATH | enumerator:PATH
outer: hamming:6

# LT degree distribution: r10 or a file of "degree probability" lines
dist: r10

# Overhead range a..b (inclusive)
delta: 0..12

# Bound for deterministic outer codes (1 or 2); default 1 over GF(2), 2 otherwise
# theorem: 1

# Simulation
seed: 1
target_errors: 200
max_trials: 100000000
codes: 6000
trials_per_code: 1000
workers: 1

# out: results.csv
"""
