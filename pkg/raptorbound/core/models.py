"""Pydantic models for raptorbound experiments."""

from enum import Enum
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from raptorbound.core.errors import SpecError


class EnsembleConfig(BaseModel):
    """Outer-code ensemble averaging."""

    model_config = ConfigDict(frozen=True)

    num_codes: int = Field(default=6000, ge=1, description="Outer codes sampled per overhead")
    trials_per_code: int = Field(
        default=1000, ge=1, description="Decoding attempts per code and overhead"
    )


class SimConfig(BaseModel):
    """Monte Carlo settings shared by the fixed-code and ensemble runners."""

    model_config = ConfigDict(frozen=True)

    master_seed: int = Field(default=1, ge=0, lt=2**64, description="Master seed of all generators")
    overhead_list: tuple[int, ...] = Field(
        ..., min_length=1, description="Overheads delta to simulate"
    )
    target_errors: int = Field(
        default=200, ge=1, description="Stop a point after this many failures"
    )
    max_trials_per_point: int = Field(
        default=10**8, ge=1, description="Trial cap per overhead point"
    )
    ensemble: EnsembleConfig | None = Field(default=None, description="Ensemble averaging, if any")

    @field_validator("overhead_list")
    @classmethod
    def _increasing(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        if value[0] < 0:
            raise ValueError("overheads must be >= 0")
        if any(b <= a for a, b in zip(value, value[1:])):
            raise ValueError("overheads must be strictly increasing")
        return value

    @model_validator(mode="after")
    def _cap_covers_target(self) -> "SimConfig":
        if self.max_trials_per_point < self.target_errors:
            raise ValueError("max_trials_per_point must be >= target_errors")
        return self


class OuterKind(str, Enum):
    HAMMING = "hamming"
    UNIFORM = "uniform"
    UNRESTRICTED = "unrestricted"
    CODE = "code"
    ENUMERATOR = "enumerator"


class OuterSelector(BaseModel):
    """Outer code chosen on the command line, e.g. ``hamming:6`` or ``uniform:70:64``."""

    model_config = ConfigDict(frozen=True)

    kind: OuterKind
    t: int | None = Field(default=None, description="Hamming parameter")
    h: int | None = Field(default=None, description="Code length")
    k: int | None = Field(default=None, description="Design dimension")
    path: str | None = Field(default=None, description="File for code:/enumerator: selectors")

    @classmethod
    def parse(cls, text: str) -> "OuterSelector":
        name, _, rest = text.strip().partition(":")
        try:
            kind = OuterKind(name.lower())
        except ValueError:
            raise SpecError(
                f"Unknown outer selector '{text}'. Use hamming:t, uniform:h:k, unrestricted:k, "
                "code:PATH or enumerator:PATH"
            ) from None
        if kind in (OuterKind.CODE, OuterKind.ENUMERATOR):
            if not rest:
                raise SpecError(f"Selector '{text}' needs a file path")
            return cls(kind=kind, path=rest)

        parts = rest.split(":") if rest else []
        expected = {OuterKind.HAMMING: 1, OuterKind.UNIFORM: 2, OuterKind.UNRESTRICTED: 1}[kind]
        if len(parts) != expected:
            raise SpecError(f"Selector '{text}' expects {expected} integer parameter(s)")
        try:
            numbers = [int(p) for p in parts]
        except ValueError:
            raise SpecError(f"Selector '{text}' has non-integer parameters") from None

        if kind is OuterKind.HAMMING:
            if not 2 <= numbers[0] <= 16:
                raise SpecError(f"Hamming parameter must be in [2, 16], got {numbers[0]}")
            t = numbers[0]
            return cls(kind=kind, t=t, h=(1 << t) - 1, k=(1 << t) - 1 - t)
        if kind is OuterKind.UNIFORM:
            h, k = numbers
            if not 0 < k < h:
                raise SpecError(f"uniform:h:k needs 0 < k < h, got h={h}, k={k}")
            return cls(kind=kind, h=h, k=k)
        if numbers[0] < 1:
            raise SpecError(f"unrestricted:k needs k >= 1, got {numbers[0]}")
        return cls(kind=kind, h=numbers[0], k=numbers[0])

    def __str__(self) -> str:
        if self.kind is OuterKind.HAMMING:
            return f"hamming:{self.t}"
        if self.kind is OuterKind.UNIFORM:
            return f"uniform:{self.h}:{self.k}"
        if self.kind is OuterKind.UNRESTRICTED:
            return f"unrestricted:{self.k}"
        return f"{self.kind.value}:{self.path}"


class DeltaRange(BaseModel):
    """Inclusive overhead range ``a..b`` (or a single value)."""

    model_config = ConfigDict(frozen=True)

    start: int = Field(..., ge=0)
    stop: int = Field(..., ge=0)

    @model_validator(mode="after")
    def _non_empty(self) -> "DeltaRange":
        if self.stop < self.start:
            raise ValueError(f"empty overhead range {self.start}..{self.stop}")
        return self

    @classmethod
    def parse(cls, text: str) -> "DeltaRange":
        start, sep, stop = str(text).strip().partition("..")
        try:
            return cls(start=int(start), stop=int(stop) if sep else int(start))
        except ValueError as e:
            raise SpecError(f"Invalid overhead range '{text}', expected a..b") from e

    def values(self) -> tuple[int, ...]:
        return tuple(range(self.start, self.stop + 1))

    def __str__(self) -> str:
        return f"{self.start}..{self.stop}"


class ExperimentSpec(BaseModel):
    """Everything a bound or simulation run needs, after merging flags, file and defaults."""

    field: int = Field(default=1, ge=1, le=16, description="Field extension degree m, q = 2^m")
    outer: OuterSelector | None = Field(default=None, description="Outer code selector")
    dist: str = Field(default="r10", description="'r10' or a degree-distribution file")
    delta: DeltaRange = Field(
        default_factory=lambda: DeltaRange(start=0, stop=0), description="Overheads"
    )
    seed: int = Field(default=1, ge=0, lt=2**64, description="Master seed")
    target_errors: int = Field(default=200, ge=1, description="Failures collected per point")
    max_trials: int = Field(default=10**8, ge=1, description="Trial cap per point")
    codes: int = Field(default=6000, ge=1, description="Ensemble size")
    trials_per_code: int = Field(
        default=1000, ge=1, description="Decoding attempts per ensemble code"
    )
    workers: int = Field(default=1, ge=1, description="Worker processes")
    out: str | None = Field(default=None, description="Output CSV path (stdout when omitted)")
    theorem: int | None = Field(
        default=None, ge=1, le=2, description="Bound for deterministic outers"
    )

    @field_validator("outer", mode="before")
    @classmethod
    def _parse_outer(cls, value: Any) -> Any:
        if isinstance(value, str):
            return OuterSelector.parse(value)
        return value

    @field_validator("delta", mode="before")
    @classmethod
    def _parse_delta(cls, value: Any) -> Any:
        if isinstance(value, (str, int)):
            return DeltaRange.parse(str(value))
        return value

    @model_validator(mode="after")
    def _cap_covers_target(self) -> "ExperimentSpec":
        if self.max_trials < self.target_errors:
            raise ValueError("max_trials must be >= target_errors")
        return self

    def require_outer(self) -> OuterSelector:
        if self.outer is None:
            raise SpecError(
                "Missing outer code: pass --outer (hamming:t, uniform:h:k, unrestricted:k, ...)"
            )
        return self.outer

    @property
    def q(self) -> int:
        return 1 << self.field

    def sim_config(self, ensemble: bool = False) -> SimConfig:
        return SimConfig(
            master_seed=self.seed,
            overhead_list=self.delta.values(),
            target_errors=self.target_errors,
            max_trials_per_point=self.max_trials,
            ensemble=EnsembleConfig(num_codes=self.codes, trials_per_code=self.trials_per_code)
            if ensemble
            else None,
        )

    def to_command(self, command: str) -> str:
        """Canonical command line that reproduces a result file (no --workers/--out)."""
        parts = [
            "raptorbound",
            command,
            f"--field {self.field}",
            f"--outer {self.require_outer()}",
            f"--dist {self.dist}",
            f"--delta {self.delta}",
        ]
        if command == "bound":
            if self.theorem is not None:
                parts.append(f"--theorem {self.theorem}")
        elif command == "simulate":
            parts.append(f"--seed {self.seed}")
            if self.require_outer().kind is OuterKind.UNIFORM:
                parts += [f"--codes {self.codes}", f"--trials-per-code {self.trials_per_code}"]
            else:
                parts += [
                    f"--target-errors {self.target_errors}",
                    f"--max-trials {self.max_trials}",
                ]
        return " ".join(parts)
