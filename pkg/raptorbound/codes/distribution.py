"""LT output degree distributions."""

import hashlib
from collections.abc import Iterable
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import numpy as np

from raptorbound.core.errors import DomainError

SUM_TOLERANCE = 1e-9

# Degree distribution of the standardised R10 Raptor code.
R10_PMF = (
    (1, 0.0098),
    (2, 0.4590),
    (3, 0.2110),
    (4, 0.1134),
    (10, 0.1113),
    (11, 0.0799),
    (40, 0.0156),
)


@dataclass(frozen=True)
class DegreeDistribution:
    """Output degree pmf Omega over degrees 1..d_max."""

    degrees: tuple[int, ...]
    probabilities: tuple[float, ...]
    name: str = "custom"
    _cdf: np.ndarray = field(init=False, repr=False, compare=False)
    _weights: tuple[Fraction, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.degrees) != len(self.probabilities) or not self.degrees:
            raise DomainError("Degrees and probabilities must be non-empty and of equal length")
        if len(set(self.degrees)) != len(self.degrees):
            raise DomainError(f"Degrees must be distinct: {self.degrees}")
        if min(self.degrees) < 1:
            raise DomainError(f"Degrees must be >= 1: {self.degrees}")
        if min(self.probabilities) <= 0:
            raise DomainError("All degree probabilities must be > 0")
        total = sum(self.probabilities)
        if abs(total - 1.0) > SUM_TOLERANCE:
            raise DomainError(f"Degree probabilities sum to {total!r}, expected 1")

        # exact weights sum to 1; probabilities and the CDF are derived from them
        order = sorted(range(len(self.degrees)), key=lambda i: self.degrees[i])
        raw = [Fraction(float(self.probabilities[i])) for i in order]
        exact_total = sum(raw, Fraction(0))
        weights = tuple(w / exact_total for w in raw)
        object.__setattr__(self, "degrees", tuple(int(self.degrees[i]) for i in order))
        object.__setattr__(self, "probabilities", tuple(float(w) for w in weights))
        object.__setattr__(self, "_weights", weights)
        cdf = np.cumsum(self.probabilities)
        cdf[-1] = 1.0
        object.__setattr__(self, "_cdf", cdf)

    @classmethod
    def from_pairs(
        cls, pairs: Iterable[tuple[int, float]], name: str = "custom"
    ) -> "DegreeDistribution":
        items = list(pairs)
        return cls(
            degrees=tuple(d for d, _ in items),
            probabilities=tuple(p for _, p in items),
            name=name,
        )

    @property
    def d_max(self) -> int:
        return self.degrees[-1]

    def pairs(self) -> list[tuple[int, float]]:
        return list(zip(self.degrees, self.probabilities))

    def exact_pairs(self) -> list[tuple[int, Fraction]]:
        """Degrees with their exact weights; the weights sum to exactly 1."""
        return list(zip(self.degrees, self._weights))

    def probability(self, degree: int) -> float:
        return dict(self.pairs()).get(degree, 0.0)

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        """Draw `size` i.i.d. degrees by inverse-CDF sampling."""
        draws = rng.random(size)
        index = np.searchsorted(self._cdf, draws, side="right")
        return np.asarray(self.degrees, dtype=np.int64)[np.minimum(index, len(self.degrees) - 1)]

    def fingerprint(self) -> str:
        text = ";".join(f"{d}:{p!r}" for d, p in self.pairs())
        return hashlib.sha256(text.encode()).hexdigest()[:16]


def r10_distribution() -> DegreeDistribution:
    """Omega(x) = 0.0098x + 0.4590x^2 + 0.2110x^3 + 0.1134x^4
    + 0.1113x^10 + 0.0799x^11 + 0.0156x^40.
    """
    return DegreeDistribution.from_pairs(R10_PMF, name="r10")


def parse_distribution(text: str, name: str = "custom") -> DegreeDistribution:
    """Parse "degree probability" lines; blank lines and '#' comments are skipped."""
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise DomainError(f"Line {lineno}: expected 'degree probability', got {raw!r}")
        try:
            pairs.append((int(parts[0]), float(parts[1])))
        except ValueError as e:
            raise DomainError(f"Line {lineno}: cannot parse {raw!r}") from e
    return DegreeDistribution.from_pairs(pairs, name=name)


def load_distribution(path: Path) -> DegreeDistribution:
    """Load a degree distribution file."""
    if not path.exists():
        raise DomainError(f"Degree distribution file not found: {path}")
    return parse_distribution(path.read_text(), name=path.name)


def resolve_distribution(selector: str) -> DegreeDistribution:
    """'r10' or a path to a distribution file."""
    if selector.lower() == "r10":
        return r10_distribution()
    return load_distribution(Path(selector))
