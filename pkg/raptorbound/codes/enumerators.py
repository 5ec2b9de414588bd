"""Weight enumerators of outer codes.

Deterministic enumerators hold exact integer multiplicities. Expected
enumerators of random ensembles are evaluated in the log domain, since
binomial coefficients overflow 64-bit floats long before h = 2^16 - 1.
"""

import math
from dataclasses import dataclass
from enum import Enum

from raptorbound.core.errors import DomainError
from raptorbound.gf.field import FieldSpec


class EnumeratorKind(str, Enum):
    """How the multiplicities were obtained."""

    DETERMINISTIC = "deterministic"
    EXPECTED = "expected"
    # One representative per scalar class of nonzero words.
    PROJECTIVE = "projective"


def log_comb(n: int, r: int) -> float:
    """Natural log of C(n, r)."""
    return math.lgamma(n + 1) - math.lgamma(r + 1) - math.lgamma(n - r + 1)


def _safe_log(value: int) -> float:
    return math.log(value) if value > 0 else -math.inf


@dataclass(frozen=True)
class WeightEnumerator:
    """Multiplicities A_0..A_h of codewords by Hamming weight.

    ``log_values`` is authoritative; ``exact`` is present for
    deterministic and projective enumerators.
    """

    h: int
    k: int
    q: int
    kind: EnumeratorKind
    log_values: tuple[float, ...]
    exact: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if len(self.log_values) != self.h + 1:
            raise DomainError(
                f"Expected {self.h + 1} enumerator values, got {len(self.log_values)}"
            )
        if any(math.isnan(v) or v == math.inf for v in self.log_values):
            raise DomainError("Enumerator values must be finite and nonnegative")
        if self.kind is EnumeratorKind.EXPECTED:
            return
        if self.exact is None or len(self.exact) != self.h + 1:
            raise DomainError(f"{self.kind.value} enumerators need exact multiplicities")
        if any(a < 0 for a in self.exact):
            raise DomainError("Multiplicities must be nonnegative")
        if self.exact[0] != 1:
            raise DomainError(f"A_0 must be 1, got {self.exact[0]}")
        if self.kind is EnumeratorKind.DETERMINISTIC and not _is_power(sum(self.exact), self.q):
            raise DomainError(f"Codeword count {sum(self.exact)} is not a power of {self.q}")

    @classmethod
    def from_exact(
        cls, values: list[int], k: int, q: int, kind: EnumeratorKind = EnumeratorKind.DETERMINISTIC
    ) -> "WeightEnumerator":
        return cls(
            h=len(values) - 1,
            k=k,
            q=q,
            kind=kind,
            log_values=tuple(_safe_log(v) for v in values),
            exact=tuple(values),
        )

    @property
    def values(self) -> tuple[float, ...]:
        """Multiplicities as floats (inf where a value exceeds float range)."""
        if self.exact is not None:
            return tuple(_to_float(v) for v in self.exact)
        return tuple(_exp(v) for v in self.log_values)

    def true_dimension(self) -> int | None:
        """log_q of the codeword count for deterministic enumerators."""
        if self.kind is not EnumeratorKind.DETERMINISTIC or self.exact is None:
            return None
        total, dim = sum(self.exact), 0
        while total > 1:
            total //= self.q
            dim += 1
        return dim


def _is_power(value: int, base: int) -> bool:
    while value > 1 and value % base == 0:
        value //= base
    return value == 1


def _to_float(value: int) -> float:
    try:
        return float(value)
    except OverflowError:
        return math.inf


def _exp(value: float) -> float:
    try:
        return math.exp(value)
    except OverflowError:
        return math.inf


def hamming_weight_enumerator(t: int) -> WeightEnumerator:
    """Exact enumerator of the binary (2^t - 1, 2^t - 1 - t) Hamming code.

    Uses (i+1) A_{i+1} + A_i + (h-i+1) A_{i-1} = C(h, i) with A_0 = 1, A_1 = 0.
    """
    if not 2 <= t <= 16:
        raise DomainError(f"Hamming parameter t must be in [2, 16], got {t}")
    h = (1 << t) - 1
    values = [0] * (h + 1)
    values[0] = 1
    binom = h  # C(h, 1)
    for i in range(1, h):
        numerator = binom - values[i] - (h - i + 1) * values[i - 1]
        quotient, remainder = divmod(numerator, i + 1)
        if remainder or quotient < 0:
            raise DomainError(f"Hamming recursion lost integrality at i={i}")
        values[i + 1] = quotient
        binom = binom * (h - i) // (i + 1)
    return WeightEnumerator.from_exact(values, k=h - t, q=2)


def uniform_ensemble_weight_enumerator(h: int, k: int, f: FieldSpec) -> WeightEnumerator:
    """Expected enumerator of the uniform (h - k) x h parity-check ensemble.

    A_l = C(h, l) q^-(h-k) (q-1)^l for l >= 1. A_0 is set to 1 and never
    enters a bound.
    """
    if not 0 < k < h:
        raise DomainError(f"Need 0 < k < h, got h={h}, k={k}")
    log_q = math.log(f.q)
    log_q1 = math.log(f.q - 1)
    log_values = [0.0]
    for weight in range(1, h + 1):
        log_values.append(log_comb(h, weight) - (h - k) * log_q + weight * log_q1)
    return WeightEnumerator(
        h=h, k=k, q=f.q, kind=EnumeratorKind.EXPECTED, log_values=tuple(log_values)
    )


def unrestricted_weight_enumerator(k: int, f: FieldSpec) -> WeightEnumerator:
    """All length-k words, one per scalar class: A_l = C(k, l) (q-1)^(l-1).

    With this enumerator the Raptor bound reduces to the bound for plain
    LT codes over k input symbols.
    """
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    values = [1] + [math.comb(k, weight) * (f.q - 1) ** (weight - 1) for weight in range(1, k + 1)]
    return WeightEnumerator.from_exact(values, k=k, q=f.q, kind=EnumeratorKind.PROJECTIVE)
