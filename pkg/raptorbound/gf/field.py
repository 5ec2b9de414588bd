"""GF(2^m) finite field arithmetic.

Field elements are integers in [0, 2^m - 1]; bit i is the coefficient of
alpha^i in the polynomial basis. Addition is XOR. Multiplication uses
log/antilog tables for m <= 8 and carry-less multiply-and-reduce above.
"""

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from raptorbound.core.errors import DomainError

MAX_DEGREE = 16
TABLE_MAX_DEGREE = 8

# Reduction polynomials per extension degree, bit e set for x^e.
# Conventional primitive polynomials, fixed so that sampled codes are
# reproducible across runs.
REDUCTION_POLYNOMIALS = {
    1: 0b11,  # x + 1
    2: 0b111,  # x^2 + x + 1
    3: 0b1011,  # x^3 + x + 1
    4: 0b10011,  # x^4 + x + 1
    5: 0b100101,  # x^5 + x^2 + 1
    6: 0b1000011,  # x^6 + x + 1
    7: 0b10000011,  # x^7 + x + 1
    8: 0x11D,  # x^8 + x^4 + x^3 + x^2 + 1
    9: 0x211,  # x^9 + x^4 + 1
    10: 0x409,  # x^10 + x^3 + 1
    11: 0x805,  # x^11 + x^2 + 1
    12: 0x1053,  # x^12 + x^6 + x^4 + x + 1
    13: 0x201B,  # x^13 + x^4 + x^3 + x + 1
    14: 0x4443,  # x^14 + x^10 + x^6 + x + 1
    15: 0x8003,  # x^15 + x + 1
    16: 0x1100B,  # x^16 + x^12 + x^3 + x + 1
}


def clmul(a: int, b: int) -> int:
    """Carry-less product of two GF(2) polynomials."""
    result = 0
    while b:
        if b & 1:
            result ^= a
        a <<= 1
        b >>= 1
    return result


def poly_mod(a: int, modulus: int) -> int:
    """Remainder of GF(2) polynomial division."""
    degree = modulus.bit_length() - 1
    while a.bit_length() - 1 >= degree:
        a ^= modulus << (a.bit_length() - 1 - degree)
    return a


def is_irreducible(poly: int) -> bool:
    """Check irreducibility over GF(2) by trial division.

    Every reducible polynomial of degree m has a factor of degree at most
    m // 2, so all candidate divisors up to that degree are tried.
    """
    degree = poly.bit_length() - 1
    if degree < 1:
        return False
    if degree == 1:
        return True
    for divisor_degree in range(1, degree // 2 + 1):
        for divisor in range(1 << divisor_degree, 1 << (divisor_degree + 1)):
            if poly_mod(poly, divisor) == 0:
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The field GF(2^m) together with its arithmetic tables.

    Instances are immutable and may be shared across threads and processes.
    """

    m: int
    reduction_polynomial: int
    q: int = field(init=False)
    _exp: np.ndarray | None = field(init=False, repr=False, compare=False)
    _log: np.ndarray | None = field(init=False, repr=False, compare=False)
    _mul_table: np.ndarray | None = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not 1 <= self.m <= MAX_DEGREE:
            raise DomainError(f"Extension degree must be in [1, {MAX_DEGREE}], got {self.m}")
        if self.reduction_polynomial.bit_length() - 1 != self.m:
            raise DomainError(
                f"Polynomial 0b{self.reduction_polynomial:b} does not have degree {self.m}"
            )
        if not is_irreducible(self.reduction_polynomial):
            raise DomainError(
                f"Polynomial 0b{self.reduction_polynomial:b} is not irreducible over GF(2)"
            )
        object.__setattr__(self, "q", 1 << self.m)

        exp_table = log_table = mul_table = None
        if self.m <= TABLE_MAX_DEGREE:
            exp_table, log_table = self._build_log_tables()
            mul_table = self._build_mul_table(exp_table, log_table)
        object.__setattr__(self, "_exp", exp_table)
        object.__setattr__(self, "_log", log_table)
        object.__setattr__(self, "_mul_table", mul_table)

    @classmethod
    def for_degree(cls, m: int) -> "FieldSpec":
        """Field GF(2^m) with the tabulated reduction polynomial."""
        return _cached_field(m)

    def _clmul_reduce(self, a: int, b: int) -> int:
        return poly_mod(clmul(a, b), self.reduction_polynomial)

    def _build_log_tables(self) -> tuple[np.ndarray, np.ndarray]:
        """Antilog table over a primitive element, and its inverse."""
        order = self.q - 1
        for generator in range(2 if self.q > 2 else 1, self.q):
            exp_table = np.zeros(order, dtype=np.int64)
            value = 1
            seen = set()
            for power in range(order):
                exp_table[power] = value
                seen.add(value)
                value = self._clmul_reduce(value, generator)
            if len(seen) == order:
                log_table = np.zeros(self.q, dtype=np.int64)
                log_table[exp_table] = np.arange(order)
                return exp_table, log_table
        raise DomainError(f"No primitive element found in GF({self.q})")

    def _build_mul_table(self, exp_table: np.ndarray, log_table: np.ndarray) -> np.ndarray:
        order = self.q - 1
        logs = log_table[1:]
        table = np.zeros((self.q, self.q), dtype=np.int64)
        table[1:, 1:] = exp_table[(logs[:, None] + logs[None, :]) % order]
        return table

    def check(self, a: int) -> None:
        """Raise DomainError if a is not an element of the field."""
        if not 0 <= a < self.q:
            raise DomainError(f"Element {a} out of range for GF({self.q})")

    def add(self, a: int, b: int) -> int:
        self.check(a)
        self.check(b)
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        self.check(a)
        self.check(b)
        if self._mul_table is not None:
            return int(self._mul_table[a, b])
        return self._clmul_reduce(a, b)

    def inv(self, a: int) -> int:
        """Multiplicative inverse. Raises DomainError for 0."""
        self.check(a)
        if a == 0:
            raise DomainError("Zero has no multiplicative inverse")
        if self._exp is not None and self._log is not None:
            order = self.q - 1
            return int(self._exp[(order - self._log[a]) % order])
        # a^(q-2) by square-and-multiply
        result, base, exponent = 1, a, self.q - 2
        while exponent:
            if exponent & 1:
                result = self._clmul_reduce(result, base)
            base = self._clmul_reduce(base, base)
            exponent >>= 1
        return result

    def mul_array(self, a: np.ndarray | int, b: np.ndarray | int) -> np.ndarray:
        """Elementwise product of broadcastable arrays of field elements."""
        a_arr = np.asarray(a, dtype=np.int64)
        b_arr = np.asarray(b, dtype=np.int64)
        if self._mul_table is not None:
            return self._mul_table[a_arr, b_arr]
        a_arr, b_arr = np.broadcast_arrays(a_arr, b_arr)
        product = np.zeros(a_arr.shape, dtype=np.int64)
        for bit in range(self.m):
            product ^= np.where((b_arr >> bit) & 1, a_arr << bit, 0)
        for bit in range(2 * self.m - 2, self.m - 1, -1):
            shifted = self.reduction_polynomial << (bit - self.m)
            product ^= np.where((product >> bit) & 1, shifted, 0)
        return product

    def nonzero_elements(self) -> list[int]:
        """All nonzero field elements [1, ..., q - 1]."""
        return list(range(1, self.q))


@lru_cache(maxsize=None)
def _cached_field(m: int) -> FieldSpec:
    if m not in REDUCTION_POLYNOMIALS:
        raise DomainError(f"Extension degree must be in [1, {MAX_DEGREE}], got {m}")
    return FieldSpec(m, REDUCTION_POLYNOMIALS[m])


def field_add(a: int, b: int, f: FieldSpec) -> int:
    """Characteristic-2 addition (XOR)."""
    return f.add(a, b)


def field_mul(a: int, b: int, f: FieldSpec) -> int:
    """Polynomial product modulo the reduction polynomial."""
    return f.mul(a, b)


def field_inv(a: int, f: FieldSpec) -> int:
    return f.inv(a)
