"""Krawtchouk polynomials in exact integer arithmetic."""

from math import comb

from raptorbound.core.errors import DomainError
from raptorbound.gf.field import FieldSpec


def krawtchouk(j: int, x: int, n: int, f: FieldSpec) -> int:
    """K_j(x; n, q) = sum_i (-1)^i C(x, i) C(n - x, j - i) (q - 1)^(j - i)."""
    if not 0 <= j <= n or not 0 <= x <= n:
        raise DomainError(f"Krawtchouk arguments out of range: j={j}, x={x}, n={n}")
    q1 = f.q - 1
    total = 0
    for i in range(min(j, x) + 1):
        term = comb(x, i) * comb(n - x, j - i) * q1 ** (j - i)
        total += -term if i % 2 else term
    return total
