"""Arithmetic in GF(2^m) and dense linear algebra over it."""

from raptorbound.gf.field import FieldSpec, field_add, field_inv, field_mul
from raptorbound.gf.matrix import FqMatrix, matmul, nullspace_basis, rank, row_reduce

__all__ = [
    "FieldSpec",
    "FqMatrix",
    "field_add",
    "field_inv",
    "field_mul",
    "matmul",
    "nullspace_basis",
    "rank",
    "row_reduce",
]
