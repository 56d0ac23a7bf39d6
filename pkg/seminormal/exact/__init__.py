"""Exact arithmetic: Q(q), Z[q] modulo cyclotomics, and matrices over Q(q)."""

from seminormal.exact.rational import (
    ONE,
    ZERO,
    FieldOp,
    LaurentPoly,
    QuantumConvention,
    Rational,
    RationalFunction,
    eval_at,
    field_arith,
    monomial,
    order_at_zero,
    q,
    quantum_int,
    signed_quantum_int,
)
from seminormal.exact.cyclotomic import (
    CyclotomicElement,
    IntPoly,
    cyclotomic,
    eval_at_root,
)
from seminormal.exact.matrix import (
    MatrixOp,
    MatrixQq,
    matrix_algebra,
    permutation_matrix,
    rational_charpoly,
    rational_identity,
    rational_order,
    rational_power,
)

__all__ = [
    "ONE",
    "ZERO",
    "FieldOp",
    "LaurentPoly",
    "QuantumConvention",
    "Rational",
    "RationalFunction",
    "eval_at",
    "field_arith",
    "monomial",
    "order_at_zero",
    "q",
    "quantum_int",
    "signed_quantum_int",
    "CyclotomicElement",
    "IntPoly",
    "cyclotomic",
    "eval_at_root",
    "MatrixOp",
    "MatrixQq",
    "matrix_algebra",
    "permutation_matrix",
    "rational_charpoly",
    "rational_identity",
    "rational_order",
    "rational_power",
]
