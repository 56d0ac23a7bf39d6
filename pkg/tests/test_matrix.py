#!/usr/bin/env python
"""
Tests for matrices over Q(q) and their rational evaluations.
"""

import unittest
from fractions import Fraction

import numpy as np

from seminormal.errors import DimensionMismatchError, PoleError, SingularMatrixError
from seminormal.exact import (
    ONE,
    ZERO,
    MatrixQq,
    matrix_algebra,
    monomial,
    permutation_matrix,
    rational_charpoly,
    rational_order,
)
from seminormal.rep.interp import load_fixtures

q = monomial(1)


class TestMatrixQq(unittest.TestCase):
    def setUp(self):
        self.a = MatrixQq.from_rows([[q, ONE], [ONE, ZERO]])

    def test_identity_product(self):
        identity = MatrixQq.identity(2)
        self.assertEqual(identity @ self.a, self.a)
        self.assertEqual(matrix_algebra(identity, self.a, "mul"), self.a)

    def test_inverse(self):
        expected = MatrixQq.from_rows([[ZERO, ONE], [ONE, -q]])
        self.assertEqual(self.a.inverse(), expected)
        self.assertTrue((self.a @ self.a.inverse()).is_identity())
        self.assertEqual(self.a.power(-1), expected)

    def test_inverse_of_interpolating_fixture(self):
        p_hat = load_fixtures()["interpolating"]
        self.assertTrue((p_hat @ matrix_algebra(p_hat, op="inverse")).is_identity())

    def test_singular(self):
        with self.assertRaises(SingularMatrixError):
            MatrixQq.from_rows([[ONE, q], [ONE, q]]).inverse()

    def test_dimension_errors(self):
        with self.assertRaises(DimensionMismatchError):
            MatrixQq.from_rows([[ONE, ONE], [ONE]])
        with self.assertRaises(DimensionMismatchError):
            MatrixQq(2, 2, [ONE])
        with self.assertRaises(DimensionMismatchError):
            MatrixQq.identity(2) @ MatrixQq.identity(3)
        with self.assertRaises(DimensionMismatchError):
            MatrixQq.zeros(2, 3).inverse()
        with self.assertRaises(ValueError):
            MatrixQq(0, 1, [])

    def test_power_of_permutation(self):
        cycle = MatrixQq.constant(permutation_matrix([1, 2, 3, 4, 0]))
        self.assertTrue(matrix_algebra(cycle, op="power", m=5).is_identity())
        self.assertFalse(cycle.power(4).is_identity())

    def test_promotion_fixture_order_divides_six(self):
        promotion = load_fixtures()["promotion"]
        self.assertTrue(promotion.power(6).is_identity())

    def test_conjugate_by_diagonal(self):
        ones = MatrixQq.from_rows([[ONE, ONE], [ONE, ONE]])
        d = MatrixQq.diagonal([q, ONE])
        expected = MatrixQq.from_rows([[ONE, q], [monomial(-1), ONE]])
        self.assertEqual(ones.conjugate_by_diagonal(d), expected)
        with self.assertRaises(ValueError):
            ones.conjugate_by_diagonal(ones)
        with self.assertRaises(ValueError):
            ones.conjugate_by_diagonal(MatrixQq.diagonal([q, ZERO]))

    def test_evaluate_reports_pole_entry(self):
        m = MatrixQq.from_rows([[ONE, ZERO], [monomial(-1), ONE]])
        with self.assertRaises(PoleError) as ctx:
            m.evaluate(0)
        self.assertEqual(ctx.exception.entry, (1, 0))
        self.assertEqual(m.poles_at_zero(), [(1, 0, -1)])
        self.assertEqual(matrix_algebra(m, op="order_scan"), -1)
        values = matrix_algebra(m, op="pointwise_eval", point=2)
        self.assertEqual(values[1, 0], Fraction(1, 2))

    def test_reindexed(self):
        m = MatrixQq.from_rows([[ONE, q], [ZERO, -ONE]])
        self.assertEqual(m.reindexed([1, 0]), MatrixQq.from_rows([[-ONE, ZERO], [q, ONE]]))
        with self.assertRaises(ValueError):
            m.reindexed([0, 0])

    def test_serialization(self):
        self.assertEqual(MatrixQq.from_dict(self.a.to_dict()), self.a)
        text = "# comment\n" + self.a.to_text() + "\n\n"
        self.assertEqual(MatrixQq.parse_text(text), self.a)

    def test_diagonal_predicates(self):
        self.assertTrue(MatrixQq.diagonal([q, ONE]).is_diagonal())
        self.assertFalse(self.a.is_diagonal())
        self.assertEqual(self.a.support().tolist(), [[True, True], [True, False]])


class TestRationalMatrices(unittest.TestCase):
    def test_permutation_matrix(self):
        values = permutation_matrix([1, 2, 0])
        self.assertEqual(values[1, 0], 1)
        self.assertEqual(rational_order(values, 5), 3)
        self.assertIsNone(rational_order(values, 2))

    def test_charpoly(self):
        swap = np.array([[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]], dtype=object)
        self.assertEqual(rational_charpoly(swap), [1, 0, -1])


if __name__ == "__main__":
    unittest.main()
