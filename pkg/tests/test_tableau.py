#!/usr/bin/env python
"""
Tests for shapes, standard tableaux and their statistics.
"""

import unittest

from seminormal.combinat import (
    Shape,
    StandardTableau,
    axial_distance,
    bender_knuth,
    content_vector,
    enumerate_syt,
    hook_length_count,
    hook_lengths,
    iter_shapes,
    jdt_promotion,
    partitions,
    reverse_complement,
    statistics,
)

T_ROWS = StandardTableau.from_rows([[1, 2], [3, 4]])
T_COLS = StandardTableau.from_rows([[1, 3], [2, 4]])

# basis of shape 3,3 in enumeration order
RECT_33 = [
    [[1, 2, 3], [4, 5, 6]],
    [[1, 2, 4], [3, 5, 6]],
    [[1, 2, 5], [3, 4, 6]],
    [[1, 3, 4], [2, 5, 6]],
    [[1, 3, 5], [2, 4, 6]],
]


class TestShape(unittest.TestCase):
    def test_parse(self):
        shape = Shape.parse("3,3")
        self.assertEqual(shape.parts, (3, 3))
        self.assertEqual(shape.size, 6)
        self.assertTrue(shape.is_rectangular)
        self.assertEqual(str(shape), "3,3")

    def test_invalid(self):
        for bad in ("2,3", "a,b", "0", "3,-1"):
            with self.subTest(shape=bad):
                with self.assertRaises(ValueError):
                    Shape.parse(bad)
        with self.assertRaises(ValueError):
            Shape(())

    def test_conjugate(self):
        self.assertEqual(Shape((3, 1)).conjugate(), Shape((2, 1, 1)))

    def test_partitions(self):
        self.assertEqual([s.parts for s in partitions(4)], [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)])
        with self.assertRaises(ValueError):
            partitions(0)


class TestStandardTableau(unittest.TestCase):
    def test_invalid(self):
        with self.assertRaises(ValueError):
            StandardTableau.from_rows([[2, 1]])
        with self.assertRaises(ValueError):
            StandardTableau.from_rows([[1, 2], [1, 4]])
        with self.assertRaises(ValueError):
            StandardTableau(Shape((2, 2)), ((1, 2, 3), (4,)))

    def test_serialization(self):
        self.assertEqual(str(T_COLS), "[[1,3],[2,4]]")
        self.assertEqual(StandardTableau.from_dict(T_COLS.to_dict()), T_COLS)


class TestEnumeration(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(enumerate_syt(Shape((2, 2))), [T_ROWS, T_COLS])
        self.assertEqual(len(enumerate_syt(Shape((5,)))), 1)
        self.assertEqual(
            [[list(row) for row in T.rows] for T in enumerate_syt(Shape((3, 3)))], RECT_33
        )

    def test_count_matches_hook_length_formula(self):
        for shape in iter_shapes(8):
            with self.subTest(shape=str(shape)):
                self.assertEqual(len(enumerate_syt(shape)), hook_length_count(shape))

    def test_content_vector_determines_tableau(self):
        for n in range(1, 7):
            vectors = [content_vector(T) for s in partitions(n) for T in enumerate_syt(s)]
            self.assertEqual(len(vectors), len(set(vectors)))


class TestContentAndAxialDistance(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(content_vector(T_ROWS), (0, 1, -1, 0))
        self.assertEqual(axial_distance(T_ROWS, 2), -2)
        self.assertEqual(axial_distance(T_ROWS, 1), 1)
        self.assertEqual(axial_distance(T_COLS, 1), -1)

    def test_index_range(self):
        with self.assertRaises(ValueError):
            axial_distance(T_ROWS, 4)
        with self.assertRaises(ValueError):
            bender_knuth(T_ROWS, 0)


class TestBenderKnuth(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(bender_knuth(T_ROWS, 2), T_COLS)
        self.assertEqual(bender_knuth(T_ROWS, 1), T_ROWS)
        self.assertEqual(bender_knuth(T_COLS, 3), T_COLS)

    def test_involution(self):
        for shape in iter_shapes(7):
            for T in enumerate_syt(shape):
                for i in range(1, shape.size):
                    self.assertEqual(bender_knuth(bender_knuth(T, i), i), T)

    def test_swap_changes_inv_by_one(self):
        for shape in iter_shapes(6):
            for T in enumerate_syt(shape):
                ct = T.content_vector()
                for i in range(1, shape.size):
                    S = bender_knuth(T, i)
                    if S == T:
                        continue
                    change = statistics(S).inv - statistics(T).inv
                    self.assertEqual(change, 1 if ct[i] > ct[i - 1] else -1)


class TestPromotion(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(jdt_promotion(T_ROWS), T_COLS)
        self.assertEqual(jdt_promotion(T_COLS), T_ROWS)
        row = enumerate_syt(Shape((4,)))[0]
        self.assertEqual(jdt_promotion(row), row)

    def test_orbits_of_shape_33(self):
        basis = enumerate_syt(Shape((3, 3)))
        index = {T: x for x, T in enumerate(basis)}
        self.assertEqual([index[jdt_promotion(T)] for T in basis], [2, 4, 3, 0, 1])


class TestReverseComplement(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(reverse_complement(T_ROWS), T_ROWS)
        self.assertEqual(reverse_complement(T_COLS), T_COLS)

    def test_involution(self):
        for T in enumerate_syt(Shape((3, 3))):
            self.assertEqual(reverse_complement(reverse_complement(T)), T)

    def test_rectangles_only(self):
        with self.assertRaises(ValueError):
            reverse_complement(enumerate_syt(Shape((3, 2)))[0])

    def test_conjugates_swaps(self):
        for shape in iter_shapes(8):
            if not shape.is_rectangular or shape.size < 2:
                continue
            r = shape.size
            for T in enumerate_syt(shape):
                for i in range(1, r):
                    self.assertEqual(
                        reverse_complement(bender_knuth(reverse_complement(T), i)),
                        bender_knuth(T, r - i),
                    )


class TestStatistics(unittest.TestCase):
    def test_examples(self):
        rows = statistics(T_ROWS)
        self.assertEqual(rows.inv, 3)
        self.assertEqual(rows.descents, frozenset({2}))
        self.assertEqual(rows.maj, 2)
        cols = statistics(T_COLS)
        self.assertEqual(cols.inv, 2)
        self.assertEqual(cols.descents, frozenset({1, 3}))
        self.assertEqual(cols.maj, 4)

    def test_inv_on_shape_33(self):
        self.assertEqual([statistics(T).inv for T in enumerate_syt(Shape((3, 3)))], [6, 5, 4, 4, 3])

    def test_to_dict(self):
        self.assertEqual(statistics(T_COLS).to_dict(), {"inv": 2, "maj": 4, "descents": [1, 3]})


class TestHookLengths(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(sorted(hook_lengths(Shape((2, 2)))), [1, 2, 2, 3])
        self.assertEqual(hook_lengths(Shape((3, 3))), [4, 3, 2, 3, 2, 1])
        self.assertEqual(hook_lengths(Shape((1,))), [1])
        self.assertEqual(hook_length_count(Shape((3, 3))), 5)


if __name__ == "__main__":
    unittest.main()
