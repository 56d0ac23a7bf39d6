#!/usr/bin/env python
"""
Tests for the normalizations, the interpolating matrix and the worked example.
"""

import itertools
import tempfile
import unittest
import warnings
from fractions import Fraction
from importlib import resources
from pathlib import Path

import numpy as np

from seminormal.combinat import Shape, iter_shapes
from seminormal.combinat.csp import promotion_images
from seminormal.errors import DimensionMismatchError, FixtureMismatchError, SingularMatrixError
from seminormal.exact import ONE, MatrixQq, QuantumConvention, monomial, permutation_matrix, quantum_int
from seminormal.rep import (
    Normalization,
    SignConvention,
    balanced_matrix,
    build_t_q,
    d_matrix,
    fixture_consistency,
    hat_generators,
    hatted_generators,
    interpolating_matrix,
    interpolation_suite,
    load_fixtures,
    long_cycle_matrix,
    match_paper_example,
    normalization_matrix,
    rotation_findings,
    verify_intertwiner,
)
from seminormal.rep.interp import BACKWARD, FIXTURE_NAMES, FORWARD, _keep_closest
from seminormal.report.core import Status

RECTANGLES = [(2, 2), (2, 2, 2), (3, 3), (2, 2, 2, 2)]


def qi(n):
    return quantum_int(n, QuantumConvention.BALANCED)


def certificate(shape, *args):
    return interpolating_matrix(Shape(shape), *args)


class TestNormalizations(unittest.TestCase):
    def test_d_matrix(self):
        self.assertEqual(d_matrix(Shape((2, 2))), MatrixQq.diagonal([monomial(3), monomial(2)]))
        self.assertTrue(d_matrix(Shape((4,))).is_identity())

    def test_balanced_matrix_at_one(self):
        values = balanced_matrix(Shape((3, 3))).evaluate(1)
        self.assertEqual(
            [values[i, i] for i in range(5)],
            [Fraction(1, 6), Fraction(1, 4), Fraction(1, 2), Fraction(1, 2), 1],
        )

    def test_balanced_entries_are_bar_invariant(self):
        values_2 = balanced_matrix(Shape((3, 3))).evaluate(2)
        values_half = balanced_matrix(Shape((3, 3))).evaluate(Fraction(1, 2))
        self.assertTrue(np.array_equal(values_2, values_half))

    def test_normalization_matrix(self):
        shape = Shape((3, 2))
        self.assertEqual(normalization_matrix(shape, "inversion"), d_matrix(shape))
        self.assertEqual(normalization_matrix(shape, Normalization.BALANCED), balanced_matrix(shape))


class TestHattedGenerators(unittest.TestCase):
    def test_simple_pole_removed(self):
        t = build_t_q(Shape((2, 2)))[1]
        self.assertIn(-1, [v for _, _, v in t.poles_at_zero()])
        for m in hatted_generators(Shape((2, 2))):
            self.assertFalse(m.poles_at_zero())

    def test_regular_for_all_shapes_up_to_six(self):
        for shape in iter_shapes(6, min_size=2):
            for normalization in Normalization:
                with self.subTest(shape=str(shape), normalization=normalization.value):
                    hatted, orientation = hat_generators(shape, normalization=normalization)
                    self.assertIn(orientation, (FORWARD, BACKWARD))
                    for m in hatted:
                        self.assertGreaterEqual(m.order_scan(), 0)

    def test_hatted_are_involutions(self):
        for m in hatted_generators(Shape((3, 2))):
            self.assertTrue((m @ m).is_identity())


class TestInterpolatingMatrix(unittest.TestCase):
    def test_shape_22(self):
        cert = certificate((2, 2))
        self.assertTrue(cert.power_is_identity)
        self.assertTrue(np.array_equal(cert.eval0, np.array([[0, 1], [1, 0]])))
        self.assertEqual(cert.promotion_sign, 1)
        self.assertEqual(cert.convention, SignConvention.CONJUGATE)

    def test_rectangles(self):
        for parts in RECTANGLES:
            with self.subTest(shape=parts):
                cert = certificate(parts)
                self.assertTrue(cert.regular_at_zero)
                self.assertTrue(cert.eval0_is_promotion)
                self.assertTrue(cert.eval1_is_long_cycle)
                self.assertTrue(cert.power_is_identity)
                self.assertTrue(cert.charpolys_agree)
                self.assertTrue(cert.hatted_zero_support_ok)
                self.assertFalse([r for r in cert.results() if r.failed])

    def test_rectangle_44(self):
        cert = certificate((4, 4))
        self.assertTrue(cert.eval0_is_promotion)
        self.assertTrue(cert.eval1_is_long_cycle)
        self.assertTrue(cert.power_is_identity)
        self.assertTrue(cert.charpolys_agree)

    def test_young_signs_on_even_rectangles(self):
        cert = certificate((2, 2), SignConvention.YOUNG)
        self.assertEqual(cert.promotion_sign, -1)
        self.assertFalse(cert.eval0_is_promotion)

    def test_balanced_normalization(self):
        cert = certificate((3, 3), SignConvention.AUTO, Normalization.BALANCED)
        self.assertTrue(cert.eval0_is_promotion)
        self.assertTrue(cert.power_is_identity)

    def test_eval1_is_unchanged_by_inversion_normalization(self):
        shape = Shape((3, 2))
        cert = certificate((3, 2))
        self.assertTrue(np.array_equal(cert.eval1, long_cycle_matrix(shape).evaluate(1)))

    def test_non_rectangle_claims_are_informational(self):
        cert = certificate((3, 2))
        results = {r.relation: r for r in cert.results()}
        self.assertFalse([r for r in results.values() if r.failed])
        self.assertEqual(results["power_is_identity"].status, Status.INFORMATIONAL)
        self.assertEqual(results["eval0_is_promotion"].status, Status.INFORMATIONAL)
        self.assertEqual(results["eval1_is_long_cycle"].status, Status.PASS)
        self.assertEqual(results["hatted_zero_is_involution"].status, Status.INFORMATIONAL)

    def test_small_shapes(self):
        for shape in iter_shapes(5, min_size=2):
            with self.subTest(shape=str(shape)):
                self.assertFalse([r for r in interpolation_suite(shape) if r.failed])

    def test_eval0_matches_promotion_images(self):
        cert = certificate((3, 3))
        expected = permutation_matrix(promotion_images(Shape((3, 3))))
        self.assertTrue(np.array_equal(cert.eval0, expected))
        self.assertEqual(cert.multiplicative_order, 6)

    def test_sign_findings_are_logged_not_warned(self):
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            with self.assertLogs("seminormal.rep.interp", level="INFO"):
                certificates = [interpolating_matrix(shape) for shape in iter_shapes(5, min_size=2)]
        self.assertEqual(caught, [])
        for cert in certificates:
            if cert.hatted_zero_is_involution is False:
                self.assertTrue(cert.notes)

    def test_to_dict(self):
        data = certificate((2, 2)).to_dict()
        self.assertEqual(data["shape"], [2, 2])
        self.assertEqual(data["eval0"], [["0", "1"], ["1", "0"]])
        self.assertEqual(data["p_hat"]["rows"], 2)


class TestFixtures(unittest.TestCase):
    def test_load(self):
        fixtures = load_fixtures()
        self.assertEqual(sorted(fixtures), sorted(FIXTURE_NAMES))
        for name, matrix in fixtures.items():
            self.assertEqual(matrix.shape, (5, 5), name)

    def test_published_entries(self):
        p_hat = load_fixtures()["interpolating"]
        self.assertEqual(p_hat[0, 0], ONE / qi(3))
        self.assertEqual(p_hat[0, 1], qi(4) / (qi(3) * qi(3)))
        self.assertEqual(p_hat[0, 1].evaluate(1), Fraction(4, 9))

    def test_corrected_inverse_entry(self):
        fixtures = load_fixtures()
        entry = fixtures["interpolating_inverse"][0, 2]
        self.assertEqual(entry, qi(4) / (qi(2) * qi(3)))
        self.assertNotEqual(entry, qi(2) / qi(3))
        self.assertEqual(fixtures["interpolating"].inverse()[0, 2], entry)

    def test_consistency(self):
        results = fixture_consistency(load_fixtures())
        self.assertEqual(len(results), 8)
        self.assertFalse([r for r in results if r.failed])


def _copy_fixtures(target: Path) -> None:
    source = resources.files("seminormal.fixtures").joinpath("paper_example")
    for name in FIXTURE_NAMES:
        text = source.joinpath(f"{name}.txt").read_text(encoding="utf-8")
        (target / f"{name}.txt").write_text(text, encoding="utf-8")


class TestWorkedExample(unittest.TestCase):
    def test_match(self):
        match = match_paper_example()
        self.assertEqual(match.convention, SignConvention.CONJUGATE)
        self.assertEqual(match.normalization, Normalization.BALANCED)
        self.assertEqual(match.order, [0, 1, 2, 3, 4])
        self.assertFalse([r for r in match.results if r.failed])
        self.assertEqual(match.certificate.matched_basis_permutation, [1, 2, 3, 4, 5])
        data = match.to_dict()
        self.assertEqual(data["basis_permutation"], [1, 2, 3, 4, 5])

    def test_intertwiner_orientation(self):
        match = match_paper_example()
        orientation = [r for r in match.results if r.relation == "intertwiner_orientation"]
        self.assertEqual(len(orientation), 1)
        self.assertIn("M p_hat = c0 M", orientation[0].detail["holding"])

    def test_corrupted_fixture(self):
        with tempfile.TemporaryDirectory() as tmp:
            target = Path(tmp)
            _copy_fixtures(target)
            rows = load_fixtures(target)["interpolating"].to_rows()
            rows[0][0] = ONE
            (target / "interpolating.txt").write_text(
                MatrixQq.from_rows(rows).to_text(), encoding="utf-8"
            )
            with self.assertRaises(FixtureMismatchError) as ctx:
                match_paper_example(target)
        self.assertTrue(ctx.exception.diff)
        self.assertEqual(ctx.exception.diff[0]["matrix"], "interpolating")

    def test_rotation_entries_reported(self):
        results = {r.relation: r for r in match_paper_example().results}
        self.assertEqual(results["rotation_is_conjugated_long_cycle"].status, Status.PASS)
        permuted = results["rotation_as_permuted_long_cycle"]
        self.assertEqual(permuted.status, Status.INFORMATIONAL)
        self.assertIsNone(permuted.detail["basis_permutation"])

    def test_corrupted_rotation_keeps_smallest_diff(self):
        with tempfile.TemporaryDirectory() as tmp:
            target = Path(tmp)
            _copy_fixtures(target)
            rows = load_fixtures(target)["rotation"].to_rows()
            rows[0][0] = ONE
            (target / "rotation.txt").write_text(
                MatrixQq.from_rows(rows).to_text(), encoding="utf-8"
            )
            with self.assertRaises(FixtureMismatchError) as ctx:
                match_paper_example(target)
        self.assertEqual(len(ctx.exception.diff), 1)
        self.assertEqual(ctx.exception.diff[0]["matrix"], "rotation")
        self.assertEqual((ctx.exception.diff[0]["row"], ctx.exception.diff[0]["col"]), (1, 1))
        self.assertEqual(ctx.exception.closest["normalization"], "balanced")

    def test_keep_closest(self):
        young, conjugate = SignConvention.YOUNG, SignConvention.CONJUGATE
        balanced, inversion = Normalization.BALANCED, Normalization.INVERSION
        near = _keep_closest(None, [{"matrix": "rotation"}], conjugate, balanced, [0, 1])
        far = [{"matrix": "rotation"}] * 3
        self.assertIs(_keep_closest(near, far, young, inversion, [1, 0]), near)
        self.assertIs(_keep_closest(near, [{"matrix": "promotion"}], young, balanced, [1, 0]), near)
        closer = _keep_closest(near, [], young, inversion, [1, 0])
        self.assertEqual(closer[0], 0)
        self.assertEqual(
            closer[2], {"convention": "young", "normalization": "inversion", "basis_permutation": [2, 1]}
        )

    def test_missing_fixture(self):
        with tempfile.TemporaryDirectory() as tmp:
            with self.assertRaises(FileNotFoundError):
                load_fixtures(tmp)


class TestRotation(unittest.TestCase):
    shape = Shape((3, 3))

    def setUp(self):
        self.rotation = load_fixtures()["rotation"]

    def test_balanced_conjugate_of_long_cycle(self):
        c1 = long_cycle_matrix(self.shape, SignConvention.CONJUGATE)
        n1 = MatrixQq.constant(balanced_matrix(self.shape).evaluate(1))
        self.assertEqual(n1 @ c1 @ n1.inverse(), self.rotation)
        self.assertEqual(
            n1 @ c1.inverse() @ n1.inverse(), load_fixtures()["rotation_inverse"]
        )

    def test_no_permutation_of_long_cycle(self):
        for convention in (SignConvention.YOUNG, SignConvention.CONJUGATE):
            c1 = long_cycle_matrix(self.shape, convention)
            for order in itertools.permutations(range(5)):
                self.assertNotEqual(c1.reindexed(order), self.rotation, (convention, order))

    def test_rotation_findings(self):
        _, orientation = hat_generators(self.shape, SignConvention.CONJUGATE, Normalization.BALANCED)
        holds, permuted = rotation_findings(
            self.rotation, self.shape, SignConvention.CONJUGATE, Normalization.BALANCED, orientation
        )
        self.assertEqual(holds.status, Status.PASS)
        self.assertEqual(permuted.detail, {"basis_permutation": None})

    def test_rotation_findings_fail_under_inversion(self):
        holds, _ = rotation_findings(
            self.rotation, self.shape, SignConvention.CONJUGATE, Normalization.INVERSION
        )
        self.assertEqual(holds.status, Status.FAIL)

    def test_permuted_long_cycle_is_found(self):
        c1 = long_cycle_matrix(self.shape, SignConvention.YOUNG)
        _, permuted = rotation_findings(
            c1.reindexed([1, 0, 2, 3, 4]), self.shape, SignConvention.YOUNG, Normalization.BALANCED
        )
        order = [x - 1 for x in permuted.detail["basis_permutation"]]
        self.assertEqual(c1.reindexed(order), c1.reindexed([1, 0, 2, 3, 4]))


class TestIntertwiner(unittest.TestCase):
    def test_identity_intertwines_nothing_new(self):
        results = verify_intertwiner(MatrixQq.identity(5), Shape((3, 3)))
        self.assertFalse([r for r in results if r.failed])
        self.assertEqual(results[-1].detail, {"holding": []})

    def test_fixture_pair_is_inverse(self):
        fixtures = load_fixtures()
        self.assertTrue((fixtures["intertwiner"] @ fixtures["intertwiner_inverse"]).is_identity())

    def test_errors(self):
        with self.assertRaises(DimensionMismatchError):
            verify_intertwiner(MatrixQq.identity(4), Shape((3, 3)))
        with self.assertRaises(SingularMatrixError):
            verify_intertwiner(MatrixQq.zeros(5, 5), Shape((3, 3)))


if __name__ == "__main__":
    unittest.main()
