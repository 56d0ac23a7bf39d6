#!/usr/bin/env python
"""
Tests for the command-line interface.
"""

import contextlib
import importlib
import io
import json
import tempfile
import unittest
from importlib import resources
from unittest import mock
from pathlib import Path

from pydantic import ValidationError

from seminormal.cli.config import RunConfig
from seminormal.cli.main import main, parse_config
from seminormal.rep.interp import FIXTURE_NAMES


class CliTestCase(unittest.TestCase):
    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.tmp = Path(self._tmp.name)

    def tearDown(self):
        self._tmp.cleanup()

    def run_cli(self, *argv, name="out.json"):
        """Run main with --out; return (exit status, file text or None)."""
        path = self.tmp / name
        with contextlib.redirect_stderr(io.StringIO()):
            status = main([*argv, "--out", str(path)])
        text = path.read_text(encoding="utf-8") if path.exists() else None
        return status, text

    def run_json(self, *argv, name="out.json"):
        status, text = self.run_cli(*argv, name=name)
        return status, json.loads(text)


class TestEmit(CliTestCase):
    def test_polynomial(self):
        status, data = self.run_json("emit", "polynomial", "--shape", "3,3")
        self.assertEqual(status, 0)
        self.assertEqual(data["command"], "emit")
        self.assertEqual(data["results"]["3,3"]["q_hook"]["coefficients"], [1, 0, 1, 1, 1, 0, 1])
        self.assertEqual(len(data["results"]["3,3"]["basis"]), 5)

    def test_maj_polynomial(self):
        status, data = self.run_json("emit", "polynomial", "maj", "--shape", "2,2")
        self.assertEqual(status, 0)
        self.assertEqual(data["results"]["2,2"]["maj"]["coefficients"], [0, 0, 1, 0, 1])

    def test_orbits(self):
        status, data = self.run_json("emit", "orbits", "--shape", "3,3")
        self.assertEqual(status, 0)
        section = data["results"]["3,3"]
        self.assertEqual(section["sizes"], [3, 2])
        self.assertEqual(section["orbits"][0][0]["rows"], [[1, 2, 3], [4, 5, 6]])

    def test_phat(self):
        status, data = self.run_json("emit", "phat", "--shape", "2,2")
        self.assertEqual(status, 0)
        self.assertEqual(data["results"]["2,2"]["phat"]["rows"], 2)
        self.assertEqual(data["metadata"]["convention"], "conjugate")

    def test_generators(self):
        status, data = self.run_json("emit", "t", "--shape", "2,2", "--convention", "young")
        self.assertEqual(status, 0)
        self.assertEqual(sorted(data["results"]["2,2"]), ["basis", "t1", "t2", "t3"])

    def test_repeat_runs_are_byte_identical(self):
        _, first = self.run_cli("emit", "that", "--shape", "3,2", name="a.json")
        _, second = self.run_cli("emit", "that", "--shape", "3,2", name="b.json")
        self.assertEqual(first, second)

    def test_text_output(self):
        status, text = self.run_cli("emit", "d", "--shape", "2,2", "--output", "text", name="d.txt")
        self.assertEqual(status, 0)
        self.assertTrue(text.startswith("2,2:\n"))


class TestVerify(CliTestCase):
    def test_interp(self):
        status, data = self.run_json("verify", "interp", "--shape", "3,3")
        self.assertEqual(status, 0)
        self.assertTrue(data["ok"])
        section = data["results"]["3,3"]
        self.assertTrue(section["certificate"]["eval0_is_promotion"])
        self.assertNotIn("p_hat", section["certificate"])

    def test_csp(self):
        status, data = self.run_json("verify", "csp", "--shape", "4,4")
        self.assertEqual(status, 0)
        self.assertTrue(data["results"]["4,4"]["verdicts"]["q_hook"]["holds"])

    def test_all_on_non_rectangle(self):
        status, data = self.run_json("verify", "all", "--shape", "3,2")
        self.assertEqual(status, 0)
        self.assertEqual(
            sorted(data["results"]["3,2"]),
            ["cactus", "certificate", "csp", "hecke", "interp", "verdicts"],
        )

    def test_max_size_parallel_matches_serial(self):
        status, serial = self.run_cli("verify", "all", "--max-size", "3", name="serial.json")
        self.assertEqual(status, 0)
        with contextlib.redirect_stderr(io.StringIO()):
            status = main(
                ["--parallel", "verify", "all", "--max-size", "3", "--out", str(self.tmp / "p.json")]
            )
        self.assertEqual(status, 0)
        self.assertEqual((self.tmp / "p.json").read_text(encoding="utf-8"), serial)
        self.assertEqual(list(json.loads(serial)["results"]), ["1,1", "1,1,1", "2", "2,1", "3"])

    def test_latex_output(self):
        status, text = self.run_cli(
            "verify", "hecke", "--shape", "2,2", "--output", "latex", name="h.tex"
        )
        self.assertEqual(status, 0)
        self.assertIsNotNone(text)


class TestUsageErrors(CliTestCase):
    def test_status_two(self):
        cases = [
            ["verify", "hecke"],
            ["verify", "hecke", "--shape", "3,3", "--max-size", "4"],
            ["verify", "hecke", "--shape", "2,3"],
            ["verify", "hecke", "--max-size", "1"],
            ["verify", "csp", "--shape", "1"],
            ["emit", "phat"],
            ["emit", "braid", "--shape", "2,2"],
            ["verify", "all", "--shape", "2,2", "--output", "html"],
        ]
        for argv in cases:
            with self.subTest(argv=argv):
                with contextlib.redirect_stderr(io.StringIO()):
                    self.assertEqual(main(argv), 2)

    def test_schema_failure_exits_one(self):
        with mock.patch.object(
            importlib.import_module("seminormal.cli.main"),
            "validate_report",
            side_effect=ValueError("Report validation failed"),
        ):
            status, text = self.run_cli("emit", "polynomial", "--shape", "2,2")
        self.assertEqual(status, 1)
        self.assertIsNone(text)

    def test_unwritable_output(self):
        target = self.tmp / "missing" / "out.json"
        with contextlib.redirect_stderr(io.StringIO()):
            status = main(["emit", "polynomial", "--shape", "2,2", "--out", str(target)])
        self.assertEqual(status, 2)


class TestWorkedExample(CliTestCase):
    def test_match(self):
        status, data = self.run_json("paper-example")
        self.assertEqual(status, 0)
        section = data["results"]["3,3"]
        self.assertEqual(section["basis_permutation"], [1, 2, 3, 4, 5])
        self.assertEqual(section["convention"], "conjugate")
        self.assertEqual(len(section["matrices"]), 6)
        statuses = {entry["relation"]: entry["status"] for entry in section["results"]}
        self.assertEqual(statuses["rotation_is_conjugated_long_cycle"], "pass")
        self.assertEqual(statuses["rotation_as_permuted_long_cycle"], "informational")

    def test_latex(self):
        status, text = self.run_cli("paper-example", "--output", "latex", name="example.tex")
        self.assertEqual(status, 0)
        self.assertIn("\\frac{1}{[3]}", text)

    def test_corrupted_fixtures(self):
        fixtures = self.tmp / "fixtures"
        fixtures.mkdir()
        source = resources.files("seminormal.fixtures").joinpath("paper_example")
        for name in FIXTURE_NAMES:
            text = source.joinpath(f"{name}.txt").read_text(encoding="utf-8")
            if name == "promotion":
                text = text.replace("(1*q^0)/(1*q^0)", "(2*q^0)/(1*q^0)", 1)
            (fixtures / f"{name}.txt").write_text(text, encoding="utf-8")
        status, data = self.run_json("paper-example", "--fixtures", str(fixtures))
        self.assertEqual(status, 1)
        self.assertFalse(data["ok"])
        entry = data["results"]["3,3"]["relations"][0]
        self.assertEqual(entry["status"], "fail")
        self.assertTrue(entry["detail"]["diff"])


class TestRunConfig(unittest.TestCase):
    def test_parse(self):
        config = parse_config(["verify", "csp", "--shape", "3,3"])
        self.assertEqual(config.kind, "csp")
        self.assertEqual([s.parts for s in config.shapes()], [(3, 3)])
        self.assertEqual(config.log_level, "WARNING")

    def test_shapes_for_max_size(self):
        config = RunConfig(command="verify", kind="hecke", max_size=3)
        self.assertEqual(
            [s.parts for s in config.shapes()], [(1, 1), (1, 1, 1), (2,), (2, 1), (3,)]
        )

    def test_invalid(self):
        with self.assertRaises(ValidationError):
            RunConfig(command="verify", kind="hecke")
        with self.assertRaises(ValidationError):
            RunConfig(command="emit", kind="phat", shape="3,3", max_size=4)
        with self.assertRaises(ValidationError):
            RunConfig(command="paper-example", shape="3,3")
        with self.assertRaises(ValidationError):
            RunConfig(command="verify", kind="csp", shape="3,3", log_level="loud")


if __name__ == "__main__":
    unittest.main()
