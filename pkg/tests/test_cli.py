import unittest
import os
import io
import json
import tempfile

from petitcode.cli import (EXIT_BUDGET, EXIT_CONFIG, EXIT_OK, build_parser, main, overrides, print_presets,
                           run_job)
from petitcode.errors import ConfigError
from petitcode.presets import list_presets


class TestCase(unittest.TestCase):
    def setUp(self):
        self.parser = build_parser()
        self.directory = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.directory.cleanup()

    def _run(self, argv):
        stream = io.StringIO()
        run_job(self.parser.parse_args(argv), stream)
        return stream.getvalue()

    def test_method_presets(self):
        presets = list_presets()
        self.assertIn("gaussian_sqrt5", presets["fields"])
        self.assertIn("inert_quadratic", presets["jobs"])
        stream = io.StringIO()
        print_presets(stream)
        self.assertIn("  inert_quadratic\n", stream.getvalue())
        self.assertEqual(main(["presets", "list"]), EXIT_OK)

    def test_method_overrides(self):
        args = self.parser.parse_args(["analyze", "--preset", "inert_quadratic", "--budget", "10", "--seed", "7",
                                       "--threads", "2", "--format", "records"])
        self.assertEqual(overrides(args, {}), {"budgets": {"enumeration": 10}, "threads": 2, "seed": 7,
                                               "experiment": {"format": "records"}})
        args = self.parser.parse_args(["quotient", "--preset", "inert_quadratic"])
        self.assertEqual(overrides(args, {}), {})
        args = self.parser.parse_args(["bound", "--preset", "inert_quadratic"])
        self.assertIn("threads", overrides(args, {}))
        self.assertNotIn("threads", overrides(args, {"threads": 1}))

    def test_method_exit_codes(self):
        self.assertEqual(main(["quotient", "--preset", "inert_quadratic"]), EXIT_OK)
        self.assertEqual(main(["quotient", "--preset", "no_such_preset"]), EXIT_CONFIG)
        self.assertEqual(main(["quotient", "--config", os.path.join(self.directory.name, "missing.yaml")]),
                         EXIT_CONFIG)
        self.assertEqual(main(["analyze", "--preset", "inert_quadratic", "--budget", "1"]), EXIT_BUDGET)

        path = os.path.join(self.directory.name, "future.yaml")
        with open(path, "w") as file:
            file.write('version: "2.0"\nfield: gaussian\n')
        self.assertEqual(main(["quotient", "--config", path]), EXIT_CONFIG)

        with self.assertRaises(ConfigError):
            run_job(self.parser.parse_args(["quotient", "--preset", "no_such_preset"]), io.StringIO())

    def test_method_determinism(self):
        argv = ["analyze", "--preset", "inert_quadratic", "--format", "records", "--seed", "3"]
        first = self._run(argv + ["--threads", "1"])
        second = self._run(argv + ["--threads", "3"])
        self.assertEqual(first, second)
        report = json.loads(first)
        self.assertEqual(report["quotient"]["cardinality"], 16)
        self.assertEqual(report["quotient"]["ideals"], [1, 16])
        self.assertEqual(report["quotient"]["division"], "proved")

    def test_method_commands(self):
        out = self.directory.name
        for command, preset in [("quotient", "inert_quadratic"), ("decompose", "gaussian_conjugation"),
                                ("codebook", "inert_quadratic"), ("bound", "inert_quadratic")]:
            self.assertEqual(main([command, "--preset", preset, "--out", out, "--threads", "1"]), EXIT_OK)
            self.assertTrue(os.path.isfile(os.path.join(out, "{}_{}".format(preset, command), "report.txt")))

        report = json.loads(self._run(["quotient", "--preset", "inert_quadratic", "--format", "records"]))
        self.assertEqual(report["report"], "quotient: inert_quadratic")

        report = json.loads(self._run(["quotient", "--preset", "iterated_omega7", "--format", "records"]))
        self.assertEqual(report["coefficients"]["cardinality"], 64)
        self.assertTrue(report["coefficients"]["field"])
        self.assertTrue(report["cyclic"]["split"])
        self.assertEqual(report["cyclic"]["fixed_sigma"], 4)
        self.assertTrue(all(claim.endswith("(agrees)") for claim in report["claims"].values()))

    def _claim(self, report, prefix):
        claims = [claim for claim in report["claims"].values() if claim.startswith(prefix)]
        self.assertEqual(len(claims), 1)
        return claims[0]

    def test_method_omega7_cubic(self):
        report = json.loads(self._run(["analyze", "--preset", "omega7_cubic", "--format", "records"]))
        quotient = report["quotient"]
        self.assertEqual(quotient["coefficient_ring"], 64)
        self.assertEqual(quotient["fixed_ring"], 4)
        self.assertEqual(quotient["division"], "proved")
        self.assertEqual(quotient["gamma"], {"pairs": 1000, "compatible": 1000})
        # the 3 nonzero elements of F_4 give a reducible t^3 - c
        self.assertEqual(report["sweep"], {"nonzero": 63, "division": 60, "degree_m": 60, "agree": 63})
        self.assertEqual(self._claim(report, "division for every nonzero c"),
                         "division for every nonzero c -> 60 of 63 division (DISAGREES)")
        self.assertTrue(self._claim(report, "t^m - c irreducible").endswith("63 of 63 agree (agrees)"))
        self.assertTrue(self._claim(report, "coordinates(").endswith("(agrees)"))

    def test_method_omega15_quartic(self):
        report = json.loads(self._run(["analyze", "--preset", "omega15_quartic", "--format", "records"]))
        quotient = report["quotient"]
        self.assertEqual(quotient["coefficient_ring"], 16)
        self.assertEqual(quotient["fixed_ring"], 2)
        self.assertEqual(quotient["gamma"], {"pairs": 1000, "compatible": 1000})
        # theta mod <1 + i> has degree 4 over F_2, so t^4 - theta is irreducible
        self.assertEqual(quotient["division"], "proved")

        sweep = report["sweep"]
        self.assertEqual(sweep["nonzero"], 15)
        self.assertEqual(sweep["agree"], 15)
        self.assertEqual(sweep["division"], sweep["degree_m"])

        reductions = report["reductions"]
        self.assertEqual(reductions["tested"], 20)
        # irreducible exactly when c has degree 4 over F_2
        self.assertEqual(reductions["division"], reductions["independent"])
        self.assertGreater(reductions["division"], 0)
        self.assertTrue(self._claim(report, "reductions never give a division algebra").endswith("(DISAGREES)"))
        self.assertTrue(self._claim(report, "1, c, ..., c^(m-1) always dependent").endswith("(DISAGREES)"))

    def test_method_gaussian_inert(self):
        self.assertIn("gaussian_inert", list_presets()["jobs"])
        report = json.loads(self._run(["decompose", "--preset", "gaussian_inert", "--format", "records"]))
        self.assertEqual(report["quotient"], {"cardinality": 81, "ring_components": 1, "components": 1})
        component = report["component 0"]
        self.assertEqual(component["cardinality"], 81)
        self.assertEqual(component["coefficient_ring"], 9)
        self.assertEqual(component["slots"], 1)
        self.assertFalse(component["split"])
        self.assertTrue(all(claim.endswith("(agrees)") for claim in report["claims"].values()))

        report = json.loads(self._run(["analyze", "--preset", "gaussian_inert", "--format", "records"]))
        self.assertEqual(report["quotient"]["division"], "proved")
        self.assertEqual(report["quotient"]["gamma"], {"pairs": 1000, "compatible": 1000})
        self.assertTrue(all(claim.endswith("(agrees)") for claim in report["claims"].values()))


if __name__ == '__main__':
    import sys

    if not sys.argv[-1] == '--debug':
        raise RuntimeError('Test can only be runned manually with --debug flag')

    test = TestCase()
    test.setUp()
    for method in dir(test):
        if method.startswith('test_'):
            print('Running test: {}'.format(method))
            getattr(test, method)()
    test.tearDown()

    print('All tests passed.')
