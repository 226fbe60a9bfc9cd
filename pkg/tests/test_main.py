"""
Unit tests for the command-line application and the regression suite.
"""

import io
import json
import os
import subprocess
import sys
import unittest
from contextlib import redirect_stderr, redirect_stdout

# Add project root to path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from app.config import VerifierSettings
from app.main import main
from app.modules.jacobi import NONZERO, ZERO
from app.modules.regression_suite import build_suite, run_suite, suite_passed
from app.modules.reports import VerificationReport, summary_frame

PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
FIXTURES = os.path.join(PROJECT_ROOT, "fixtures")


def run_cli(*argv):
    """Runs main(argv) and returns (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


def json_lines(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


class TestEnumerateCommand(unittest.TestCase):

    def test_d2_k2(self):
        """Test that enumerate lists six multi-indices and a count."""
        code, out, _ = run_cli("enumerate", "--d", "2", "--k", "2")
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(lines[-2], "yy")
        self.assertEqual(lines[-1], "count: 6")

    def test_d1_k0_json(self):
        """Test the JSON form of enumerate."""
        code, out, _ = run_cli("--json", "enumerate", "--d", "1", "--k", "0")
        self.assertEqual(code, 0)
        payload = json.loads(out)
        self.assertEqual(payload["indices"], [[0]])
        self.assertEqual(payload["count"], 1)

    def test_rejected_domain(self):
        """Test the usage exit for d = 0."""
        code, _, err = run_cli("enumerate", "--d", "0", "--k", "1")
        self.assertEqual(code, 1)
        self.assertIn("--d >= 1", err)

    def test_spec_families(self):
        """Test the --specs and --chain listings."""
        code, out, _ = run_cli("enumerate", "--d", "2", "--k", "2", "--specs", "--json")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["count"], 7)
        code, out, _ = run_cli("enumerate", "--d", "2", "--k", "2", "--chain")
        self.assertEqual(out.splitlines()[0], "1,x,y")


class TestWronskianCommand(unittest.TestCase):

    def test_baseline(self):
        """Test that wronskian prints x^2 for (x, x^2)."""
        code, out, _ = run_cli("wronskian", "--d", "1", "--spec", "1,x", "--f", "x", "--f", "x^2")
        self.assertEqual(code, 0)
        self.assertEqual(out.strip(), "x^2")

    def test_first_order_basis_and_rho(self):
        """Test the --rho prefactor."""
        _, out, _ = run_cli("wronskian", "--d", "2", "--spec", "1,x,y", "--f", "1", "--f", "x", "--f", "y")
        self.assertEqual(out.strip(), "1")
        _, out, _ = run_cli("wronskian", "--d", "2", "--spec", "1,x,y", "--rho", "x",
                            "--f", "1", "--f", "x", "--f", "y")
        self.assertEqual(out.strip(), "x")

    def test_fixture_file(self):
        """Test reading arguments from a fixture file."""
        path = os.path.join(FIXTURES, "first_order_basis.txt")
        code, out, _ = run_cli("wronskian", "--d", "2", "--spec", "1,x,y", "--f-file", path)
        self.assertEqual(code, 0)
        self.assertEqual(out.strip(), "1")

    def test_independence_flag(self):
        """Test the independence verdict line."""
        _, out, _ = run_cli("wronskian", "--d", "1", "--spec", "1,x", "--f", "x", "--f", "x^2", "--independence")
        self.assertEqual(out.splitlines(), ["x^2", "independent"])

    def test_errors(self):
        """Test arity and parse errors with their exit code."""
        code, _, err = run_cli("wronskian", "--d", "2", "--spec", "1,x,y", "--f", "1", "--f", "x")
        self.assertEqual(code, 1)
        self.assertIn("takes 3 arguments", err)
        code, _, err = run_cli("wronskian", "--d", "2", "--spec", "1,x", "--f", "x +", "--f", "y")
        self.assertEqual(code, 1)
        self.assertIn("offset 3", err)


class TestVerifyCommand(unittest.TestCase):

    def test_ternary_identity(self):
        """Test a certified zero verdict in JSON."""
        code, out, _ = run_cli("--json", "verify", "--d", "2", "--outer", "1,x,y", "--inner", "1,x,y")
        self.assertEqual(code, 0)
        report = json.loads(out)
        self.assertEqual(report["verdict"], ZERO)
        self.assertTrue(report["certifying"])
        self.assertEqual(report["classification"], "Thm_complete_complete")
        self.assertEqual(report["tuples_checked"], 6)
        self.assertEqual(report["parameters"]["M"], 2)

    def test_incomplete_inner(self):
        """Test the tag of an incomplete inner."""
        code, out, _ = run_cli("verify", "--d", "2", "--outer", "1,x,y", "--inner", "1,x,y,xx", "--json")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["classification"], "Thm_insufficient_outer")

    def test_strict_mode_cites_condition(self):
        """Test that inadmissible specs are refused by default, naming the condition."""
        code, _, err = run_cli("verify", "--d", "2", "--outer", "1,y", "--inner", "1,x")
        self.assertEqual(code, 1)
        self.assertIn("set of first-order derivatives is complete", err)

    def test_counterexample(self):
        """Test the nonzero exit and the witness of the counterexample."""
        code, out, _ = run_cli("verify", "--d", "2", "--outer", "1,y", "--inner", "1,x",
                               "--allow-inadmissible", "--json")
        self.assertEqual(code, 3)
        report = json.loads(out)
        self.assertEqual(report["verdict"], NONZERO)
        self.assertEqual(report["classification"], "NotCovered")
        self.assertEqual(report["witnesses"][0], {"args": ["1", "x", "y"], "value": "2"})

    def test_guard_exit_code(self):
        """Test the guard exit code."""
        code, _, err = run_cli("verify", "--d", "2", "--outer", "1,x,y", "--inner", "1,x,y", "--guard", "10")
        self.assertEqual(code, 2)
        self.assertIn("exceeds guard 10", err)

    def test_random_mode(self):
        """Test the random pre-screen report."""
        code, out, _ = run_cli("verify", "--d", "2", "--outer", "1,x,y", "--inner", "1,x,y",
                               "--random", "--trials", "5", "--seed", "11", "--json")
        self.assertEqual(code, 0)
        report = json.loads(out)
        self.assertFalse(report["certifying"])
        self.assertEqual(report["mode"], "random")
        self.assertEqual(report["parameters"], {"trials": 5, "max_degree": 2, "seed": 11})

    def test_rho_prefactor(self):
        """Test that a rho prefactor is echoed."""
        code, out, _ = run_cli("verify", "--d", "2", "--outer", "1,x,y", "--inner", "1,x,y",
                               "--rho-outer", "x^2 + y", "--json")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["parameters"]["rho_outer"], "x^2 + y")

    def test_relaxed_validity_is_experimental(self):
        """Test that relaxed specs are accepted only on request and marked experimental."""
        code, out, _ = run_cli("verify", "--d", "1", "--outer", "1,x", "--inner", "1,x,xxx",
                               "--relaxed-validity", "--json")
        report = json.loads(out)
        self.assertTrue(report["experimental"])
        self.assertIn(code, (0, 3))
        code, _, _ = run_cli("verify", "--d", "1", "--outer", "1,x", "--inner", "1,x,xxx")
        self.assertEqual(code, 1)

    def test_text_report(self):
        """Test the witness line in text output."""
        code, out, _ = run_cli("verify", "--d", "2", "--outer", "1,y", "--inner", "1,x", "--allow-inadmissible")
        self.assertEqual(code, 3)
        self.assertIn("witness (1, x, y) -> 2", out)


class TestOtherCommands(unittest.TestCase):

    def test_peano(self):
        """Test the Peano orthant listings."""
        code, out, _ = run_cli("peano", "--case", "1d")
        self.assertEqual(code, 0)
        self.assertIn("(+): 0", out)
        self.assertIn("(-): 0", out)
        code, out, _ = run_cli("--json", "peano", "--case", "2d")
        self.assertEqual(code, 0)
        self.assertEqual(len(json.loads(out)["parameters"]["orthants"]), 4)

    def test_table(self):
        """Test the Jacobi table in JSON."""
        code, out, _ = run_cli("table", "--d", "1", "--max-order", "2", "--json")
        self.assertEqual(code, 0)
        table = json.loads(out)["table"]
        self.assertEqual(table["k=2"]["l=1"], ZERO)

    def test_usage_errors(self):
        """Test the usage exit for bad commands and options."""
        self.assertEqual(run_cli()[0], 1)
        self.assertEqual(run_cli("frobnicate")[0], 1)
        self.assertEqual(run_cli("peano", "--case", "5d")[0], 1)
        self.assertEqual(run_cli("paper-suite", "--only", "no-such-case")[0], 1)


class TestRegressionSuite(unittest.TestCase):
    """The pinned regression suite."""

    @classmethod
    def setUpClass(cls):
        cls.reports = run_suite(VerifierSettings())

    def test_all_cases_match(self):
        """Test that every pinned case matches its expectation."""
        mismatches = [r.case_label for r in self.reports if not r.matches_expectation]
        self.assertEqual(mismatches, [])
        self.assertTrue(suite_passed(self.reports))

    def test_expected_groups_present(self):
        """Test that each case group is present."""
        labels = [r.case_label for r in self.reports]
        self.assertIn("wronskian-baseline", labels)
        self.assertIn("ternary-jacobi", labels)
        self.assertIn("counterexample", labels)
        self.assertEqual(sum(1 for l in labels if l.startswith("table-d1")), 9)
        self.assertEqual(sum(1 for l in labels if l.startswith("sweep-d2")), 7)

    def test_complete_inner_certified(self):
        """A complete order-2 inner under an incomplete order-2 outer certifies zero."""
        report = next(r for r in self.reports if r.case_label == "complete-inner-d2")
        self.assertEqual(report.classification, "Thm_complete_inner")
        self.assertEqual(report.verdict, ZERO)
        self.assertTrue(report.certifying)
        self.assertEqual(report.tuples_checked, 5005)
        self.assertEqual(report.parameters["M"], 4)

    def test_sweep_tags(self):
        """Test the tags over the incomplete-inner sweep."""
        tags = {r.classification for r in self.reports if r.case_label.startswith("sweep-d2")}
        self.assertEqual(tags, {"Thm_insufficient_outer", "Thm_enough_outer", "Thm_complete_complete"})

    def test_counterexample_report(self):
        """Test the counterexample and its proportional identity."""
        report = next(r for r in self.reports if r.case_label == "counterexample")
        self.assertEqual(report.verdict, NONZERO)
        self.assertEqual(report.witnesses[0]["value"], "2")
        identity = next(r for r in self.reports if r.case_label.startswith("identity"))
        self.assertEqual(identity.verdict, ZERO)
        self.assertEqual(identity.tuples_checked, 20)

    def test_report_schema(self):
        """Every report serializes the full field set; nonzero verdicts carry witnesses."""
        fields = set(VerificationReport.__dataclass_fields__)
        for report in self.reports:
            payload = json.loads(report.to_json())
            self.assertEqual(set(payload), fields)
            if payload["verdict"] == NONZERO:
                self.assertTrue(payload["witnesses"])
        frame = summary_frame(self.reports)
        self.assertEqual(len(frame), len(self.reports))
        self.assertTrue(frame["ok"].all())

    def test_baseline_witness(self):
        """The nonzero baseline Wronskian names its arguments and value."""
        report = next(r for r in self.reports if r.case_label == "wronskian-baseline")
        self.assertEqual(report.witnesses, [{"args": ["x", "x^2"], "value": "x^2"}])

    def test_nonzero_report_requires_witness(self):
        """A nonzero report built without a witness is refused."""
        with self.assertRaises(ValueError):
            VerificationReport(
                case_label="bare", d=1, outer_spec="1,x", inner_spec=None, classification=None,
                mode="evaluate", parameters={}, verdict=NONZERO, certifying=True,
            )

    def test_only_filter(self):
        """Test that --only selects a single case."""
        code, out, _ = run_cli("--json", "paper-suite", "--only", "counterexample")
        self.assertEqual(code, 0)
        reports = json_lines(out)
        self.assertEqual(len(reports), 1)
        self.assertEqual(reports[0]["verdict"], NONZERO)

    def test_stretch_adds_cases(self):
        """Test that --stretch adds the order-2 outer sweep."""
        settings = VerifierSettings()
        self.assertGreater(len(build_suite(settings, stretch=True)), len(build_suite(settings)))


class TestPackageImports(unittest.TestCase):
    """Each entry point imports cleanly in a fresh interpreter."""

    def assert_imports(self, statement):
        result = subprocess.run(
            [sys.executable, "-c", statement], cwd=PROJECT_ROOT, capture_output=True, text=True
        )
        self.assertEqual(result.returncode, 0, result.stderr)

    def test_utils_first(self):
        """The utils package loads before anything else has imported app.modules."""
        self.assert_imports("import app.utils; import app.utils.fixtures")

    def test_suite_first(self):
        """The regression suite loads on its own."""
        self.assert_imports("import app.modules.regression_suite")

    def test_certify_first(self):
        """The certification module loads without pulling in app.utils."""
        self.assert_imports(
            "import sys; import app.modules.jacobi.certify; "
            "assert 'app.utils' not in sys.modules"
        )


if __name__ == '__main__':
    unittest.main(verbosity=2)
