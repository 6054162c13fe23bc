"""
Tests for the command-line entry point.
"""

import unittest
import os
import sys
import io
import json
import shutil
import tempfile
from unittest.mock import patch

# Add parent directory to path to import modules
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import run_tests
from main import main
from src.graphs.canonical import is_isomorphic
from src.graphs.graph import complete_graph, disjoint_union, path_graph
from src.graphs.graph6 import parse_graph6, write_graph6
from src.polynomials.intpoly import set_max_coefficient_digits, set_max_parse_degree


class TestMain(unittest.TestCase):
    """Test cases for the indatt subcommands."""

    def setUp(self):
        """Set up a config directory with quiet logging."""
        self.config_dir = tempfile.mkdtemp()
        self._write_config({"logging": {"level": "WARNING", "file": ""}})

    def tearDown(self):
        """Remove the config directory and restore the polynomial guards."""
        shutil.rmtree(self.config_dir)
        set_max_coefficient_digits(1000000)
        set_max_parse_degree(100000)

    def _write_config(self, data):
        with open(os.path.join(self.config_dir, "config.json"), "w") as f:
            json.dump(data, f)

    def run_cli(self, *argv):
        with patch("sys.stdout", new_callable=io.StringIO) as out, \
                patch("sys.stderr", new_callable=io.StringIO) as err:
            code = main(["--config-dir", self.config_dir, "-q", "--threads", "1", *argv])
        return code, out.getvalue(), err.getvalue()

    def test_ipoly(self):
        """Test the independence polynomial of P4."""
        self.assertEqual(self.run_cli("ipoly", "Ch")[:2], (0, "1+4z+3z^2\n"))
        self.assertEqual(self.run_cli("ipoly", "--reduced", "Ch")[:2], (0, "4z+3z^2\n"))

    def test_power(self):
        """Test the lexicographic powers of K2."""
        code, out, _ = self.run_cli("power", "A_", "-m", "3")
        self.assertEqual(code, 0)
        self.assertEqual(out, "1+8z\n")

    def test_power_invalid_m(self):
        """Test that -m below 1 is a usage error."""
        code, _, err = self.run_cli("power", "Ch", "-m", "0")
        self.assertEqual(code, 2)
        self.assertIn("-m must be at least 1", err)

    def test_power_refused(self):
        """Test that the coefficient guard refuses a huge power."""
        self._write_config({
            "logging": {"level": "WARNING", "file": ""},
            "polynomials": {"max_coefficient_digits": 5},
        })
        code, out, err = self.run_cli("power", "Ch", "-m", "10")
        self.assertEqual(code, 1)
        self.assertEqual(out, "")
        self.assertIn("attractor", err)

    def test_factor_degree_refused(self):
        """Test that the configured maximum degree refuses a huge exponent."""
        self._write_config({
            "logging": {"level": "WARNING", "file": ""},
            "polynomials": {"max_degree": 10},
        })
        code, out, err = self.run_cli("factor", "--poly", "1+z^11")
        self.assertEqual(code, 1)
        self.assertEqual(out, "")
        self.assertIn("maximum degree 10", err)

    def test_cheb(self):
        """Test the n = 3, k = 4 segment candidate."""
        code, out, _ = self.run_cli("cheb", "--n", "3", "--k", "4")
        self.assertEqual(code, 0)
        self.assertEqual(out, "k=4 I=1+9z+24z^2+16z^3 vertices=9 complementEdges=24 conjugacy=true\n")

    def test_factor(self):
        """Test the nontrivial factorizations of the k = 4 quartic."""
        code, out, _ = self.run_cli("factor", "--poly", "1+16z+80z^2+128z^3+64z^4", "--nontrivial")
        self.assertEqual(code, 0)
        self.assertIn("(1+8z+8z^2)(1+8z+8z^2)", out.split("\n"))

    def test_classify(self):
        """Test the text classification of K4 + K4 + K1."""
        g = disjoint_union(disjoint_union(complete_graph(4), complete_graph(4)), complete_graph(1))
        code, out, _ = self.run_cli("classify", "--no-corroborate", write_graph6(g))
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith("class=Segment k=4 segment=[-1,0]"))
        self.assertIn("connected=false", out)

    def test_classify_depth_override(self):
        """Test that --depth and --cap reach the backward-orbit check."""
        code, out, _ = self.run_cli("classify", "--json", "--depth", "3", "--cap", "50", "Ch")
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertEqual(data["depth"], 3)
        self.assertIsNone(data["corroborationError"])

    def test_classify_invalid_depth(self):
        """Test that an out-of-range --depth is a usage error."""
        code, _, err = self.run_cli("classify", "--depth", "99", "Ch")
        self.assertEqual(code, 2)
        self.assertIn("depth must be in", err)

    def test_stats_json(self):
        """Test the JSON stats of P4."""
        code, out, _ = self.run_cli("stats", "--json", "Ch")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["stats"]["E"], 3)

    def test_tables(self):
        """Test the possible and all three-component rows for k = 3."""
        code, out, _ = self.run_cli("tables", "--k", "3", "--case", "3comp")
        self.assertEqual(code, 0)
        self.assertEqual(len(out.rstrip("\n").split("\n")), 4)

        code, out, _ = self.run_cli("tables", "--k", "3", "--case", "3comp", "--all", "--csv")
        self.assertEqual(code, 0)
        self.assertEqual(len(out.rstrip("\n").split("\n")), 9)

    def test_enumerate(self):
        """Test that P4 is the only co-connected realization of 1 + 4z + 3z^2."""
        code, out, err = self.run_cli("enumerate", "--poly", "1+4z+3z^2", "--co-connected", "--realized")
        self.assertEqual(code, 0)
        lines = out.split()
        self.assertEqual(len(lines), 1)
        self.assertTrue(is_isomorphic(parse_graph6(lines[0]), path_graph(4)))
        self.assertIn("1 graphs", err)

    def test_realize_small_k(self):
        """Test that k = 1 has no disconnected graphs."""
        self.assertEqual(self.run_cli("realize", "--k", "1")[:2], (0, "k=1: no disconnected graphs\n"))

    def test_attractor_csv(self):
        """Test the backward orbit of K2 written to a file."""
        path = os.path.join(self.config_dir, "orbit.csv")
        code, out, _ = self.run_cli("attractor", "A_", "--depth", "3", "--out", path)
        self.assertEqual(code, 0)
        self.assertEqual(out, "")
        with open(path) as f:
            rows = f.read().split()
        self.assertEqual(len(rows), 1)
        self.assertAlmostEqual(float(rows[0].split(",")[0]), -1 / 8)

    def test_julia_ppm(self):
        """Test a small raster of P4 written as binary PPM."""
        path = os.path.join(self.config_dir, "p4.ppm")
        code, _, _ = self.run_cli("julia", "Ch", "--out", path, "--width", "8", "--height", "6", "--max-iter", "10")
        self.assertEqual(code, 0)
        with open(path, "rb") as f:
            self.assertTrue(f.read().startswith(b"P6"))

    def test_bad_graph6(self):
        """Test that an invalid graph6 string is a computational error."""
        code, out, err = self.run_cli("ipoly", "C h")
        self.assertEqual(code, 1)
        self.assertEqual(out, "")
        self.assertTrue(err.startswith("indatt:"))

    def test_bad_config(self):
        """Test that an unreadable config file exits with 2."""
        with open(os.path.join(self.config_dir, "config.json"), "w") as f:
            f.write("{not json")
        code, _, err = self.run_cli("ipoly", "Ch")
        self.assertEqual(code, 2)
        self.assertIn("Error loading config", err)

    def test_usage_errors(self):
        """Test that argparse rejects a missing command and an invalid k."""
        with patch("sys.stderr", new_callable=io.StringIO):
            with self.assertRaises(SystemExit) as ctx:
                main([])
            self.assertEqual(ctx.exception.code, 2)
            with self.assertRaises(SystemExit):
                main(["tables", "--k", "5", "--case", "3comp"])


class TestRunTests(unittest.TestCase):
    """Test cases for the test runner."""

    def test_tests_dir_is_absolute(self):
        """Test that discovery does not depend on the working directory."""
        self.assertTrue(os.path.isabs(run_tests.TESTS_DIR))
        self.assertTrue(os.path.samefile(run_tests.TESTS_DIR, os.path.dirname(os.path.abspath(__file__))))


if __name__ == '__main__':
    unittest.main()
