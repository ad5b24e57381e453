# encoding: utf-8
"""
Unit tests for pyGentle/cli.py
$Id$
"""

import io
import json
import os
import shutil
import tempfile
import unittest
from pyGentle import cli
from quivertests import DATA

RUNNING_FILE = os.path.join(DATA, "running.quiver")
Z = "(d,3,2)(e,2,1)(f,1,0)(c,0,1)(b,1,2)(a,2,3)"
V3 = "(a,-1,0)(c,0,1)(b,1,2)"
W10 = "(e,2,3)(d,3,4)(a,4,3)(b,3,2)(d*c,2,1)(e,1,0)(f,0,-1)(c,-1,0)(b,0,1)(a,1,2)"
SMALL = ["--max-letters", "1", "--window", "0", "0"]


def run(*argv):
    out = io.StringIO()
    code = cli.run(list(argv), stdout=out)
    return code, out.getvalue()


# ==============================================================================
class CheckTest(unittest.TestCase):

    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def test_running_example(self):
        self.assertEqual(run("check", RUNNING_FILE), (0, "gentle: OK, |C(Λ)|=6\n"))

    def test_not_gentle(self):
        filename = os.path.join(self.directory, "loop.quiver")
        with open(filename, "w") as f:
            f.write("vertices: 0\narrow a: 0 -> 0\n")
        self.assertEqual(run("check", filename)[0], cli.EXIT_DOMAIN)

    def test_missing_file(self):
        self.assertEqual(run("check", os.path.join(self.directory, "nothing.quiver"))[0], cli.EXIT_DOMAIN)


# ==============================================================================
class UsageTest(unittest.TestCase):

    def test_no_command(self):
        self.assertEqual(run()[0], cli.EXIT_USAGE)

    def test_bad_option_values(self):
        self.assertEqual(run("table", RUNNING_FILE, "--max-letters", "0")[0], cli.EXIT_USAGE)
        self.assertEqual(run("table", RUNNING_FILE, "--window", "2", "1")[0], cli.EXIT_USAGE)
        self.assertEqual(run("table", RUNNING_FILE, "--processes", "0")[0], cli.EXIT_USAGE)

    def test_config_defaults(self):
        config = cli.RunConfig()
        self.assertEqual(config.window, (-1, 1))
        self.assertEqual(config.max_letters, 3)
        self.assertEqual(config.problems(), [])


# ==============================================================================
class MorphismCommandTest(unittest.TestCase):

    def test_homdim(self):
        self.assertEqual(run("homdim", RUNNING_FILE, V3, W10), (0, "2\n"))

    def test_homdim_with_oracle(self):
        self.assertEqual(run("homdim", RUNNING_FILE, V3, W10, "--oracle"), (0, "2\n"))

    def test_homdim_rational(self):
        self.assertEqual(run("homdim", RUNNING_FILE, V3, W10, "--field", "rational"), (0, "2\n"))

    def test_bad_word(self):
        self.assertEqual(run("homdim", RUNNING_FILE, "(q,0,1)", W10)[0], cli.EXIT_DOMAIN)

    def test_basis_json(self):
        code, text = run("basis", RUNNING_FILE, V3, W10, "--format", "json")
        self.assertEqual(code, 0)
        document = json.loads(text)
        self.assertEqual(document["data"]["dimension"], 2)
        self.assertEqual(document["metadata"]["algebra"], RUNNING_FILE)

    def test_basis_table(self):
        code, text = run("basis", RUNNING_FILE, V3, W10)
        rows = [line.split("\t") for line in text.splitlines() if not line.startswith("#")]
        self.assertEqual(len(rows), 2)
        self.assertEqual([row[0] for row in rows], ["0", "1"])

    def test_unfold(self):
        code, text = run("unfold", RUNNING_FILE, Z + "@lambda=2")
        self.assertEqual(code, 0)
        self.assertTrue(text.startswith("digraph"))


# ==============================================================================
class SweepCommandTest(unittest.TestCase):

    def test_table(self):
        code, text = run("table", RUNNING_FILE, "--oracle", *SMALL)
        self.assertEqual(code, 0)
        rows = [line.split("\t") for line in text.splitlines() if not line.startswith("#")]
        self.assertEqual(len(rows), 25)
        for source, target, dim, oracle_dim in rows:
            self.assertEqual(dim, oracle_dim)

    def test_table_json(self):
        code, text = run("table", RUNNING_FILE, "--format", "json", *SMALL)
        records = json.loads(text)["data"]
        self.assertEqual(len(records), 25)
        self.assertEqual(sorted(records[0]), ["dim", "oracle_dim", "source", "target"])

    def test_oracle_compare(self):
        self.assertEqual(run("oracle-compare", RUNNING_FILE, "--sample", "3", *SMALL)[0], 0)

    def test_processes(self):
        serial = run("table", RUNNING_FILE, *SMALL)
        parallel = run("table", RUNNING_FILE, "--processes", "2", *SMALL)
        self.assertEqual(serial, parallel)

    def test_bands(self):
        code, text = run("bands", RUNNING_FILE, Z, "--lambdas", "2", "--dims", "1", "2", "--shifts", "0")
        self.assertEqual(code, 0)
        rows = [line.split("\t") for line in text.splitlines() if not line.startswith("#")]
        self.assertEqual(len(rows), 4)
        self.assertEqual([row[:2] for row in rows], [["1", "1"], ["1", "2"], ["2", "1"], ["2", "2"]])

    def test_ar(self):
        code, text = run("ar", RUNNING_FILE, *SMALL)
        self.assertEqual(code, 0)
        self.assertTrue("# table = ar" in text)

    def test_ar_json(self):
        code, text = run("ar", RUNNING_FILE, "--format", "json", *SMALL)
        traces = json.loads(text)["data"]
        self.assertEqual(len(traces), 2 * 5)


# ==============================================================================
class DiscreteCommandTest(unittest.TestCase):

    def test_algebra_text(self):
        code, text = run("discrete", "1", "2", "1")
        self.assertEqual(code, 0)
        self.assertTrue(text.startswith("# Lambda(1,2,1)"))

    def test_invalid_parameters(self):
        self.assertEqual(run("discrete", "2", "1", "0")[0], cli.EXIT_DOMAIN)

    def test_table(self):
        self.assertEqual(run("discrete", "1", "2", "0", "--table", "--oracle", *SMALL)[0], 0)


if __name__ == "__main__":
    unittest.main()
