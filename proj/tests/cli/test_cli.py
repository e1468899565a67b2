"""End-to-end tests of the genherm executable: exit codes, schemas, determinism."""

import csv
import io
import json
import os
import subprocess
import sys
import tempfile
import unittest
from pathlib import Path

import jsonschema

BINARY = os.environ["GENHERM_BIN"]
SCHEMAS = Path(os.environ["GENHERM_SCHEMAS"])


def run(*args, env=None):
    full_env = {k: v for k, v in os.environ.items() if not k.startswith("GENHERM_") or k in ("GENHERM_BIN", "GENHERM_SCHEMAS")}
    full_env.update(env or {})
    return subprocess.run([BINARY, *args], capture_output=True, text=True, env=full_env, timeout=600)


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


def validated(name, text):
    doc = json.loads(text)
    jsonschema.validate(doc, schema(name))
    return doc


class Transform(unittest.TestCase):
    def test_index_zero_human(self):
        r = run("transform", "--n", "0", "--mu", "0")
        self.assertEqual(r.returncode, 0)
        self.assertIn("2^{s/2-1}·Γ(s/2)·[1]", r.stdout)

    def test_index_two_factored(self):
        r = run("transform", "--n", "2", "--mu", "1/3")
        self.assertEqual(r.returncode, 0)
        self.assertIn("(3/5)(1 - 2s)", r.stdout)

    def test_index_four_json(self):
        r = run("transform", "--n", "4", "--mu", "0", "--format", "json")
        self.assertEqual(r.returncode, 0)
        doc = validated("transform", r.stdout)
        self.assertEqual(doc["phat"]["coefficients"], ["1", "-4/3", "4/3"])
        self.assertEqual(doc["phat"]["rendered"], "4/3*s^2 - 4/3*s + 1")

    def test_schema_over_small_grid(self):
        for n in range(0, 9):
            for mu in ("-1/4", "0", "7/2"):
                r = run("transform", "--n", str(n), "--mu", mu, "--format", "json")
                self.assertEqual(r.returncode, 0)
                validated("transform", r.stdout)

    def test_bad_parameters(self):
        self.assertEqual(run("transform", "--n", "-1", "--mu", "0").returncode, 2)
        self.assertEqual(run("transform", "--n", "2", "--mu", "0.5").returncode, 2)
        self.assertEqual(run("transform", "--n", "2", "--mu", "-1/2").returncode, 2)
        self.assertEqual(run("transform", "--n", "2", "--mu", "0,1").returncode, 2)
        self.assertEqual(run("transform", "--n", "2").returncode, 2)


class Zeros(unittest.TestCase):
    def test_inverse_root_two(self):
        r = run("zeros", "--n", "4", "--mu", "0", "--digits", "8", "--format", "json")
        self.assertEqual(r.returncode, 0)
        doc = validated("zeros", r.stdout)
        self.assertEqual(doc["zeros_t"], ["0.70710678"])
        self.assertTrue(doc["symmetric"])
        self.assertTrue(doc["certified"])

    def test_constant_factor(self):
        r = run("zeros", "--n", "1", "--mu", "1/2", "--format", "json")
        self.assertEqual(r.returncode, 0)
        doc = validated("zeros", r.stdout)
        self.assertEqual(doc["all_t"], [])
        self.assertTrue(doc["certified"])

    def test_thirteen(self):
        r = run("zeros", "--n", "13", "--mu", "7/2", "--format", "json")
        self.assertEqual(r.returncode, 0)
        doc = validated("zeros", r.stdout)
        self.assertEqual(len(doc["all_t"]), 6)
        self.assertTrue(doc["certified"])

    def test_csv_header(self):
        r = run("zeros", "--n", "6", "--mu", "1/3", "--format", "csv")
        self.assertEqual(r.returncode, 0)
        rows = list(csv.reader(io.StringIO(r.stdout)))
        self.assertEqual(rows[0], ["n", "mu", "t", "digits"])
        self.assertEqual(len(rows) - 1, 3)


class Verify(unittest.TestCase):
    def test_trivial_mellin(self):
        r = run("verify", "--suite", "mellin", "--nmax", "0", "--format", "json")
        self.assertEqual(r.returncode, 0)
        doc = validated("verify", r.stdout)
        self.assertEqual(doc["summary"]["failed"], 0)

    def test_boundary_adjacent_mu(self):
        r = run("verify", "--suite", "critline", "--nmax", "24", "--mu", "-1/4", "--format", "json")
        self.assertEqual(r.returncode, 0)
        doc = validated("verify", r.stdout)
        self.assertGreater(doc["summary"]["passed"], 0)

    def test_all_suites(self):
        r = run("verify", "--suite", "all", "--nmax", "24", "--mu", "0,1/3,1/2,1,7/2", "--format", "json")
        self.assertEqual(r.returncode, 0, r.stdout[-2000:])
        doc = validated("verify", r.stdout)
        self.assertGreater(doc["summary"]["checks"], 1000)
        self.assertEqual(doc["summary"]["failed"], 0)
        self.assertEqual(doc["config"]["mu"], ["0", "1/3", "1/2", "1", "7/2"])

    def test_csv_and_human(self):
        r = run("verify", "--suite", "critline", "--nmax", "6", "--format", "csv")
        self.assertEqual(r.returncode, 0)
        self.assertEqual(r.stdout.splitlines()[0], "group,id,params,outcome,witness")
        r = run("verify", "--suite", "critline", "--nmax", "6")
        self.assertEqual(r.returncode, 0)
        self.assertIn("0 failed", r.stdout)

    def test_usage_errors(self):
        self.assertEqual(run("verify", "--suite", "nope").returncode, 2)
        self.assertEqual(run("verify", "--nmax", "-1").returncode, 2)
        self.assertEqual(run("verify", "--mu", "1/3,0.25").returncode, 2)
        self.assertEqual(run("verify", "--format", "xml").returncode, 2)
        self.assertEqual(run("verify", "--digits", "0").returncode, 2)
        self.assertEqual(run("verify", "--precision", "64", "--suite", "oracle").returncode, 2)
        self.assertEqual(run().returncode, 2)

    def test_environment_overrides(self):
        r = run("verify", "--suite", "mellin", "--nmax", "2", "--format", "json",
                env={"GENHERM_JOBS": "3", "GENHERM_PRECISION": "256"})
        doc = validated("verify", r.stdout)
        self.assertEqual(doc["config"]["jobs"], 3)
        self.assertEqual(doc["config"]["precision_bits"], 256)
        r = run("verify", "--suite", "mellin", "--nmax", "2", "--format", "json", "--jobs", "2",
                env={"GENHERM_JOBS": "3"})
        self.assertEqual(json.loads(r.stdout)["config"]["jobs"], 2)
        self.assertEqual(run("verify", "--nmax", "2", env={"GENHERM_JOBS": "many"}).returncode, 2)


class Table(unittest.TestCase):
    def test_small_csv(self):
        with tempfile.TemporaryDirectory() as d:
            out = Path(d) / "z.csv"
            r = run("table", "--nmax", "8", "--mu", "0", "--out", str(out))
            self.assertEqual(r.returncode, 0)
            rows = list(csv.reader(out.open()))
        self.assertEqual(rows[0], ["n", "mu", "t", "digits"])
        self.assertEqual(sorted({int(row[0]) for row in rows[1:]}), [2, 3, 4, 5, 6, 7, 8])
        per_n = {}
        for row in rows[1:]:
            per_n[int(row[0])] = per_n.get(int(row[0]), 0) + 1
        self.assertEqual(per_n, {n: n // 2 for n in range(2, 9)})

    def test_header_only(self):
        r = run("table", "--nmax", "1", "--mu", "1/2")
        self.assertEqual(r.returncode, 0)
        self.assertEqual(r.stdout, "n,mu,t,digits\n")

    def test_json_schema(self):
        r = run("table", "--nmax", "10", "--format", "json")
        self.assertEqual(r.returncode, 0)
        doc = validated("table", r.stdout)
        self.assertEqual(doc["uncertified"], [])
        keys = [(row["n"], doc["mu"].index(row["mu"])) for row in doc["rows"]]
        self.assertEqual(keys, sorted(keys))

    def test_byte_identical(self):
        with tempfile.TemporaryDirectory() as d:
            outputs = []
            for jobs in ("1", "1", "4", "7"):
                out = Path(d) / f"t{len(outputs)}.csv"
                r = run("table", "--nmax", "24", "--jobs", jobs, "--out", str(out))
                self.assertEqual(r.returncode, 0)
                outputs.append(out.read_bytes())
        self.assertTrue(all(o == outputs[0] for o in outputs))
        self.assertGreater(len(outputs[0]), 1000)
        serial = run("table", "--nmax", "12", "--format", "json", "--jobs", "1")
        threaded = run("table", "--nmax", "12", "--format", "json", "--jobs", "5")
        self.assertEqual(serial.stdout, threaded.stdout)

    def test_io_error(self):
        r = run("table", "--nmax", "2", "--out", "/nonexistent-dir/z.csv")
        self.assertEqual(r.returncode, 3)
        with tempfile.TemporaryDirectory() as d:
            self.assertEqual(run("table", "--nmax", "2", "--out", d).returncode, 3)

    def test_human_rejected(self):
        self.assertEqual(run("table", "--nmax", "2", "--format", "human").returncode, 2)


if __name__ == "__main__":
    unittest.main(verbosity=2)
