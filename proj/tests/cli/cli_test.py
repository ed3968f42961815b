"""End-to-end checks of the gtrs command line.

usage: cli_test.py GTRS_BINARY SOURCE_DIR
"""

import json
import shutil
import subprocess
import sys
import tempfile
import unittest
from pathlib import Path

import jsonschema

BINARY = ""
SOURCE = Path()


def run(*args):
    return subprocess.run([BINARY, *map(str, args)], capture_output=True, text=True, timeout=60)


class CliTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.data = SOURCE / "data"
        cls.schema = json.loads((SOURCE / "docs" / "report.schema.json").read_text())

    def validate(self, text):
        doc = json.loads(text)
        jsonschema.validate(doc, self.schema)
        return doc

    def test_cr_of_u(self):
        r = run("decide", "--property", "cr", self.data / "U.trs")
        self.assertEqual(r.returncode, 0)
        self.assertEqual(r.stdout, "CR: NO\n")

    def test_json_of_v(self):
        r = run("decide", "--property", "all", "--format", "json", self.data / "V.trs")
        self.assertEqual(r.returncode, 0)
        doc = self.validate(r.stdout)
        self.assertEqual(doc["verdicts"], {"cr": "YES", "nfp": "YES", "unc": "YES", "unr": "YES"})

    def test_witnesses_and_timings_validate(self):
        r = run("decide", "--format", "json", "--witness", "--timings", self.data / "U.trs")
        doc = self.validate(r.stdout)
        self.assertEqual({doc["witnesses"]["unc"]["s"], doc["witnesses"]["unc"]["t"]}, {"b", "f(b)"})
        self.assertIn("congruence", doc["timings_ms"])

    def test_deterministic_output_is_stable(self):
        args = ("decide", "--format", "json", "--witness", "--timings", "--deterministic",
                self.data / "U.trs")
        first, second = run(*args), run(*args)
        self.assertEqual(first.stdout, second.stdout)
        self.assertNotIn("timings_ms", self.validate(first.stdout))

    def test_text_witness(self):
        r = run("decide", "--property", "unc", "--witness", self.data / "U.trs")
        self.assertEqual(r.stdout.splitlines()[0], "UNC: NO")
        self.assertIn("witness (condition 1)", r.stdout)

    def test_missing_file(self):
        r = run("decide", "missing.trs")
        self.assertEqual(r.returncode, 1)
        self.assertEqual(r.stdout, "")
        self.assertIn("error", r.stderr)

    def test_parse_error_is_an_input_error(self):
        with tempfile.TemporaryDirectory() as d:
            bad = Path(d) / "bad.trs"
            bad.write_text("(VAR x)\n(RULES f(x) -> a)\n")
            r = run("decide", bad)
            self.assertEqual(r.returncode, 1)
            self.assertIn("2:10: variable x in rule 1", r.stderr)

    def test_bad_flags(self):
        self.assertEqual(run("decide", "--property", "wcr", self.data / "U.trs").returncode, 1)
        self.assertEqual(run().returncode, 1)
        self.assertEqual(run("--help").returncode, 0)

    def test_batch(self):
        with tempfile.TemporaryDirectory() as d:
            for name in ("U.trs", "V.trs"):
                shutil.copy(self.data / name, d)
            (Path(d) / "broken.trs").write_text("(RULES a ->")
            (Path(d) / "notes.txt").write_text("ignored")
            r = run("batch", "--format", "json", "--deterministic", "--jobs", 2, d)
            self.assertEqual(r.returncode, 0)
            doc = self.validate(r.stdout)
            self.assertEqual([f["file"] for f in doc["files"]], ["U.trs", "V.trs", "broken.trs"])
            self.assertEqual(doc["files"][0]["verdicts"],
                             {"cr": "NO", "nfp": "NO", "unc": "NO", "unr": "NO"})
            self.assertEqual(doc["files"][2]["error"], "parse error")
            self.assertEqual(doc["summary"]["decided"], 2)
            self.assertEqual(doc["summary"]["failed"], 1)

            text = run("batch", "--deterministic", d)
            self.assertEqual(text.returncode, 0)
            lines = text.stdout.splitlines()
            self.assertEqual(lines[0].split(), ["file", "CR", "NFP", "UNC", "UNR"])
            self.assertEqual(lines[1].split(), ["U.trs", "NO", "NO", "NO", "NO"])
            self.assertEqual(lines[2].split(), ["V.trs", "YES", "YES", "YES", "YES"])
            self.assertIn("parse error", lines[3])

    def test_empty_batch(self):
        with tempfile.TemporaryDirectory() as d:
            r = run("batch", "--format", "json", d)
            self.assertEqual(r.returncode, 0)
            doc = self.validate(r.stdout)
            self.assertEqual(doc["files"], [])

    def test_unreadable_directory(self):
        self.assertEqual(run("batch", "/nonexistent/dir").returncode, 1)

    def test_check_witness(self):
        ok = run("check-witness", "--property", "unc", self.data / "U.trs", "b", "f(b)")
        self.assertEqual(ok.returncode, 0)
        curried = run("check-witness", "--property", "unc", self.data / "U.trs", "b", "f∘b")
        self.assertEqual(curried.returncode, 0)
        bad = run("check-witness", "--property", "unc", self.data / "U.trs", "b", "b")
        self.assertEqual(bad.returncode, 3)
        self.assertTrue(bad.stdout.startswith("rejected:"))
        self.assertEqual(
            run("check-witness", "--property", "cr", self.data / "U.trs", "a", "b").returncode, 0)


if __name__ == "__main__":
    BINARY, SOURCE = sys.argv[1], Path(sys.argv[2])
    unittest.main(argv=sys.argv[:1], verbosity=2)
