"""End-to-end checks of the hurwitz executable: outputs, formats and exit codes."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

exe, data = sys.argv[1], Path(sys.argv[2])
failures = 0


def run(*args):
    return subprocess.run([exe, *map(str, args)], capture_output=True, text=True)


def check(name, cond, detail=""):
    global failures
    print(("ok   " if cond else "FAIL ") + name + ("" if cond else ": " + detail))
    failures += not cond


r = run("classes", "--group", data / "s4.json")
check("classes exits 0", r.returncode == 0, r.stderr)
check("S4 has 5 classes", len(json.loads(r.stdout)["classes"]) == 5, r.stdout[:200])

r = run("subgroups", "--group", data / "d4.json")
check("subgroups exits 0", r.returncode == 0, r.stderr)

r = run("components", "--group", data / "s3.json", "-n", 8)
check("components exits 0", r.returncode == 0, r.stderr)
report = json.loads(r.stdout)
check("S3 totals", report["totals"] == [1, 0, 3, 0, 4, 0, 4, 0, 4], str(report["totals"]))

with tempfile.TemporaryDirectory() as tmp:
    out = Path(tmp) / "hf.csv"
    r = run("components", "--group", data / "s3.json", "-n", 6, "--format", "csv", "--out", out)
    check("csv to file", r.returncode == 0 and out.read_text().startswith("degree,subgroup"), r.stderr)

r = run("growth", "--group", data / "s4.json", "-n", 12, "--subgroup", 0)
check("growth exits 0", r.returncode == 0, r.stderr)

r = run("spectrum", "--symmetric", 4)
check("spectrum --symmetric", r.returncode == 0 and json.loads(r.stdout)["proj"] == {"points": 11, "lines": 3},
      r.stdout[:300] + r.stderr)

r = run("spectrum", "--symmetric", 3, "--dot")
check("spectrum dot", r.returncode == 0 and "graph" in r.stdout, r.stderr)

r = run("sym", "--d", 4, "-n", 12, "--check-formula")
check("sym formula", r.returncode == 0 and json.loads(r.stdout)["formula"]["mismatches"] == 0, r.stderr)

r = run("verify", "--group", data / "q8.json", "-n", 3, "--braid-samples", 200, "--lemma-samples", 20, "--workers", 2)
check("verify q8", r.returncode == 0 and json.loads(r.stdout)["passed"], r.stderr)

r = run("verify", "--group", data / "s4.json", "-n", 8, "--braid-samples", 200, "--lemma-samples", 20)
statuses = {c["name"]: c["status"] for c in json.loads(r.stdout)["checks"]} if r.returncode == 0 else {}
check("verify s4 runs every check", r.returncode == 0 and set(statuses.values()) == {"passed"}, r.stderr)

r = run("components", "--group", data / "s4.json", "-n", 6, "--max-group-order", 10)
err = r.stderr.strip().splitlines()
check("cap exceeded exits 3", r.returncode == 3 and err and json.loads(err[-1])["error"] == "cap_exceeded",
      f"{r.returncode} {r.stderr}")

r = run("components", "--group", data / "missing.json")
check("missing file exits 2", r.returncode == 2, str(r.returncode))

r = run("bogus")
check("unknown subcommand exits 2", r.returncode == 2, str(r.returncode))

sys.exit(1 if failures else 0)
