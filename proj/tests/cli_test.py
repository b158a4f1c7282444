"""End-to-end checks of the bhx command line: outputs, exit codes, round trips."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

BIN = sys.argv[1]
failures = []


def run(*args):
    return subprocess.run([BIN, *args], capture_output=True, text=True, timeout=600)


def expect(name, condition, detail=""):
    print(("ok   " if condition else "FAIL ") + name + (f": {detail}" if detail and not condition else ""))
    if not condition:
        failures.append(name)


with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)

    r = run("gen", "--n", "2", "--out", str(tmp / "bh2.txt"))
    lines = (tmp / "bh2.txt").read_text().splitlines()
    expect("gen writes BH_2", r.returncode == 0 and lines[0] == "c BH n=2" and lines[1] == "p 16 32"
           and len(lines) == 34, r.stderr)

    r = run("lambda", "--n", "2", "--g", "3", "--method", "brute", "--json")
    doc = json.loads(r.stdout)
    expect("lambda brute json", r.returncode == 0 and doc["value"] == 8 and doc["side_u"][0] == "0,0")
    (tmp / "cut.json").write_text(r.stdout)
    r = run("check-witness", str(tmp / "cut.json"))
    expect("cut witness revalidates", r.returncode == 0, r.stdout)

    doc["cut_size"] = 7
    (tmp / "bad.json").write_text(json.dumps(doc))
    expect("tampered cut rejected", run("check-witness", str(tmp / "bad.json")).returncode == 1)

    for g, n in [(9, 5), (10, 6), (11, 6), (12, 7)]:
        r = run("construct", "--n", str(n), "--g", str(g), "--json")
        path = tmp / f"w{g}.json"
        path.write_text(r.stdout)
        w = json.loads(r.stdout)
        check = run("check-witness", str(path))
        expect(f"construct n={n} g={g}", r.returncode == 0 and len(w["vertices"]) == g + 1
               and w["edges"] > 2 * g - 2 and check.returncode == 0)

    r = run("pipeline", "--n", "5", "--g", "9", "--json")
    p = json.loads(r.stdout)
    expect("pipeline (5,9) contingent", r.returncode == 0 and p["verdict"] == "below_conjecture"
           and p["lambda_value"]["high"] == 66 and p["conjecture_value"] == 68 and p["reasons"])
    (tmp / "p.json").write_text(r.stdout)
    expect("pipeline witnesses revalidate", run("check-witness", str(tmp / "p.json")).returncode == 0)

    r = run("lambda", "--n", "3", "--g", "3", "--json")
    doc = json.loads(r.stdout)
    expect("lambda auto uses pipeline at n=3", doc["method"] == "pipeline" and doc["value"] == 16)

    human = run("pipeline", "--n", "3", "--g", "2").stdout
    expect("human and json agree", "lambda_g          14" in human
           and json.loads(run("pipeline", "--n", "3", "--g", "2", "--json").stdout)["lambda_value"] == 14)

    r = run("verify", "--suite", "all", "--max-n", "3")
    expect("verify max-n 3 passes", r.returncode == 0 and "girth 6" in r.stdout, r.stdout[-400:])
    r = run("verify", "--max-n", "2", "--json")
    v = json.loads(r.stdout)
    expect("verify max-n 2 has 9 groups", r.returncode == 0 and v["groups"] == 9 and v["all_pass"])
    r = run("verify", "--max-n", "2", "--budget", "1e-9")
    expect("exhausted budget exits 3", r.returncode == 3 and "skipped" in r.stdout)
    r = run("verify", "--suite", "known-values")
    expect("known values pass", r.returncode == 0 and "FAIL" not in r.stdout)

    a = run("eg", "--n", "3", "--g", "5", "--json").stdout
    b = run("eg", "--n", "3", "--g", "5", "--json").stdout
    expect("reruns byte-identical", a == b and json.loads(a)["upper"] == 8)

    r = run("neighbors", "--vertex", "1,0", "--json")
    expect("neighbors", sorted(json.loads(r.stdout)["neighbors"]) == ["0,0", "0,3", "2,0", "2,3"])

    (tmp / "budget.ini").write_text("budget=1e-9\n")
    r = run("--config", str(tmp / "budget.ini"), "verify", "--max-n", "2")
    expect("config file sets budget", r.returncode == 3)
    r = run("--config", str(tmp / "budget.ini"), "--budget", "600", "verify", "--max-n", "2")
    expect("flag overrides config", r.returncode == 0)

    expect("unknown command exits 2", run("frobnicate").returncode == 2)
    expect("bad flag exits 2", run("lambda", "--n", "2", "--g", "1", "--method", "magic").returncode == 2)
    expect("range check exits 2", run("gen", "--n", "0").returncode == 2)
    expect("bad vertex exits 2", run("neighbors", "--vertex", "5,0").returncode == 2)
    expect("oversized brute force exits 3", run("lambda", "--n", "3", "--g", "2", "--method", "brute").returncode == 3)
    expect("K_{2,g-1} beyond 2n exits 3", run("construct", "--n", "2", "--g", "7", "--kind", "k2-star").returncode == 3)

print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
