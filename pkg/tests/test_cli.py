import json
import os
import subprocess
import sys

import pytest

from cli_capture import GOLDEN, ROOT, capture, load_cases

CASES = load_cases()


@pytest.fixture(autouse=True)
def at_repo_root(monkeypatch):
    monkeypatch.chdir(ROOT)


@pytest.mark.parametrize("case", CASES, ids=[c["name"] for c in CASES])
def test_golden(case):
    code, out, err = capture(case["argv"])
    assert code == case["exit"]
    assert out == (GOLDEN / f"{case['name']}.out").read_text()
    assert err == (GOLDEN / f"{case['name']}.err").read_text()


def test_errors_go_to_stderr_only():
    for case in CASES:
        if case["exit"] >= 2:
            assert (GOLDEN / f"{case['name']}.out").read_text() == ""
            assert (GOLDEN / f"{case['name']}.err").read_text() != ""


def test_repeated_runs_are_identical():
    for case in CASES:
        assert capture(case["argv"]) == capture(case["argv"])


def test_generate_emits_valid_json():
    code, out, _ = capture(["generate", "--lattice", "corpus/c3.json"])
    doc = json.loads(out)
    assert code == 0 and doc["size"] == 4
    assert doc["embedding"]["m"] in {e["name"] for e in doc["elements"]}


def test_counterexample_json_block():
    _, out, _ = capture(["counterexample", "--lattice", "corpus/c4.json"])
    doc = json.loads(out[out.index("\n{") + 1:])
    assert doc["D"] == "C4" and doc["d0"] == "c1"
    assert {r["d"] for r in doc["refutations"]} == {"0", "c1", "c2", "1"}


def test_console_entry_point_in_subprocess():
    env = {**os.environ, "PYTHONIOENCODING": "utf-8"}
    proc = subprocess.run(
        [sys.executable, "-m", "lattice_entailment", "entails", "--lattice",
         "corpus/c3.json", "--algebra", "powerset:1", "--sequent",
         "corpus/seq_top.json", "--witness"],
        cwd=ROOT, capture_output=True, text=True, env=env,
    )
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "entails_top.out").read_text()


def test_max_succedent_flag(tmp_path):
    doc = {"antecedent": [], "succedent": [[x, a] for x in "0m1" for a in ("0", "e1")]}
    path = tmp_path / "big.json"
    path.write_text(json.dumps(doc))
    base = ["entails", "--lattice", "corpus/c3.json", "--algebra", "powerset:1",
            "--sequent", str(path)]
    code, _, err = capture([*base, "--max-succedent", "5"])
    assert code == 2 and "SuccedentTooLarge" in err
    code, out, _ = capture([*base, "--max-succedent", "6"])
    assert code == 0 and out == "entailed: yes\n"
