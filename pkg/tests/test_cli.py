import json
import subprocess
import sys

import pytest

from virc1.cli import run


def payload(argv):
    status, text = run(argv + ["--json"])
    return status, json.loads(text)


def strip_time(text):
    d = json.loads(text)
    d.pop("wall_time")
    return d


def test_partitions():
    status, d = payload(["partitions", "6", "--count-only"])
    assert status == 0 and d["result"] == 11 and d["status"] == "pass"
    assert payload(["partitions", "0"])[1]["result"] == [[]]
    assert run(["partitions", "-1"])[0] == 2


def test_verify_virasoro():
    status, d = payload(["verify-virasoro", "--q", "0", "--max-mode", "3", "--max-level", "6"])
    assert status == 0
    assert all(c["passed"] for c in d["result"]["commutators"])
    assert {"n": 2, "m": -2, "value": "1/2"} in d["result"]["central_terms"]
    status, _ = payload(["verify-virasoro", "--q", "1/3", "--max-mode", "2", "--max-level", "4"])
    assert status == 0


def test_character():
    _, d = payload(["character", "irrep", "--h", "0", "--order", "4"])
    assert d["result"] == {"offset": "0", "coeffs": [1, 0, 1, 1, 2], "order": 4}
    _, d = payload(["character", "fock", "--q", "1", "--order", "3"])
    assert d["result"] == {"offset": "1/2", "coeffs": [1, 1, 2, 3], "order": 3}
    assert run(["character", "irrep", "--h", "-1", "--order", "3"])[0] == 2
    assert run(["character", "irrep", "--order", "3"])[0] == 2


def test_branch():
    _, d = payload(["branch", "--q", "0", "--order", "25"])
    assert [(c["h"], c["multiplicity"]) for c in d["result"]["components"]] == [
        ("0", 1), ("1", 1), ("4", 1), ("9", 1), ("16", 1), ("25", 1)]
    _, d = payload(["branch", "--q", "1/3", "--order", "10"])
    assert d["result"]["components"] == [{"h": "1/18", "multiplicity": 1}]
    _, d = payload(["branch", "--q", "0", "--order", "0"])
    assert d["result"]["components"] == [{"h": "0", "multiplicity": 1}]


def test_shapovalov():
    _, d = payload(["shapovalov", "--c", "1", "--h", "1/4", "--level", "2"])
    assert d["result"]["levels"][1] == {"level": 2, "determinant": "0", "kernel_dim": 1}
    _, d = payload(["shapovalov", "--c", "1", "--h", "1/3", "--level", "6"])
    assert all(r["determinant"] != "0" for r in d["result"]["levels"])
    _, d = payload(["shapovalov", "--c", "1", "--h", "0", "--level", "1"])
    assert d["result"]["levels"][0]["determinant"] == "0"


def test_lwv():
    assert payload(["lwv", "--q", "0", "--max-level", "10"])[1]["result"]["dims"] == [1, 1, 0, 0, 1, 0, 0, 0, 0, 1, 0]
    assert payload(["lwv", "--q", "1/3", "--max-level", "6"])[1]["result"]["dims"] == [1, 0, 0, 0, 0, 0, 0]
    assert payload(["lwv", "--q", "0", "--max-level", "0"])[1]["result"]["dims"] == [1]


def test_sector():
    _, d = payload(["sector", "verdict", "--h", "1/18"])
    assert d["result"]["dimension"] == {"infinite": True}
    assert len(d["result"]["justification"]) == 3
    assert payload(["sector", "twisted-bound", "--groups", "[[1,1]]"])[1]["result"] == {"finite": "2"}
    assert payload(["sector", "rest-dim", "--index", "inf", "--d", "1"])[1]["result"] == {"infinite": True}
    assert payload(["sector", "mu", "--dims", "[1,1,2]"])[1]["result"] == {"finite": "6"}
    assert payload(["sector", "sub-mu", "--index", "3", "--mu", "2"])[1]["result"] == {"finite": "18"}
    assert run(["sector", "sub-mu", "--index", "inf", "--mu", "2"])[0] == 2
    assert run(["sector", "rest-dim", "--index", "sqrt2", "--d", "1"])[0] == 2
    assert run(["sector", "twisted-bound", "--groups", "[[1,1],[3]]", "--index", "2",
                "--sector-dims", "[1,1]"])[0] == 2


def test_work_cap(monkeypatch):
    assert run(["lwv", "--max-level", "21"])[0] == 2
    assert run(["lwv", "--max-level", "3", "--max-work", "2"])[0] == 2
    monkeypatch.setenv("VIRC1_MAX_WORK", "2")
    assert run(["branch", "--order", "3"])[0] == 2
    assert run(["branch", "--order", "3", "--max-work", "5"])[0] == 0


def test_human_output():
    status, text = run(["sector", "verdict", "--h", "9/4"])
    assert status == 0
    assert "conjectural" in text


@pytest.mark.parametrize("argv", [
    ["branch", "--q", "0", "--order", "16"],
    ["sector", "verdict", "--h", "1/18"],
    ["shapovalov", "--h", "1/4", "--level", "3"],
])
def test_determinism(argv):
    outs = [run(argv + ["--json"])[1] for _ in range(3)]
    assert all(strip_time(o) == strip_time(outs[0]) for o in outs)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "virc1", "partitions", "4", "--count-only"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip().endswith("5")
    proc = subprocess.run([sys.executable, "-m", "virc1", "partitions", "-1"], capture_output=True, text=True)
    assert proc.returncode == 2
