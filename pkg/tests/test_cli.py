from __future__ import annotations

import json
import subprocess
import sys

import pytest

from rrcyclic.cli import EXIT_BUDGET, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def _json_tail(text):
    return json.loads(text[text.index("{"):])


def test_construct(capsys):
    code, out, _ = run(capsys, "construct", "--family", "T32", "--q", "4", "--m", "2")
    assert code == EXIT_OK and out.startswith("[30,26,3]_4")
    d = _json_tail(out)
    assert d["N"] == 30 and d["K"] == 26 and d["verdict"]["optimality"] == "DistanceOptimal"


def test_construct_out_of_range_flag(capsys):
    code, out, _ = run(capsys, "construct", "--family", "T42", "--m", "4")
    assert code == EXIT_OK and "outside the family's hypotheses" in out


def test_deltah(capsys):
    code, out, _ = run(capsys, "deltah", "--m", "7")
    assert code == EXIT_OK and out.startswith("h=9, delta=19")
    code, out, _ = run(capsys, "deltah", "--m", "11")
    d = _json_tail(out)
    assert "lambda" in d and "lower_bound" in d


def test_bounds(capsys):
    code, out, _ = run(capsys, "bounds", "--n", "30", "--k", "26", "--d", "3", "--q", "4")
    assert code == EXIT_OK and out.startswith("DistanceOptimal via fu")


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--family", "T71", "--m", "3")
    assert code == EXIT_OK and "computed [14,7,4]" in out
    code, out, _ = run(capsys, "verify", "--family", "T41", "--m", "5", "--budget", "5")
    assert code == EXIT_BUDGET


def test_mindist(capsys, tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"q": 2, "N": 7, "generator": [1, 1, 0, 1]}))
    code, out, _ = run(capsys, "mindist", "--code", str(path))
    assert code == EXIT_OK and _json_tail(out)["distance"]["low"] == 3
    code, out, err = run(capsys, "mindist", "--code", str(path), "--budget", "5")
    assert code == EXIT_BUDGET and "budget exhausted" in err
    code, _, err = run(capsys, "mindist", "--code", str(tmp_path / "missing.json"))
    assert code == EXIT_USAGE and "cannot read" in err
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"q": 2, "N": 7, "generator": [1, 0, 1]}))
    code, _, err = run(capsys, "mindist", "--code", str(bad))
    assert code == EXIT_USAGE and "does not divide" in err


def test_cosets(capsys):
    code, out, _ = run(capsys, "cosets", "--q", "2", "--n", "7")
    assert out.splitlines() == ["0: 0", "1: 1 2 4", "3: 3 5 6"]
    code, _, err = run(capsys, "cosets", "--q", "2", "--n", "6")
    assert code == EXIT_USAGE


def test_table1_formats(capsys, tmp_path):
    code, out, _ = run(capsys, "table1")
    assert code == EXIT_OK and len(out.splitlines()) == 29
    dest = tmp_path / "t.md"
    code, out, _ = run(capsys, "table1", "--format", "markdown", "--out", str(dest))
    assert code == EXIT_OK and out == "" and dest.read_text().startswith("| q |")


def test_usage_errors(capsys):
    code, _, err = run(capsys, "construct", "--family", "T51", "--m", "5")
    assert code == EXIT_USAGE and "error:" in err
    with pytest.raises(SystemExit) as exc:
        main(["construct", "--family", "T99", "--m", "3"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        main(["verify", "--family", "T31", "--m", "4", "--budget", "-3"])


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "rrcyclic.cli", "deltah", "--m", "5"], capture_output=True,
                         text=True)
    assert out.returncode == 0 and out.stdout.startswith("h=3, delta=5")
