import csv
import io
import json

import pytest

from braidforge.cli import main
from braidforge.errors import InvalidSpecError
from braidforge.sweep import SweepRange, eval_bound, expand_range, rows_to_csv, run_sweep


def test_range_expressions():
    assert expand_range("3..6") == [3, 4, 5, 6]
    assert expand_range("2,3,5") == [2, 3, 5]
    assert expand_range("2..q", {"q": 4}) == [2, 3, 4]
    assert expand_range("2..p-q", {"p": 5, "q": 1}) == [2, 3, 4]
    assert expand_range("2..1") == []
    assert eval_bound("k*p+q", {"p": 3, "q": 2, "k": 2}) == 8
    with pytest.raises(InvalidSpecError):
        eval_bound("__import__('os')", {})
    with pytest.raises(InvalidSpecError):
        eval_bound("2..", {})


def test_points_are_lexicographic():
    pts = list(SweepRange("ttk", "3..5", k="2..3").points())
    keys = [(d["p"], d["q"], d["k"], d["r"]) for d in pts]
    assert keys == sorted(keys)
    assert (3, 2, 2, 2) in keys
    assert all(r <= q for _, q, _, r in keys)


def test_torus_sweep_rows():
    rows = run_sweep(SweepRange("torus", "2..5"), jobs=1)
    assert rows and all(r["kind"] == "TorusKnot" for r in rows)
    assert all(r["torus_match"] == sorted([r["p"], r["q"]]) for r in rows)


def test_negative_twist_sweep_rows():
    rows = run_sweep(SweepRange("ttk", "5", q="1", r="2..4", k="3", s=-1), jobs=1)
    assert [r["spec"] for r in rows] == ["TTK(5,16;2,-1)", "TTK(5,16;3,-1)", "TTK(5,16;4,-1)"]
    assert all((r["kind"], r["justification"]) == ("Hyperbolic", "Cor1.4") for r in rows)


def test_errors_stay_in_their_row():
    rows = run_sweep(SweepRange("tlink", "3", q="2", k="2", r1="2", s1="1..2", form="A"), jobs=1)
    assert [r["spec"] for r in rows] == ["TL[(2,1),(3,8)]", "TL[(2,2),(3,8)]"]
    assert rows[0]["error"]["code"] == "not_a_knot"
    assert rows[1]["kind"] == "Hyperbolic" and rows[1]["error"] is None


def test_csv_layout():
    text = rows_to_csv(run_sweep(SweepRange("torus", "2", q="3"), jobs=1))
    rows = list(csv.DictReader(io.StringIO(text)))
    assert rows[0]["spec"] == "FB@2[(1,2,3)]"
    assert rows[0]["torus_match"] == "2x3"


def test_cli_sweep_is_deterministic_across_job_counts(tmp_path, capsys):
    args = ["sweep", "--family", "ttk", "--p", "3..5", "--k", "2..3", "--s", "1"]
    outputs = []
    for jobs in ("1", "2", "1"):
        path = tmp_path / f"out{len(outputs)}.json"
        assert main(args + ["--jobs", jobs, "--out", str(path)]) == 0
        outputs.append(path.read_bytes())
    assert outputs[0] == outputs[1] == outputs[2]
    rows = json.loads(outputs[0])
    assert rows and all(r["kind"] == "Hyperbolic" for r in rows)
    capsys.readouterr()


def test_cli_sweep_csv_to_stdout(capsys):
    assert main(["sweep", "--family", "torus", "--p", "2..5", "--q", "coprime", "--format", "csv", "--jobs", "1"]) == 0
    out = capsys.readouterr().out
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 15 and {r["kind"] for r in rows} == {"TorusKnot"}
