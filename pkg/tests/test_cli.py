import json
import subprocess
import sys

import pytest

from braidforge.cli import main
from braidforge.families import HalfTwistSpec, half_twist_torus_construction
from braidforge.braid import format_braid


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "spec, word",
    [
        ("TTK(3,8;2,1)", "n=3: 1 2 1 2 1 2 1 2 1 2 1 2 1 2 1 2 1 1"),
        ("TB(1,3,2)@3", "n=3: 1 2 1 2"),
        ("TL[(2,1)]", "n=2: 1"),
    ],
)
def test_build(capsys, spec, word):
    code, out, _ = run(capsys, "build", spec)
    assert code == 0
    assert out.splitlines()[0] == word


def test_build_json_and_round_trip(capsys):
    code, out, _ = run(capsys, "build", "--json", "TTK(3,8;2,1)")
    data = json.loads(out)
    assert data["factored"] == "FB@3[(1,3,8),(1,2,2)]"
    code, out, _ = run(capsys, "build", data["factored"])
    assert out.splitlines() == [data["braid"], data["factored"]]
    code, out, _ = run(capsys, "build", data["braid"])
    assert out.splitlines() == [data["braid"], data["factored"]]


def test_build_parse_error(capsys):
    code, _, err = run(capsys, "build", "TTK(3,x")
    assert code == 2
    payload = json.loads(err)["error"]
    assert payload["code"] == "parse_error"
    assert payload["position"] == 6


@pytest.mark.parametrize(
    "flags, spec, expected",
    [
        (["--index"], "TB(1,3,7)@3", '{"braid_index":{"lower":3,"upper":3}}'),
        (["--genus"], "n=2: 1 1 1", '{"genus":1}'),
        (["--alexander"], "n=2: 1", '{"alexander":[[0,1]]}'),
    ],
)
def test_invariants(capsys, flags, spec, expected):
    code, out, _ = run(capsys, "invariants", *flags, spec)
    assert code == 0
    assert out.strip() == expected


def test_invariants_default_is_all(capsys):
    _, out, _ = run(capsys, "invariants", "n=2: 1 1 1")
    assert set(json.loads(out)) == {"homfly", "alexander", "genus", "braid_index"}


def test_invariants_cap_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("BRAIDFORGE_HECKE_CAP", "2")
    code, _, err = run(capsys, "invariants", "--homfly", "n=3: 1 -2 1 -2")
    assert code == 3
    assert json.loads(err)["error"]["code"] == "cap_exceeded"


def test_bad_env_value(capsys, monkeypatch):
    monkeypatch.setenv("BRAIDFORGE_SKEIN_CAP", "-1")
    code, _, err = run(capsys, "invariants", "n=2: 1")
    assert code == 2
    assert json.loads(err)["error"]["code"] == "invalid_env"


@pytest.mark.parametrize(
    "spec, kind, justification",
    [
        ("TTK(3,8;2,1)", "Hyperbolic", "Cor1.3"),
        ("TTK(5,16;2,-1)", "Hyperbolic", "Cor1.4"),
        ("TB(1,3,7)@3", "TorusKnot", "Excluded"),
        ("TL[(3,1),(4,5)]", "Unknown", "Cor1.2"),
    ],
)
def test_classify(capsys, spec, kind, justification):
    code, out, _ = run(capsys, "classify", spec)
    assert code == 0
    verdict = json.loads(out)["verdict"]
    assert (verdict["kind"], verdict["justification"]) == (kind, justification)


def test_classify_link_is_usage_error(capsys):
    code, _, err = run(capsys, "classify", "TL[(2,1),(3,8)]")
    assert code == 2
    assert json.loads(err)["error"]["code"] == "not_a_knot"


def test_equal(capsys):
    code, out, _ = run(capsys, "equal", "n=3: 1 2 1", "n=3: 2 1 2")
    assert code == 0
    assert out.splitlines() == ["equal", "witness: n=3:"]
    code, out, _ = run(capsys, "equal", "n=2: 1", "n=2: -1")
    assert code == 1
    assert out.splitlines() == ["not equal", "witness: n=2: 1 1"]
    code, _, err = run(capsys, "equal", "n=2: 1", "n=3: 1")
    assert code == 2
    assert json.loads(err)["error"]["code"] == "strand_mismatch"


def test_equal_half_twist_construction(capsys):
    word = format_braid(half_twist_torus_construction(HalfTwistSpec(1, 7, 4), 7))
    code, out, _ = run(capsys, "equal", word, "TB(1,7,4)@7")
    assert code == 0


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "braidforge", "build", "TL[(2,3)]"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "n=2: 1 1 1"
