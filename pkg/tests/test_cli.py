from __future__ import annotations

import json
import subprocess
import sys

import pytest

from corpus import TREFOIL_PD
from turaev.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_trefoil_json(capsys):
    code, out, _ = run(capsys, "analyze", "--pd", TREFOIL_PD, "--json")
    assert code == 0
    report = json.loads(out)
    assert report["schema"] == 1
    assert report["sigma"] == -2
    assert report["sigma_method"] == "goeritz+traczyk"
    assert (report["interval_lower"], report["interval_upper"]) == (2, 2)
    assert report["turaev_diagram_genus"] == 0
    assert report["tait_g"]["e_b"] == 3
    assert report["two_tau"] is None


def test_json_round_trip_is_byte_identical(capsys):
    for argv in (
        ["analyze", "--pd", TREFOIL_PD, "--json", "--histogram", "--tau", "1", "--s", "2"],
        ["analyze", "--braid", "s1^5 s2 s1^3 s2", "--json", "--histogram"],
        ["braid3", "--torus", "7", "--json"],
        ["trees", "--braid", "s1 s1 s2 s1^-1 s2 s2 s1 s2^-1 s1 s2", "--json"],
    ):
        code, out, _ = run(capsys, *argv)
        assert code == 0
        text = out.rstrip("\n")
        assert json.dumps(json.loads(text), sort_keys=True, indent=2) == text
        assert "." not in "".join(ch for ch in text if not ch.isalpha())  # no floats


def test_analyze_braid_table(capsys):
    code, out, _ = run(capsys, "analyze", "--braid", "s1 s2^-1 s1 s2^-1", "--strands", "3")
    assert code == 0
    assert "Turaev surface genus" in out
    assert "signature" in out and "goeritz" in out


def test_analyze_supplied_tau_s(capsys):
    code, out, _ = run(capsys, "analyze", "--braid", "s1 s2 s1 s2 s1 s2 s1 s2", "--tau", "3", "--s", "6", "--json")
    report = json.loads(out)
    assert code == 0
    assert report["tau_s_provenance"] == "supplied"
    assert report["two_tau"] == 6 and report["s"] == 6
    assert report["turaev_lower_bound"] == 0


def test_supplied_value_outside_interval(capsys):
    code, _, err = run(capsys, "analyze", "--pd", TREFOIL_PD, "--s", "4")
    assert code == 1
    assert "outside" in err


def test_kinked_input_warns(capsys):
    code, out, _ = run(capsys, "analyze", "--braid", "s1^3 s2", "--json")
    report = json.loads(out)
    assert code == 0
    assert report["sigma"] == -2
    assert any("nugatory" in w for w in report["warnings"])


def test_histogram_table(capsys):
    code, out, _ = run(capsys, "analyze", "--braid", "s1^5 s2 s1^3 s2", "--histogram")
    assert code == 0
    assert "2delta histogram" in out


@pytest.mark.parametrize(
    "argv, fragment",
    [
        (["analyze", "--pd", "X(1,4,2,5),X(3,6,a,1)"], "X(3,6,a,1)"),
        (["analyze", "--braid", "s1 s1", "--strands", "3"], "link"),
        (["analyze"], "required"),
        (["analyze", "--pd", TREFOIL_PD, "--braid", "s1^3"], "either"),
        (["trees", "--pd", TREFOIL_PD, "--max-trees", "1"], "--max-trees"),
        (["braid3", "n=0; type=2; k=4"], "link"),
        (["braid3", "--torus", "6"], "link"),
        (["braid3"], "normal form"),
    ],
)
def test_input_errors_exit_1(capsys, argv, fragment):
    code, _, err = run(capsys, *argv)
    assert code == 1
    assert fragment in err


def test_empty_pd_is_trivial_unknot(capsys):
    code, out, _ = run(capsys, "analyze", "--pd", "", "--json")
    report = json.loads(out)
    assert code == 0
    assert report["c"] == 0 and report["sigma"] == 0 and report["turaev_diagram_genus"] == 0


def test_braid3_commands(capsys):
    code, out, _ = run(capsys, "braid3", "n=0; type=1; pairs=(3,1)", "--verify", "--json")
    report = json.loads(out)
    assert code == 0
    assert report["sigma"] == report["diagram_sigma"] == -2
    code, out, _ = run(capsys, "braid3", "--torus", "7", "--json")
    report = json.loads(out)
    assert (report["two_tau"], report["s"], report["sigma"]) == (12, 12, -8)
    assert report["turaev_genus_candidates"] == [2]
    assert report["turaev_lower_bound"] == 2
    code, out, _ = run(capsys, "braid3", "n=2; type=1; pairs=(1,1)")
    assert code == 0 and "erle" in out


def test_trees_command(capsys):
    code, out, _ = run(capsys, "trees", "--pd", TREFOIL_PD)
    assert code == 0
    assert "total 3 (matrix-tree: 3)" in out
    code, out, _ = run(capsys, "trees", "--braid", "s1^5 s2 s1^3 s2", "--json")
    report = json.loads(out)
    assert report["consistent"]
    lo, hi = report["two_delta_min"], report["two_delta_max"]
    assert (hi - lo) // 2 == 1  # support width equals the Turaev surface genus


def test_cross_check_failure_exits_2(capsys, monkeypatch):
    import turaev.cli as cli

    monkeypatch.setattr(cli, "kirchhoff_tree_count", lambda g: -1)
    code, _, err = run(capsys, "trees", "--pd", TREFOIL_PD)
    assert code == 2
    assert "cross-check" in err


def test_stdin_and_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "turaev", "analyze", "--pd", "-", "--json"],
        input=TREFOIL_PD, capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0, proc.stderr
    assert json.loads(proc.stdout)["sigma"] == -2
