import json

import pytest

import critgraph.harness as harness
from critgraph.cli import main, parse_n
from critgraph.harness import CheckResult


def test_parse_n():
    assert parse_n("7") == (7,)
    assert parse_n("2-4") == (2, 3, 4)


def test_classify(capsys):
    assert main(["classify", "Dhc"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["class"] == "ThreeGtCritical(diam=2)"


def test_check_writes_output_and_passes(tmp_path, capsys):
    out = tmp_path / "v.jsonl"
    rc = main(["check", "--checks", "duality,trichotomy", "--n", "2-5", "--output", str(out)])
    assert rc == 0
    assert len(out.read_text().splitlines()) == 2 + 4 + 11 + 34
    summary = json.loads(capsys.readouterr().err)
    assert summary["exit_code"] == 0


def test_check_reports_violation(monkeypatch, capsys):
    monkeypatch.setitem(harness._CHECK_FUNCS, "duality", lambda ctx: CheckResult("fail", ["planted"]))
    assert main(["check", "--checks", "duality", "--n", "3"]) == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "--checks", "bogus", "--n", "4"],
        ["check", "--checks", "duality"],
        ["scan", "--n", "4", "--filter", "colour=red"],
        ["classify", "ZZZ!"],
        ["frobnicate"],
        ["check", "--n", "x"],
    ],
)
def test_usage_errors_exit_two(argv, capsys):
    assert main(argv) == 2


def test_scan_with_filter(capsys):
    assert main(["scan", "--n", "7", "--filter", "class=3gt,kappa=2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 4
    assert all(json.loads(line)["connectivity"] == 2 for line in lines)


def test_cuts_and_assoc(capsys):
    assert main(["cuts", "Dhc", "--min-size", "2"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 5
    assert main(["assoc", "Dhc", "--partition", "0,1,2"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["entries"] == [[[0, 2], [0, 4]]]


def test_explain(capsys):
    assert main(["explain", "C~", "--check", "conjecture"]) == 0
    assert "diameter 1" in capsys.readouterr().out


def test_csv_summary_file(tmp_path, capsys):
    p = tmp_path / "s.csv"
    assert main(["check", "--checks", "conjecture", "--n", "5", "--summary-csv", str(p)]) == 0
    assert "total,scanned,34" in p.read_text()
