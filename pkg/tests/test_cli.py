import json

import pytest

from artinaut.cli import main


@pytest.mark.parametrize("argv, code, out", [
    (["eq", "--type", "A:3", "1 2 1", "2 1 2"], 0, "equal"),
    (["eq", "--type", "A:3", "1 2", "2 1"], 0, "not equal"),
    (["eq", "--type", "A:3/Z", "1", "2"], 0, "not equal"),
    (["eq", "--type", "B:3", "2 3 2 3", "3 2 3 2"], 0, "equal"),
    (["eq", "--type", "I2:5", "1 2 1 2 1", "2 1 2 1 2"], 0, "equal"),
    (["nf", "--type", "Braid:2", "-1"], 0, "inf=-1 factors=[2,3,1]"),
    (["nf", "--type", "A:3", "1 2 3 1 2 1"], 0, "inf=1 factors=-"),
    (["len", "1 2 -3 1"], 0, "2"),
    (["perm", "--type", "A:3", "1 2 3"], 0, "4 1 2 3"),
    (["verify", "--morphism", "embed_B_in_A", "--n", "3"], 0, "ok (3 relations checked)"),
    (["verify", "--morphism", "eta_I2", "--n", "4"], 0, "ok (1 relations checked)"),
    (["tv", "--type", "B:3", "--p", "1", "--q", "-2"], 0, "k=1 automorphism=yes\nTv=Z generators=[(1, -2)]"),
    (["tv", "--comm-seq", "6", "4"], 0, "7 43 1807 3263443"),
])
def test_golden_output(capsys, argv, code, out):
    assert main(argv) == code
    assert capsys.readouterr().out.strip() == out


@pytest.mark.parametrize("argv", [
    ["eq", "--type", "X:3", "1", "1"],
    ["eq", "--type", "A:3", "1 x", "1"],
    ["eq", "--type", "A:3", "5", "1"],
    ["eq", "--type", "F4", "1", "1"],
    ["verify", "--morphism", "nope", "--n", "3"],
    ["verify", "--morphism", "eta_I2", "--n", "5"],
    ["nf", "--type", "B:3", "1"],
    ["tv", "--type", "B:3", "--m", "1"],
    ["tv", "--type", "F4", "--p", "1", "--q", "-1", "--apply", "1"],
    ["report", "--ranks", "2"],
    ["bogus"],
])
def test_usage_errors(capsys, argv):
    assert main(argv) == 2


def test_tv_apply(capsys):
    assert main(["tv", "--type", "I2:4", "--p", "0", "--q", "-1", "--apply", "2"]) == 0
    assert capsys.readouterr().out.splitlines()[-1] == "2 -2 -1 -2 -1"


def test_report_to_file(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["report", "--ranks", "3", "--format", "json", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["summary"] == {"pass": 70, "fail": 0, "skipped": 2}
    assert "70 passed" in capsys.readouterr().out


def test_report_text(capsys):
    assert main(["report", "--ranks", "3"]) == 0
    assert capsys.readouterr().out.splitlines()[-1] == "70 passed, 0 failed, 2 skipped"
