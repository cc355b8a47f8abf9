"""The command line: formats, determinism, exit statuses."""

import json

import pytest

from weylbuildings.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# -- happy paths -----------------------------------------------------------------


def test_growth_table(capsys):
    code, out, _ = run(capsys, "growth", "--type", "A1~", "--K", "6")
    assert code == 0
    lines = out.splitlines()
    enumerated = next(l for l in lines if l.startswith("enumerated"))
    closed = next(l for l in lines if l.startswith("closed-form"))
    assert enumerated.split()[1:] == ["1", "2", "2", "2", "2", "2", "2"]
    assert closed.split()[1:] == ["1", "2", "2", "2", "2", "2", "2"]
    assert "all equal: yes" in out


def test_growth_json_deterministic(capsys):
    code1, out1, _ = run(capsys, "growth", "--type", "A2~", "--K", "5", "--format", "json")
    code2, out2, _ = run(capsys, "growth", "--type", "A2~", "--K", "5", "--format", "json")
    assert code1 == code2 == 0
    assert out1 == out2
    data = json.loads(out1)
    assert data["allEqual"] is True
    assert [r["enumerated"] for r in data["rows"]] == [1, 3, 6, 9, 12, 15]


def test_growth_csv_cells(capsys):
    code, out, _ = run(capsys, "growth", "--type", "A1~", "--K", "3", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "k,enumerated,closedForm,equal"
    assert lines[1] == "0,1,1,yes"
    assert lines[2] == "1,2,2,yes"


def test_period_csv_exact_rationals(capsys):
    code, out, _ = run(capsys, "period", "--type", "A1~", "--q", "2", "--K", "4", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "k,partialSum,closedForm,tailBound"
    assert lines[3] == "2,1/2,1/3,1/8"
    assert lines[5] == "4,3/8,1/3,1/8"


def test_period_report(capsys):
    code, out, _ = run(capsys, "period", "--type", "A2~", "--q", "2", "--K", "12")
    assert code == 0
    assert "closed form: 1/3" in out
    assert "truncation certified: yes" in out
    assert "matches partial sum: yes" in out


def test_ball_shell_counts(capsys):
    code, out, _ = run(capsys, "ball", "--n", "3", "--p", "2", "--R", "2")
    assert code == 0
    lines = out.splitlines()
    enumerated = next(l for l in lines if l.startswith("enumerated"))
    assert enumerated.split()[1:] == ["1", "6", "24"]
    assert "all equal: yes" in out


def test_ball_json_contains_adjacency(capsys):
    code, out, _ = run(capsys, "ball", "--n", "2", "--p", "2", "--R", "2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["ball"]["shell_sizes"] == [1, 4, 8]
    assert len(data["ball"]["adjacency"]) == 13
    assert len(data["ball"]["chambers"]) == 13


def test_harmonic_scan(capsys):
    code, out, _ = run(capsys, "harmonic", "--n", "2", "--p", "2", "--R", "4")
    assert code == 0
    assert "defects: 0 nonzero / " in out
    assert "pass: yes" in out


def test_hecke_relations(capsys):
    code, out, _ = run(capsys, "hecke", "--type", "A2~", "--q", "3")
    assert code == 0
    assert "pass: yes" in out
    code, out, _ = run(capsys, "hecke", "--type", "C2~", "--q", "7/2")
    assert code == 0
    assert "pass: yes" in out


def test_boundary_checks(capsys):
    code, out, _ = run(capsys, "boundary", "--p", "2", "--R", "2")
    assert code == 0
    assert "pass: yes" in out
    code, out, _ = run(capsys, "boundary", "--p", "3", "--R", "2", "--seed", "4")
    assert code == 0
    assert "pass: yes" in out


def test_out_writes_file(tmp_path, capsys):
    target = tmp_path / "result.json"
    code, out, _ = run(
        capsys, "growth", "--type", "A1~", "--K", "4", "--format", "json", "--out", str(target)
    )
    assert code == 0
    assert out == ""
    first = target.read_bytes()
    code, _, _ = run(
        capsys, "growth", "--type", "A1~", "--K", "4", "--format", "json", "--out", str(target)
    )
    assert code == 0
    assert target.read_bytes() == first
    assert json.loads(first.decode())["allEqual"] is True


# -- sad paths --------------------------------------------------------------------


def test_bad_label_exits_2(capsys):
    code, _, err = run(capsys, "growth", "--type", "Z9~", "--K", "3")
    assert code == 2
    assert "error" in err


def test_bad_q_exits_2(capsys):
    code, _, err = run(capsys, "period", "--type", "A1~", "--q", "1", "--K", "3")
    assert code == 2
    code, _, err = run(capsys, "hecke", "--type", "A1~", "--q", "zebra")
    assert code == 2


def test_bad_prime_exits_2(capsys):
    code, _, err = run(capsys, "ball", "--n", "2", "--p", "4", "--R", "2")
    assert code == 2
    code, _, err = run(capsys, "ball", "--n", "5", "--p", "2", "--R", "2")
    assert code == 2


def test_unknown_command_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
