import json

import pytest
from fastapi.testclient import TestClient

from app.cli import parse_e_range, run
from app.main import app


def test_mullineux(capsys):
    assert run(["mull", "--e", "3", "--partition", "3^2,2^2,1"]) == 0
    assert capsys.readouterr().out == "6,4,1\n"


def test_regularise(capsys):
    assert run(["reg", "--e", "3", "--partition", "4,3^3,1^5"]) == 0
    assert capsys.readouterr().out == "5,4,3^2,2,1\n"


def test_strips_as_json(capsys):
    assert run(["strip-j", "--e", "3", "--partition", "10,6^2,4,2", "--json"]) == 0
    assert json.loads(capsys.readouterr().out) == [8, 6, 5, 2]


def test_conjugate_empty(capsys):
    assert run(["conjugate", "--partition", "()"]) == 0
    assert capsys.readouterr().out == "()\n"


def test_rim(capsys):
    assert run(["rim", "--e", "3", "--partition", "10,6^2,4,2", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert (data["r"], data["m"], data["l_prime"]) == (11, 7, 4)
    assert data["rim"][0] == [1, 10]


def test_rim_text(capsys):
    assert run(["rim", "--e", "3", "--partition", "5"]) == 0
    out = capsys.readouterr().out
    assert "r = 3" in out
    assert "e-rim: (1,5) (1,4) (1,3)" in out
    assert "truncated e-rim: (1,4) (1,5)" in out


def test_hooks_text(capsys):
    assert run(["hooks", "--e", "2", "--partition", "3,1"]) == 0
    out = capsys.readouterr().out
    assert "w = 2, z = 0, z_conj = 2" in out
    assert "shallow" in out


def test_lpart(capsys):
    assert run(["lpart", "--e", "3", "--partition", "3,2,1"]) == 0
    assert capsys.readouterr().out == "false\nbad hook: (1,2) a=1 l=1 h=3 neither\n"
    assert run(["lpart", "--e", "2", "--partition", "3,1"]) == 0
    assert capsys.readouterr().out == "true\n"


def test_show_ladders(capsys):
    assert run(["show", "--e", "3", "--annotation", "ladders", "--partition", "4,3^3,1^5"]) == 0
    assert capsys.readouterr().out == "1357\n246\n357\n468\n5\n6\n7\n8\n9\n"


def test_singular_input_is_a_precondition_error(capsys):
    assert run(["mull", "--e", "3", "--partition", "2^3"]) == 2
    assert "e-regular" in capsys.readouterr().err


def test_s_operator_outside_l_partitions(capsys):
    assert run(["s-op", "--e", "3", "--partition", "3,2,1"]) == 2
    assert "L-partition" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ["reg", "--e", "3", "--partition", "3,4"],
        ["reg", "--e", "3", "--partition", "0"],
        ["reg", "--partition", "3,1"],
        ["reg", "--e", "3"],
        ["reg", "--e", "1", "--partition", "3,1"],
        ["check", "--e-range", "1..3"],
        ["frobnicate"],
    ],
)
def test_usage_errors(argv, capsys):
    assert run(argv) == 2
    assert capsys.readouterr().err


def test_check_main(capsys):
    assert run(["check", "--suite", "main", "--max-n", "5", "--e-range", "2..3"]) == 0
    captured = capsys.readouterr()
    reports = json.loads(captured.out)
    assert [(r["check_id"], r["e"]) for r in reports] == [
        ("main", 2), ("main", 3), ("census", 2), ("census", 3),
    ]
    assert all(r["pass"] for r in reports)
    assert len(reports[2]["census"]) == 6
    assert "4/4 reports passed" in captured.err


def test_check_is_deterministic(capsys):
    argv = ["check", "--suite", "identities", "--max-n", "4", "--e-range", "2,4"]
    run(argv)
    first = capsys.readouterr().out
    run(argv)
    assert capsys.readouterr().out == first


@pytest.mark.parametrize(
    "text, expected",
    [("2..6", [2, 3, 4, 5, 6]), ("3,5", [3, 5]), ("4", [4])],
)
def test_parse_e_range(text, expected):
    assert parse_e_range(text) == expected


@pytest.mark.parametrize(
    "command, e, partition",
    [("hooks", "2", "3,1"), ("lpart", "3", "3,2,1"), ("lpart", "2", "3,1"), ("rim", "3", "10,6^2,4,2")],
)
def test_json_matches_the_api(command, e, partition, capsys):
    assert run([command, "--e", e, "--partition", partition, "--json"]) == 0
    printed = json.loads(capsys.readouterr().out)
    served = TestClient(app).post(f"/operators/{command}", json={"partition": partition, "e": int(e)}).json()
    assert printed == served


def test_hooks_json_keys(capsys):
    assert run(["hooks", "--e", "2", "--partition", "3,1", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["hooks"][0]["hook_class"] == "shallow"
    assert run(["lpart", "--e", "3", "--partition", "3,2,1", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["bad_hook"]["node"] == [1, 2]
