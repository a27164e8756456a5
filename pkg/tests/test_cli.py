import json

import pytest

from prolkb.cli import run
from prolkb.lkb import sigma_matrix
from prolkb.matrix import matrix_from_json, matrix_to_json


def call(capsys, *argv):
    code = run(list(argv))
    return code, capsys.readouterr().out


def test_gen(capsys):
    code, out = call(capsys, "gen", "--n", "4", "--i", "2")
    assert code == 0
    data = json.loads(out)
    assert data["n"] == 4 and len(data["keys"]) == 6
    cell = [e for e in data["entries"] if e[0] == [0, 2, 0] and e[1] == [0, 2, 0]]
    assert cell[0][2] == {"terms": [{"coeff": "-1", "v": [1, 1], "c": 1}]}
    # round trip is byte-identical
    again = json.dumps(matrix_to_json(matrix_from_json(data), 4), separators=(",", ":"))
    assert again + "\n" == out
    assert matrix_from_json(data) == sigma_matrix(4, 2)


def test_gen_latex_and_layer(capsys):
    code, out = call(capsys, "gen", "--n", "3", "--i", "1", "--format", "latex")
    assert code == 0 and "\\begin{array}" in out
    code, out = call(capsys, "gen", "--n", "3", "--i", "1", "--ring", "layer:2")
    assert code == 0 and json.loads(out)["ring"]["name"] == "Q2"


def test_word(capsys):
    code, out = call(capsys, "word", "--n", "3", "1 -1")
    data = json.loads(out)
    assert code == 0
    assert sorted(tuple(e[0]) for e in data["entries"]) == sorted(tuple(k) for k in data["keys"])


def test_verify(capsys):
    code, out = call(capsys, "verify", "--n", "5")
    assert code == 0 and json.loads(out)["all_pass"]
    code, out = call(capsys, "verify", "--n", "4", "--ring", "layer:3")
    assert code == 0 and json.loads(out)["all_pass"]


def test_eq(capsys):
    code, out = call(capsys, "eq", "--n", "3", "1 2 1", "2 1 2")
    assert code == 0 and json.loads(out)["equal"] is True
    code, out = call(capsys, "eq", "--n", "3", "1", "2")
    assert code == 1 and json.loads(out)["equal"] is False


def test_rank(capsys):
    code, out = call(capsys, "rank", "--n", "5", "--k", "3")
    data = json.loads(out)
    assert code == 0 and data["rank"] == 20 == len(data["basis"])


def test_tower_check(capsys):
    code, out = call(capsys, "tower-check", "--n", "3", "--rmax", "4")
    assert code == 0 and json.loads(out)["all_pass"]


def test_lcs(capsys):
    code, out = call(capsys, "lcs", "--preset", "layer:4", "--depth", "5")
    data = json.loads(out)
    assert code == 0 and data["nilpotency_class"] == 3
    code, out = call(capsys, "lcs", "--preset", "zxz", "--depth", "3")
    data = json.loads(out)
    assert data["nilpotency_class"] == "exceeds max_depth"
    assert [layer["lattice"] for layer in data["layers"]] == [[[1]], [[2]], [[4]]]


def test_counterexample(capsys):
    code, out = call(capsys, "counterexample", "--rmax", "6")
    data = json.loads(out)
    assert code == 0 and [row["support_size"] for row in data["layers"]] == [2, 3, 4, 5, 6]


@pytest.mark.parametrize("argv", [
    ["gen", "--n", "4", "--i", "4"],
    ["gen", "--n", "2", "--i", "1"],
    ["word", "--n", "3", "1 x"],
    ["word", "--n", "3", "3"],
    ["verify", "--n", "4", "--ring", "layer:1"],
    ["rank", "--n", "1", "--k", "2"],
    ["lcs", "--preset", "nope", "--depth", "2"],
    ["counterexample", "--rmax", "2"],
    ["tower-check", "--n", "3", "--rmax", "2"],
    ["gen", "--n", "4", "--i", "1", "--bogus"],
    [],
])
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as info:
        run(argv)
    assert info.value.code == 2


def test_repeat_runs_identical(capsys):
    outs = {call(capsys, "word", "--n", "4", "1 -2 3 2")[1] for _ in range(3)}
    assert len(outs) == 1
