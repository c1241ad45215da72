import json

import pytest

from conftest import DECOMP_GOLDEN, golden_full
from cqschur.cli import main

FIELD = '{"mode":"rational","q":"2","Q":["1","1"]}'


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gram_example(capsys):
    code, out, _ = run(capsys, "gram", "--n", "2", "--r", "2", "--lambda", "0", "--mu", "1", "--symbolic")
    assert code == 0
    doc = json.loads(out)
    assert doc["entries"] == [["q + q^-1"]]
    assert doc["lambda"] == {"index": 0, "weight": [[2, 0], [0, 0]]}
    assert doc["corank"] == 0


def test_gram_literal_weight_and_field(capsys):
    code, out, _ = run(capsys, "gram", "--n", "2", "--r", "2", "--lambda", "[[1,1],[0,0]]",
                       "--mu", "2", "--field", '{"mode":"rational","q":"2","Q":["4","1"]}')
    assert code == 0
    doc = json.loads(out)
    assert doc["lambda"]["index"] == 1
    assert doc["specialized"] == [["0"]]
    assert doc["corank"] == 1


def test_gram_basis_file(capsys, tmp_path):
    path = tmp_path / "basis.json"
    path.write_text(json.dumps([[[[1, 2], 1], [[2, 1], 1], [[1, 1], 1]],
                                [[[2, 1], 1], [[1, 2], 1], [[1, 1], 1]]]))
    code, out, _ = run(capsys, "gram", "--n", "2", "--r", "2", "--lambda", "2", "--mu", "8",
                       "--symbolic", "--basis", str(path))
    assert code == 0
    assert len(json.loads(out)["entries"]) == 2


def test_decomp_first_table(capsys):
    code, out, _ = run(capsys, "decomp", "--n", "2", "--r", "2", "--field", FIELD)
    assert code == 0
    doc = json.loads(out)
    idx = [o["index"] for o in doc["order"]]
    want = golden_full(DECOMP_GOLDEN[0][2])
    for (a, b), v in want.items():
        assert doc["d"][idx.index(a)][idx.index(b)] == v
    assert doc["status"] == "exact"


def test_decomp_latex_and_out(capsys, tmp_path):
    path = tmp_path / "d.json"
    code, out, _ = run(capsys, "decomp", "--n", "2", "--r", "2", "--field", FIELD, "--latex", "--out", str(path))
    assert code == 0 and out == ""
    doc = json.loads(path.read_text())
    assert "\\lambda_{8} & \\lambda_{7}" in doc["latex"]


def test_output_is_byte_identical(capsys):
    a = run(capsys, "decomp", "--n", "2", "--r", "2", "--field", FIELD)[1]
    b = run(capsys, "decomp", "--n", "2", "--r", "2", "--field", FIELD, "--jobs", "2")[1]
    c = run(capsys, "decomp", "--n", "2", "--r", "2", "--field", FIELD)[1]
    assert a == b == c


def test_blocks(capsys):
    code, out, _ = run(capsys, "blocks", "--n", "2", "--r", "2", "--field", FIELD)
    assert code == 0
    got = sorted(sorted(w["index"] for w in b) for b in json.loads(out)["blocks"])
    assert got == [[0, 7], [1, 8], [2]]


def test_eta_schema(capsys):
    code, out, _ = run(capsys, "eta", "--n", "2", "--r", "2")
    assert code == 0
    doc = json.loads(out)
    assert len(doc) == 10 * 3
    assert all(set(e) == {"weight", "pos", "scalar", "words"} for e in doc)
    first = doc[0]
    assert first["weight"] == [[2, 0], [0, 0]] and first["pos"] == [1, 1]
    assert first["scalar"] == "q + q^-1"


def test_check_suite(capsys):
    code, out, _ = run(capsys, "check", "--suite", "all", "--n", "2", "--r", "2")
    assert code == 0
    report = json.loads(out)
    assert report and all(e["pass"] for e in report)
    assert all(set(e) == {"identity", "params", "pass"} for e in report)


@pytest.mark.parametrize("argv,flag", [
    (["decomp", "--n", "2", "--r", "2"], "--field"),
    (["gram", "--n", "2", "--r", "2", "--lambda", "4", "--mu", "5"], "--lambda"),
    (["gram", "--n", "2", "--r", "2", "--lambda", "42", "--mu", "5"], "--lambda"),
    (["eta", "--n", "3", "--r", "3"], "--budget"),
    (["decomp", "--n", "2", "--r", "2", "--field", "{nope"], "--field"),
    (["decomp", "--n", "2", "--r", "2", "--field", FIELD, "--symbolic"], "--symbolic"),
])
def test_usage_errors(capsys, argv, flag):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == ""
    doc = json.loads(err)
    assert doc["error"] == "UsageError"
    assert doc["flag"] == flag


def test_unknown_verb(capsys):
    code, _, err = run(capsys, "plot")
    assert code == 2
    assert json.loads(err)["error"] == "UsageError"


@pytest.mark.parametrize("field,name", [
    ('{"mode":"rational","q":"2","Q":["1"]}', "SizeMismatch"),
    ('{"mode":"rational","q":"0","Q":["1","1"]}', "NonInvertibleQ"),
])
def test_computational_errors(capsys, field, name):
    code, out, err = run(capsys, "decomp", "--n", "2", "--r", "2", "--field", field)
    assert code == 1 and out == ""
    assert json.loads(err)["error"] == name
