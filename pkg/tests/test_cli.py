import json

import main
from src.config.settings import config

M1 = '{"level":1,"terms":[{"coef":"1","index":[[1]]}]}'


def run_json(capsys, *argv):
    code = main.run(list(argv))
    out = capsys.readouterr().out
    assert code == 0, out
    return json.loads(out)


def test_multiply(capsys):
    record = run_json(capsys, "mul", "--in", M1, "--in", M1)
    assert record == {
        "level": 1,
        "algebra": "QSym",
        "basis": "M",
        "terms": [{"coef": "1", "index": [[2]]}, {"coef": "2", "index": [[1], [1]]}],
    }


def test_multiply_pretty(capsys):
    assert main.run(["mul", "--in", M1, "--in", M1, "--pretty"]) == 0
    assert capsys.readouterr().out.strip() == "M[[2]] + 2*M[[1],[1]]"


def test_comultiply_in_another_basis(capsys):
    record = run_json(capsys, "comul", "--in", M1, "--basis", "F")
    assert record["basis"] == "F"
    assert len(record["terms"]) == 2


def test_named_element(capsys):
    record = run_json(capsys, "convert", "--family", "h", "--index", "[2]", "--level", "1")
    assert {term["coef"] for term in record["terms"]} == {"1"}
    assert [term["index"] for term in record["terms"]] == [[[2]], [[1], [1]]]


def test_pair(capsys):
    t = '{"level":1,"algebra":"NSym","basis":"S","terms":[{"index":[[2]]}]}'
    a = '{"level":1,"basis":"F","terms":[{"index":[[2]]}]}'
    assert run_json(capsys, "pair", "--in", t, "--in", a) == {"value": 1}


def test_eval_functional(capsys):
    record = run_json(capsys, "eval-functional", "--name", "nu-k", "--k", '["inf"]', "--in", M1)
    assert record == {"functional": "nu-k", "value": 2}


def test_hilbert_series_of_the_odd_subalgebra(capsys):
    record = run_json(capsys, "hilbert", "--level", "1", "--max-weight", "6")
    assert record["weight_graded"] == [1, 1, 1, 2, 3, 5, 8]
    assert record["mode"] == "both"
    assert record == run_json(capsys, "subalg", "hilbert", "--level", "1", "--max-weight", "6")


def test_subalgebra_basis(capsys):
    record = run_json(capsys, "subalg", "basis", "--k", '["inf"]', "--degree", "[4]")
    assert record["dimension"] == 3
    assert record["basis"] == "P"


def test_poset_flag_vector(capsys, diamond_json):
    assert run_json(capsys, "poset", "flag", "--in", diamond_json) == {"[[2]]": 1, "[[1],[1]]": 2}


def test_poset_mobius(capsys, diamond_json):
    assert run_json(capsys, "poset", "mobius", "--in", diamond_json) == {"mobius": 1, "multirank": [2]}


def test_fqsym_product(capsys):
    a = '{"level":2,"terms":[{"sigma":[1],"u":[1]}]}'
    record = run_json(capsys, "fqsym", "mul", "--in", a, "--in", a)
    assert record["algebra"] == "FQSym"
    assert {(tuple(t["sigma"]), tuple(t["u"])) for t in record["terms"]} == {((1, 2), (1, 1)), ((2, 1), (1, 1))}


def test_malformed_json_exits_with_two(capsys):
    assert main.run(["mul", "--in", '{"level":1,', "--in", M1]) == 2
    assert "input error" in capsys.readouterr().err


def test_float_coefficient_exits_with_two(capsys):
    assert main.run(["antipode", "--in", '{"level":1,"terms":[{"coef":0.5,"index":[[1]]}]}']) == 2


def test_unknown_verb_exits_with_two(capsys):
    assert main.run(["frobnicate"]) == 2


def test_level_mismatch_exits_with_one(capsys):
    other = '{"level":2,"terms":[{"index":[[1,0]]}]}'
    assert main.run(["mul", "--in", M1, "--in", other]) == 1
    assert "error" in capsys.readouterr().err


def test_weight_cap(capsys, monkeypatch):
    monkeypatch.setattr(config.kernel, "max_weight", 3)
    assert main.run(["hilbert", "--level", "1", "--max-weight", "5"]) == 1
    assert "MULTIQSYM_MAX_WEIGHT=3" in capsys.readouterr().err
    assert main.run(["hilbert", "--level", "1", "--max-weight", "3"]) == 0
