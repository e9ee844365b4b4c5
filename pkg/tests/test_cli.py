import json

from a2poly.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_eval_text(capsys):
    code, out = run(capsys, "eval", "trefoil-r")
    assert code == 0
    assert "a^12 + a^24 - a^36" in out
    assert "writhe: 3" in out


def test_eval_json_schema(capsys):
    code, out = run(capsys, "eval", "yoshikawa-8_1", "--mod", "a6+1", "--report", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["writhe"] == 0
    assert payload["marked_vertices"] == 2
    terms = {(t["x"], t["y"]): t["coefficient"] for t in payload["invariant"]}
    assert terms[(2, 0)] == [[-6, 1], [0, 1], [6, 1]]
    assert len(payload["states"]) == 4
    spec = payload["specialization"]
    assert spec["modulus"] == "a6+1"


def test_bracket_and_specialize(capsys):
    code, out = run(capsys, "bracket", "hopf-neg")
    assert code == 0 and out.strip() == "a^-8 + a^-2 + a^10"
    code, out = run(capsys, "specialize", "yoshikawa-8_1", "--mod", "phi18")
    assert code == 0 and out.strip() == "(4)*x^1*y^1"


def test_conway_command(capsys):
    code, out = run(capsys, "conway", "trefoil-r")
    assert code == 0
    assert out.splitlines()[0] == "1 + z^2"


def test_moves_check(capsys):
    code, out = run(capsys, "moves-check", "gamma6-left", "--move", "g6", "--kind", "remove")
    assert code == 0
    assert "pass" in out


def test_enumerate_command(capsys):
    code, out = run(capsys, "enumerate", "--boundary", "3")
    assert code == 0
    assert "6 fundamental" in out


def test_eval_p9star(capsys):
    code, out = run(capsys, "eval", "yoshikawa-8_1", "--p9star")
    assert code == 0
    assert "p9*" in out and "4" in out


def test_missing_catalog_name(capsys):
    code = main(["eval", "no-such-diagram"])
    assert code == 2
