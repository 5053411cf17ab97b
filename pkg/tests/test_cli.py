import json
import pathlib
import subprocess
import sys

import pytest

from valdim.cli import COMMANDS, Job, dispatch, main, render
from valdim.serialize import load_chain
from valdim.valuative import check_chain

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"
GOLDEN = sorted(p.name[:-5] for p in FIXTURES.glob("*.json") if not p.name.endswith(".out.json"))

QT = {"vars": ["t"], "assume_integral": True}
QXY = {"vars": ["x", "y"]}
CROSS = {"vars": ["x", "y"], "ideal": ["x*y"], "assume_reduced": True}


def run(command, doc, **flags):
    out, code = dispatch(Job(command, doc, flags))
    return json.loads(render(out)), code


def test_all_commands_registered():
    assert sorted(COMMANDS) == sorted([
        "parse", "gb", "member", "radical-member", "ann", "split", "rmin-stage", "kdim-search", "dimv-search",
        "cert-verify", "glue", "vdim-check", "vdim-to-Vdim", "val-cert-verify", "val-entail", "lattice-leq",
        "lattice-kdim", "dyn-val-entail"])


@pytest.mark.parametrize("name", GOLDEN)
def test_golden(name):
    case = json.loads((FIXTURES / f"{name}.json").read_text())
    r = subprocess.run([sys.executable, "-m", "valdim", case["command"], *case["args"]],
                       input=json.dumps(case["input"]), capture_output=True, text=True)
    assert r.returncode == case["exit"], r.stderr
    assert r.stdout == (FIXTURES / f"{name}.out.json").read_text()


def test_input_file_and_determinism(tmp_path, capsys):
    case = json.loads((FIXTURES / "t_inverse_chain.json").read_text())
    f = tmp_path / "in.json"
    f.write_text(json.dumps(case["input"]))
    outs = []
    for _ in range(2):
        assert main([case["command"], "--input", str(f)]) == 0
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1] == (FIXTURES / "t_inverse_chain.out.json").read_text()


def test_exit_codes():
    assert run("member", {"ring": {"vars": ["x"], "ideal": ["x^2"]}, "poly": "x^3"})[1] == 0
    assert run("member", {"ring": {"vars": ["x"], "ideal": ["x^2"]}, "poly": "x"})[1] == 1
    out, code = run("radical-member", {"ring": {"vars": ["x"], "ideal": ["x^2"]}, "poly": "x"})
    assert code == 0 and out["exponent"] == 2
    assert run("val-entail", {"ring": QT, "right": ["t"]}, p=4, degree=6)[1] == 2
    assert run("val-entail", {"ring": QT, "left": ["0"], "right": ["t"]})[1] == 0
    assert run("kdim-search", {"ring": QT, "points": ["t"]}, degree=3)[1] == 2


def test_parse_and_gb():
    out, code = run("parse", {"ring": {"vars": ["x", "y"], "ideal": ["x^2 - y"]}, "poly": "x^3"})
    assert code == 0 and out["normal_form"] == "x*y"
    out, _ = run("gb", {"ring": {"vars": ["x", "y"], "ideal": ["x^2 - y", "x*y"]},
                        "order": {"kind": "lex", "priority": [0, 1]}})
    assert set(out["basis"]) == {"y^2", "x*y", "x^2 - y"}


def test_ann_and_rmin_stage():
    out, _ = run("ann", {"ring": CROSS, "element": "x"})
    assert out["ideal"] == ["y"]
    out, code = run("rmin-stage", {"ring": CROSS, "elements": ["x", "y"]})
    assert code == 0 and out["injective"]
    assert len(out["components"]) == 4
    for comp, cls in zip(out["components"], out["classes"]):
        assert all(c in ("zero", "regular") for c in cls)


def test_kdim_search_round_trip():
    out, code = run("kdim-search", {"ring": QT, "points": ["t", "t^2+1"]}, degree=3)
    assert code == 0
    back, code = run("cert-verify", out)
    assert code == 0 and back["ok"]
    out["certificate"]["witness"][0]["coeff"] = "5"
    assert run("cert-verify", out)[1] == 1


def test_dimv_search_uses_grlex():
    out, code = run("dimv-search", {"ring": QT, "points": ["t", "t+1"]}, degree=1)
    assert code == 0 and out["certificate"]["order"]["kind"] == "matrix"


def test_glue_modes():
    out, code = run("glue", {"ring": CROSS, "points": ["x", "y"], "split_on": ["x"]}, degree=3)
    assert code == 0
    assert run("cert-verify", out)[0]["ok"]
    res, code = run("kdim-search", {"ring": QT, "points": ["t", "t+1"]}, degree=2)
    W = res["certificate"]["witness"]
    doc = {"ring": QT, "points": ["t", "t+1"], "first": {"witness": W, "y": "0", "z": "0"},
           "second": {"witness": W, "y": "0", "z": "0"}}
    out, code = run("glue", doc)
    assert code == 0 and run("cert-verify", out)[0]["ok"]


def test_vdim_check():
    doc = {"ring": QT, "n": 1, "tuples": [["t", "t+1"], ["t^2", "t"]]}
    out, code = run("vdim-check", doc, degree=3)
    assert code == 0 and out["consistent"] and all(r["found"] for r in out["results"])
    doc["valuative"] = True
    doc["tuples"] = [["t", "X1", "t + X1"]]
    out, code = run("vdim-check", doc, degree=3)
    assert code == 0 and out["results"][0]["found"]


def test_vdim_to_Vdim_round_trip():
    out, code = run("vdim-to-Vdim", {"ring": QT, "xs": ["t", "t+1", "t^2"]}, degree=4)
    assert code == 0
    ch = load_chain(out["chain"])
    assert check_chain(ch).proved
    out, code = run("vdim-to-Vdim", {"ring": {"vars": ["t"], "ideal": ["1"], "assume_integral": True}, "xs": []})
    assert code == 0 and out["chain"]["us"] == []
    assert run("vdim-to-Vdim", {"ring": QT, "xs": ["t"]}, degree=3)[1] == 2


def test_val_entail_round_trip():
    out, code = run("val-entail", {"ring": QT, "left": ["t"], "right": [{"num": "1", "den": "t"}]}, p=4, degree=6)
    assert code == 0
    back, code = run("val-cert-verify", {"ring": QT, "certificate": out["certificate"]})
    assert code == 0 and back["ok"]
    bad = dict(out["certificate"], exps=[0])
    assert run("val-cert-verify", {"ring": QT, "certificate": bad})[1] == 1


def test_lattice_commands():
    table = {"atoms": ["a", "b", "c"], "sequents": [{"lhs": ["a"], "rhs": ["b"]}]}
    out, code = run("lattice-leq", {"table": table, "lhs": [["a"]], "rhs": [["b"]]})
    assert code == 0 and out["verdict"] == "proved"
    out, code = run("lattice-leq", {"table": table, "lhs": [["b"]], "rhs": [["a"]]})
    assert code == 1 and out["verdict"] == "refuted"
    out, code = run("lattice-leq", {"oracle": "zariski", "ring": QXY, "lhs": [["x*y"]], "rhs": [["x"]]})
    assert code == 0
    out, code = run("lattice-leq", {"oracle": "valuative", "ring": QT, "lhs": [], "rhs": [["t"], [{"num": "1", "den": "t"}]]},
                    p=2, degree=2)
    assert code == 0
    out, code = run("lattice-kdim", {"table": {"atoms": ["a", "b"], "sequents": [{"lhs": ["a"], "rhs": ["b"]}]},
                                     "tuples": [["a", "b"], ["b", "a", "b"]]})
    assert code == 0 and out["all_found"]


def test_dyn_val_entail():
    doc = {"ring": {"vars": ["a", "b", "c", "d"]}, "hyps": [["a", "b"], ["b", "c"], ["c", "d"]], "goals": [["a", "d"]]}
    out, code = run("dyn-val-entail", doc, depth=2)
    assert code == 0 and out["replayed"]
    doc = {"ring": QT, "hyps": [], "goals": [["t", "1"]]}
    assert run("dyn-val-entail", doc, depth=1)[1] == 2


@pytest.mark.parametrize("command,doc,kind", [
    ("member", {"ring": {"vars": ["x"]}, "poly": "x^"}, "parse"),
    ("member", {"ring": {"vars": ["x"]}}, "schema"),
    ("member", [], "schema"),
    ("nonsense", {}, "usage"),
    ("val-entail", {"ring": QT, "right": [{"num": "1", "den": "0"}]}, "schema"),
    ("lattice-leq", {"oracle": "other", "ring": QT, "lhs": [], "rhs": []}, "schema"),
    ("split", {"ring": {"vars": ["x"], "ideal": ["x^2"]}, "element": "x"}, "value"),
    ("val-entail", {"ring": CROSS, "right": ["x"]}, "value"),
])
def test_input_errors(command, doc, kind):
    out, code = run(command, doc)
    assert code == 3
    assert out["error"]["type"] == kind
    assert set(out["error"]) == {"type", "message", "position"}


def test_bad_json(tmp_path, capsys):
    f = tmp_path / "bad.json"
    f.write_text("{\"ring\": ")
    assert main(["member", "--input", str(f)]) == 3
    err = json.loads(capsys.readouterr().out)["error"]
    assert err["type"] == "json" and err["position"] == 9
    assert main(["member", "--input", str(tmp_path / "missing.json")]) == 3
