import json

import pytest

from liecoh import io
from liecoh.cli import main
from liecoh.family import build_F, params
from liecoh.lie import LieAlgebra


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_model_json(capsys):
    code, out, _ = run(capsys, "verify-model", "--p", "3", "--phi", "2,7", "--json")
    assert code == 0
    rep = json.loads(out)
    assert (rep["dims"]["der"], rep["dims"]["h1"], rep["dims"]["h2"]) == (8, 2, 2)
    assert rep["conventions"] == {"d_sign": "+", "sq1_factor": "1"}


def test_verify_model_non_generic(capsys):
    code, out, _ = run(capsys, "verify-model", "--p", "3", "--phi", "1,1")
    assert code == 0
    assert "flagged" in out and "skipped" in out


def test_omega_text(capsys):
    code, out, _ = run(capsys, "omega", "--p", "3", "--phi", "1,2")
    assert code == 0
    assert "in Ω₂ via 1+φ₁−φ₂ = 0" in out


def test_cohomology_abelian(capsys, tmp_path):
    path = tmp_path / "abelian4.json"
    io.save_algebra(LieAlgebra.abelian(4), path)
    code, out, _ = run(capsys, "cohomology", "--algebra", str(path), "--degree", "2", "--json")
    assert code == 0
    rep = json.loads(out)
    assert (rep["z"], rep["b"]) == (24, 0)


def test_cohomology_graded(capsys):
    code, out, _ = run(capsys, "cohomology", "--p", "2", "--phi", "3", "--graded", "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["h"] == 1


def test_derivations_and_invariants(capsys):
    assert run(capsys, "derivations", "--p", "2", "--phi", "3")[0] == 0
    code, out, _ = run(capsys, "invariants", "--p", "3", "--phi", "2,7", "--json")
    assert code == 0
    assert json.loads(out)["center"] == 0


def test_rim_and_deform(capsys):
    assert run(capsys, "rim", "--p", "3", "--phi", "2,7")[0] == 0
    code, out, _ = run(capsys, "deform", "--p", "2", "--phi", "3", "--k", "1", "--t", "-2", "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["equal"] and rep["target_phi"] == ["1"] and rep["target_in_omega"]


def test_witness_searches(capsys):
    assert run(capsys, "frobenius-test", "--p", "2", "--phi", "3")[0] == 0
    assert run(capsys, "contact-test", "--heisenberg", "2")[0] == 0


def test_sweep_grid(capsys):
    code, out, _ = run(capsys, "sweep", "--p", "2", "--grid", "1..20", "--json")
    assert code == 0
    s = json.loads(out)["summary"]
    assert s == {"points": 20, "pass": 19, "fail": 0, "non_generic": 1}


def test_sweep_empty_and_cap(capsys):
    code, out, _ = run(capsys, "sweep", "--p", "2", "--grid", "", "--json")
    assert code == 0
    assert json.loads(out)["summary"]["points"] == 0
    assert run(capsys, "sweep", "--p", "7", "--count", "1")[0] == 2


def test_sweep_seeded_random(capsys):
    code, out, _ = run(capsys, "sweep", "--p", "3", "--count", "5", "--seed", "4", "--json")
    assert code == 0
    assert json.loads(out)["summary"]["pass"] == 5


def test_input_errors(capsys, tmp_path):
    assert run(capsys, "verify-model", "--p", "3", "--phi", "2")[0] == 2
    assert run(capsys, "verify-model", "--p", "3", "--phi", "2,x")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"dim": 3}')
    code, _, err = run(capsys, "invariants", "--algebra", str(bad))
    assert code == 2 and "brackets" in err
    assert run(capsys, "no-such-verb")[0] == 2


def test_seeded_runs_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        assert main(["verify-model", "--p", "3", "--phi", "2,7", "--json", "--seed", "7", "--out", str(path)]) == 0
    assert a.read_bytes() == b.read_bytes()


@pytest.mark.parametrize("p,phi", [(2, [3]), (3, [2, 7]), (4, [2, 9, 20])])
def test_convert_identity(p, phi, tmp_path):
    g = build_F(params(p, phi))
    src = tmp_path / "g.mc"
    src.write_text(io.format_maurer_cartan(g))
    dst = tmp_path / "g.json"
    assert main(["convert", str(src), "--out", str(dst)]) == 0
    assert io.load_algebra(dst).same_structure(g)
