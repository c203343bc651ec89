import json
import random
from fractions import Fraction as F

import pytest

from liecoh import io
from liecoh.cohomology import Cochain
from liecoh.errors import InputError, JacobiError
from liecoh.family import build_F, params, random_generic_phi
from liecoh.lie import LieAlgebra, heisenberg


def fixtures():
    yield build_F(params(2, [3]))
    yield build_F(params(3, [2, 7]))
    yield build_F(params(3, [F(-2, 3), F(5, 7)]))
    yield heisenberg(2)
    yield LieAlgebra.abelian(4)


@pytest.mark.parametrize("g", list(fixtures()), ids=str)
def test_json_round_trip(g, tmp_path):
    path = tmp_path / "g.json"
    io.save_algebra(g, path)
    h = io.load_algebra(path)
    assert h == g
    io.save_algebra(h, tmp_path / "h.json")
    assert path.read_bytes() == (tmp_path / "h.json").read_bytes()


@pytest.mark.parametrize("g", list(fixtures()), ids=str)
def test_maurer_cartan_round_trip(g):
    text = io.format_maurer_cartan(g)
    assert io.parse_maurer_cartan(text).same_structure(g)


def test_maurer_cartan_text():
    g = io.parse_maurer_cartan("dim 4\ndw1 = w1^w2 + w3^w4  # comment\ndw3 = 3 w2^w3\ndw4 = -4 w2^w4\n")
    assert g.same_structure(build_F(params(2, [3])))
    assert io.format_maurer_cartan(g) == "dim 4\ndw1 = w1^w2 + w3^w4\ndw3 = 3 w2^w3\ndw4 = -4 w2^w4\n"
    with pytest.raises(InputError):
        io.parse_maurer_cartan("dim 3\ndw3 = w1 w2\n")
    with pytest.raises(JacobiError):
        io.parse_maurer_cartan("dw3 = w1^w2\ndw2 = w1^w3\ndw1 = w1^w2\n")


def test_algebra_json_errors():
    with pytest.raises(InputError, match="'dim'"):
        io.algebra_from_json({"brackets": []})
    with pytest.raises(InputError, match=r"brackets\[0\]"):
        io.algebra_from_json({"dim": 3, "brackets": [{"i": 2, "j": 1, "v": {"3": "1"}}]})
    with pytest.raises(InputError):
        io.algebra_from_json({"dim": 3, "brackets": [{"i": 1, "j": 2, "v": {"3": "x"}}]})


def test_load_malformed(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    with pytest.raises(InputError, match="malformed"):
        io.load_algebra(p)


def test_cochain_round_trip():
    rng = random.Random(5)
    coeffs = {((1, 3), 2): F(1, 2), ((2, 4), 4): -3, ((1, 2), 1): rng.randint(1, 9)}
    f = Cochain(2, 4, coeffs)
    obj = json.loads(json.dumps(io.cochain_to_json(f)))
    assert io.cochain_from_json(obj, 4) == f
    with pytest.raises(InputError):
        io.cochain_from_json([], 4)


def test_random_family_round_trip():
    rng = random.Random(11)
    for p in (2, 3, 4):
        g = build_F(random_generic_phi(p, rng))
        assert io.algebra_from_json(json.loads(io.dumps(io.algebra_to_json(g)))) == g
