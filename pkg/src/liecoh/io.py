"""
File formats: algebra JSON, cochain JSON, 1-form JSON and Maurer-Cartan text.

Algebra JSON::

    {"dim": 4, "names": ["X1", "X2", "X3", "X4"],
     "brackets": [{"i": 1, "j": 2, "v": {"1": "1"}}, ...]}

Maurer-Cartan text, one equation per line (``#`` starts a comment)::

    dim 4
    dw1 = w1^w2 + w3^w4
    dw3 = 3 w2^w3
    dw4 = -4 w2^w4
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from .cohomology import Cochain
from .errors import InputError
from .exact_linalg import format_rational, parse_rational
from .lie import LieAlgebra, from_maurer_cartan


def algebra_to_json(g: LieAlgebra) -> dict:
    return {
        "dim": g.dim,
        "names": list(g.names),
        "brackets": [
            {"i": i, "j": j, "v": {str(k): format_rational(v) for k, v in sorted(vec.items())}}
            for (i, j), vec in sorted(g.brackets.items())
        ],
    }


def _need(obj, key, kind, where):
    if not isinstance(obj, dict) or key not in obj:
        raise InputError(f"{where}: missing field '{key}'")
    val = obj[key]
    if kind is int and (not isinstance(val, int) or isinstance(val, bool)):
        raise InputError(f"{where}: field '{key}' must be an integer")
    if kind is not int and not isinstance(val, kind):
        raise InputError(f"{where}: field '{key}' has the wrong type")
    return val


def algebra_from_json(obj: dict, validate: bool = True) -> LieAlgebra:
    dim = _need(obj, "dim", int, "algebra")
    names = obj.get("names")
    if names is not None and (not isinstance(names, list) or not all(isinstance(s, str) for s in names)):
        raise InputError("algebra: field 'names' must be a list of strings")
    brackets = {}
    for n, entry in enumerate(_need(obj, "brackets", list, "algebra")):
        where = f"brackets[{n}]"
        i = _need(entry, "i", int, where)
        j = _need(entry, "j", int, where)
        if not i < j:
            raise InputError(f"{where}: need i < j, got i={i}, j={j}")
        if (i, j) in brackets:
            raise InputError(f"{where}: duplicate pair ({i},{j})")
        vec = {}
        for key, val in _need(entry, "v", dict, where).items():
            try:
                k = int(key)
            except ValueError:
                raise InputError(f"{where}.v: bad target index {key!r}") from None
            vec[k] = parse_rational(val)
        brackets[(i, j)] = vec
    cls = LieAlgebra.validated if validate else LieAlgebra
    return cls(dim, brackets, names)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def save_algebra(g: LieAlgebra, path) -> None:
    Path(path).write_text(dumps(algebra_to_json(g)), encoding="utf-8")


def load_json(path):
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON ({exc.msg} at line {exc.lineno})") from None
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def load_algebra(path, validate: bool = True) -> LieAlgebra:
    return algebra_from_json(load_json(path), validate)


# ---------------------------------------------------------------------------


def cochain_to_json(f: Cochain) -> list:
    return [{"args": list(a), "target": t, "c": format_rational(v)} for (a, t), v in f.coeffs.items()]


def cochain_from_json(obj: list, dim: int, degree: int | None = None) -> Cochain:
    if not isinstance(obj, list):
        raise InputError("cochain: expected a list of entries")
    coeffs = {}
    for n, entry in enumerate(obj):
        where = f"cochain[{n}]"
        args = _need(entry, "args", list, where)
        if not all(isinstance(a, int) for a in args):
            raise InputError(f"{where}: 'args' must be integers")
        target = _need(entry, "target", int, where)
        c = parse_rational(_need(entry, "c", (str, int), where))
        if degree is None:
            degree = len(args)
        elif len(args) != degree:
            raise InputError(f"{where}: {len(args)} arguments in a degree-{degree} cochain")
        key = (tuple(args), target)
        coeffs[key] = coeffs.get(key, Fraction(0)) + c
    if degree is None:
        raise InputError("cochain: empty list needs an explicit degree")
    return Cochain(degree, dim, coeffs)


# ---------------------------------------------------------------------------

_TERM = re.compile(r"([+-]?)((?:\d+(?:/\d+)?)?)\*?[wω](\d+)\^[wω](\d+)")
_LHS = re.compile(r"^d[wω](\d+)$")


def parse_maurer_cartan(text: str, names=None) -> LieAlgebra:
    """Parse Maurer-Cartan text (see module docstring) into a checked algebra."""
    dim = None
    equations: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("dim"):
            try:
                dim = int(line[3:].strip().lstrip("=").strip())
            except ValueError:
                raise InputError(f"line {lineno}: bad dim declaration") from None
            continue
        if "=" not in line:
            raise InputError(f"line {lineno}: expected 'dwK = ...'")
        lhs, rhs = (s.replace(" ", "") for s in line.split("=", 1))
        m = _LHS.match(lhs)
        if not m:
            raise InputError(f"line {lineno}: bad left-hand side {lhs!r}")
        k = int(m.group(1))
        eq = equations.setdefault(k, {})
        if rhs in ("", "0"):
            continue
        pos = 0
        for tm in _TERM.finditer(rhs):
            if tm.start() != pos or (pos > 0 and not tm.group(1)):
                raise InputError(f"line {lineno}: cannot parse {rhs[pos:] or rhs!r}")
            coeff = parse_rational(tm.group(2)) if tm.group(2) else Fraction(1)
            if tm.group(1) == "-":
                coeff = -coeff
            key = (int(tm.group(3)), int(tm.group(4)))
            eq[key] = eq.get(key, Fraction(0)) + coeff
            pos = tm.end()
        if pos != len(rhs):
            raise InputError(f"line {lineno}: cannot parse {rhs[pos:]!r}")
    return from_maurer_cartan(equations, dim=dim, names=names)


def format_maurer_cartan(g: LieAlgebra) -> str:
    """Maurer-Cartan text for g (inverse of parse_maurer_cartan)."""
    eqs: dict = {}
    for (i, j), vec in g.brackets.items():
        for k, v in vec.items():
            eqs.setdefault(k, []).append((i, j, v))
    lines = [f"dim {g.dim}"]
    for k in sorted(eqs):
        terms = []
        for i, j, v in eqs[k]:
            mag = abs(v)
            coef = "" if mag == 1 else format_rational(mag) + " "
            sign = "-" if v < 0 else "+"
            terms.append((sign, f"{coef}w{i}^w{j}"))
        body = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, t in terms[1:]:
            body += f" {sign} {t}"
        lines.append(f"dw{k} = {body}")
    return "\n".join(lines) + "\n"
