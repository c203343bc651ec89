"""
Exterior forms on the dual of a Lie algebra.

The differential of a 1-form follows the contragredient convention
d(w)(X, Y) = -w([X, Y]) by default; pass ``d_sign=+1`` for the opposite
convention (the contact and frobeniusian predicates do not depend on it).
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import factorial
from typing import Mapping

from .errors import InputError
from .exact_linalg import ZERO, format_rational, parse_rational
from .lie import LieAlgebra


def _merge_sign(a: tuple, b: tuple) -> int:
    """Sign of the shuffle putting a + b in increasing order; 0 if they overlap."""
    if set(a) & set(b):
        return 0
    inversions = sum(1 for x in a for y in b if x > y)
    return -1 if inversions % 2 else 1


class KForm:
    """k-form on an n-dimensional space: increasing index tuple -> coefficient."""

    __slots__ = ("degree", "dim", "coeffs")

    def __init__(self, degree: int, dim: int, coeffs: Mapping | None = None):
        if degree < 0 or degree > dim:
            raise InputError(f"no {degree}-forms on a {dim}-dimensional space")
        self.degree = degree
        self.dim = dim
        table: dict = {}
        for idx, v in (coeffs or {}).items():
            idx = (idx,) if isinstance(idx, int) else tuple(idx)
            if len(idx) != degree or any(not 1 <= i <= dim for i in idx):
                raise InputError(f"bad index tuple {idx} for a {degree}-form in dimension {dim}")
            if len(set(idx)) != degree:
                continue
            inversions = sum(1 for x in range(degree) for y in range(x + 1, degree) if idx[x] > idx[y])
            sign = -1 if inversions % 2 else 1
            key = tuple(sorted(idx))
            nv = table.get(key, ZERO) + sign * Fraction(v)
            if nv:
                table[key] = nv
            else:
                table.pop(key, None)
        self.coeffs = dict(sorted(table.items()))

    @classmethod
    def basis_1form(cls, dim: int, i: int) -> "KForm":
        return cls(1, dim, {(i,): 1})

    @classmethod
    def from_vector(cls, coeffs) -> "KForm":
        return cls(1, len(coeffs), {(i + 1,): c for i, c in enumerate(coeffs) if c})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, KForm):
            return NotImplemented
        return (self.degree, self.dim, self.coeffs) == (other.degree, other.dim, other.coeffs)

    def __hash__(self):
        return hash((self.degree, self.dim, tuple(self.coeffs.items())))

    def __add__(self, other: "KForm") -> "KForm":
        if (self.degree, self.dim) != (other.degree, other.dim):
            raise InputError("adding forms of different degree or dimension")
        acc = dict(self.coeffs)
        for k, v in other.coeffs.items():
            acc[k] = acc.get(k, ZERO) + v
        return KForm(self.degree, self.dim, acc)

    def __mul__(self, scalar) -> "KForm":
        s = Fraction(scalar)
        return KForm(self.degree, self.dim, {k: s * v for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __xor__(self, other: "KForm") -> "KForm":
        return wedge(self, other)

    def __repr__(self):
        if not self.coeffs:
            return f"KForm(0, degree={self.degree})"
        terms = " + ".join(f"{v}*" + "^".join(f"w{i}" for i in k) for k, v in self.coeffs.items())
        return f"KForm({terms})"

    def to_json(self) -> dict:
        if self.degree != 1:
            raise InputError("only 1-forms have a JSON encoding")
        return {str(k[0]): format_rational(v) for k, v in self.coeffs.items()}

    @classmethod
    def from_json(cls, obj: Mapping, dim: int) -> "KForm":
        try:
            return cls(1, dim, {(int(k),): parse_rational(v) for k, v in obj.items()})
        except (TypeError, ValueError) as exc:
            raise InputError(f"bad 1-form: {exc}") from None


def wedge(a: KForm, b: KForm) -> KForm:
    """a ^ b; when deg a + deg b exceeds the dimension the zero n-form is returned."""
    if a.dim != b.dim:
        raise InputError(f"forms on spaces of dimension {a.dim} and {b.dim}")
    n = a.dim
    deg = a.degree + b.degree
    if deg > n:
        return KForm(n, n)
    acc: dict = {}
    for ka, va in a.coeffs.items():
        for kb, vb in b.coeffs.items():
            s = _merge_sign(ka, kb)
            if s:
                key = tuple(sorted(ka + kb))
                acc[key] = acc.get(key, ZERO) + s * va * vb
    return KForm(deg, n, acc)


def power(a: KForm, m: int) -> KForm:
    out = KForm(0, a.dim, {(): 1})
    for _ in range(m):
        out = wedge(out, a)
    return out


def differential_1form(g: LieAlgebra, w: KForm, d_sign: int = -1) -> KForm:
    """dw with dw(X_i, X_j) = d_sign * w([X_i, X_j])."""
    if w.degree != 1:
        raise InputError(f"differential_1form needs a 1-form, got degree {w.degree}")
    if w.dim != g.dim:
        raise InputError(f"1-form in dimension {w.dim} for a {g.dim}-dimensional algebra")
    if d_sign not in (1, -1):
        raise InputError("d_sign must be +1 or -1")
    coeffs = {}
    for (i, j), vec in g.brackets.items():
        s = sum((w.coeffs.get((k,), ZERO) * v for k, v in vec.items()), ZERO)
        if s:
            coeffs[(i, j)] = d_sign * s
    return KForm(2, g.dim, coeffs)


def top_coefficient(f: KForm) -> Fraction:
    """Coefficient of w1^...^wn in a top-degree form (0 for lower degrees)."""
    if f.degree != f.dim:
        return ZERO
    return f.coeffs.get(tuple(range(1, f.dim + 1)), ZERO)


def is_contact_form(g: LieAlgebra, w: KForm, d_sign: int = -1) -> bool:
    """w ^ (dw)^n != 0 on a (2n+1)-dimensional algebra."""
    if g.dim % 2 == 0:
        raise InputError(f"contact forms live on odd-dimensional algebras, got dim {g.dim}")
    n = g.dim // 2
    return not wedge(w, power(differential_1form(g, w, d_sign), n)).is_zero()


def is_frobenius_form(g: LieAlgebra, w: KForm, d_sign: int = -1) -> bool:
    """(dw)^p != 0 on a 2p-dimensional algebra."""
    if g.dim % 2:
        raise InputError(f"frobeniusian forms live on even-dimensional algebras, got dim {g.dim}")
    return not power(differential_1form(g, w, d_sign), g.dim // 2).is_zero()


def _candidates(n: int, seed: int, trials: int):
    for i in range(1, n + 1):
        yield KForm.basis_1form(n, i)
    rng = random.Random(seed)
    for _ in range(trials):
        coeffs = [rng.randint(-10, 10) for _ in range(n)]
        if any(coeffs):
            yield KForm.from_vector(coeffs)


def frobenius_witness(g: LieAlgebra, seed: int = 0, trials: int = 20, d_sign: int = -1) -> KForm | None:
    """First 1-form w (canonical duals, then seeded random) with (dw)^p != 0.

    None is only evidence: the search may miss a witness.
    """
    if g.dim % 2:
        raise InputError(f"frobeniusian forms live on even-dimensional algebras, got dim {g.dim}")
    for w in _candidates(g.dim, seed, trials):
        if is_frobenius_form(g, w, d_sign):
            return w
    return None


def contact_witness(g: LieAlgebra, seed: int = 0, trials: int = 20, d_sign: int = -1) -> KForm | None:
    if g.dim % 2 == 0:
        raise InputError(f"contact forms live on odd-dimensional algebras, got dim {g.dim}")
    for w in _candidates(g.dim, seed, trials):
        if is_contact_form(g, w, d_sign):
            return w
    return None


def volume_multiple(p: int) -> int:
    """p!, the top coefficient of (w1^w2 + w3^w4 + ... )^p up to sign."""
    return factorial(p)
