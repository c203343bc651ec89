"""
Chevalley-Eilenberg cohomology with adjoint coefficients.

A q-cochain is stored by its values on increasing index tuples:
``coeffs[(i1, ..., iq), k]`` is the X_k-coefficient of f(X_i1, ..., X_iq).
The coordinate order on C^q is lexicographic in (tuple, target).

Differential::

    (df)(x0..xq) = sum_i (-1)^i [x_i, f(..^x_i..)]
                 + sum_{i<j} (-1)^(i+j) f([x_i, x_j], ..^x_i..^x_j..)

so that Z^1 is the derivation algebra and d(z) = -ad(z) on 0-cochains.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Mapping, Sequence

from .errors import InputError, JacobiError
from .exact_linalg import (
    ONE,
    ZERO,
    Matrix,
    Subspace,
    _kernel_sparse,
    _solve_sparse,
    _subspace_from_sparse,
    _transpose_sparse,
)
from .lie import LieAlgebra, _add_into, jacobi_check


def _sort_sign(idx: Sequence[int]) -> tuple[int, tuple]:
    """Sign of the permutation sorting idx, and the sorted tuple; sign 0 on repeats."""
    idx = list(idx)
    if len(set(idx)) != len(idx):
        return 0, ()
    sign = 1
    # insertion sort counting transpositions
    for a in range(1, len(idx)):
        b = a
        while b > 0 and idx[b - 1] > idx[b]:
            idx[b - 1], idx[b] = idx[b], idx[b - 1]
            sign = -sign
            b -= 1
    return sign, tuple(idx)


class Cochain:
    """Alternating q-linear map g^q -> g, sparse on increasing tuples."""

    __slots__ = ("degree", "dim", "coeffs")

    def __init__(self, degree: int, dim: int, coeffs: Mapping | None = None):
        self.degree = degree
        self.dim = dim
        table: dict = {}
        for (args, target), v in (coeffs or {}).items():
            args = tuple(args)
            if len(args) != degree:
                raise InputError(f"argument tuple {args} for a degree-{degree} cochain")
            if not 1 <= target <= dim or any(not 1 <= a <= dim for a in args):
                raise InputError(f"index out of range 1..{dim} in {args} -> {target}")
            sign, key = _sort_sign(args)
            if sign == 0:
                if Fraction(v):
                    raise InputError(f"repeated argument in {args}")
                continue
            nv = table.get((key, target), ZERO) + sign * Fraction(v)
            if nv:
                table[(key, target)] = nv
            else:
                table.pop((key, target), None)
        self.coeffs = dict(sorted(table.items()))

    @classmethod
    def zero(cls, degree: int, dim: int) -> "Cochain":
        return cls(degree, dim)

    @classmethod
    def from_values(cls, degree: int, dim: int, values: Mapping) -> "Cochain":
        """From {(args): {target: coeff}}; args need not be increasing."""
        coeffs: dict = {}
        for args, vec in values.items():
            sign, key = _sort_sign(args)
            if sign == 0:
                continue
            for t, v in vec.items():
                coeffs[(key, t)] = coeffs.get((key, t), ZERO) + sign * Fraction(v)
        return cls(degree, dim, coeffs)

    def __call__(self, *args: int) -> dict:
        """Value on basis vectors X_args (1-based) as sparse dict target -> coeff."""
        if len(args) != self.degree:
            raise InputError(f"{len(args)} arguments for a degree-{self.degree} cochain")
        sign, key = _sort_sign(args)
        if sign == 0:
            return {}
        return {t: sign * v for (a, t), v in self.coeffs.items() if a == key}

    def value(self, args: Sequence[int], target: int) -> Fraction:
        sign, key = _sort_sign(args)
        if sign == 0:
            return ZERO
        return sign * self.coeffs.get((key, target), ZERO)

    def is_zero(self) -> bool:
        return not self.coeffs

    def _compat(self, other: "Cochain"):
        if (self.degree, self.dim) != (other.degree, other.dim):
            raise InputError("cochains of different degree or dimension")

    def __add__(self, other: "Cochain") -> "Cochain":
        self._compat(other)
        acc = dict(self.coeffs)
        _add_into(acc, other.coeffs)
        return Cochain(self.degree, self.dim, acc)

    def __neg__(self) -> "Cochain":
        return self * -1

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + (-other)

    def __mul__(self, scalar) -> "Cochain":
        s = Fraction(scalar)
        return Cochain(self.degree, self.dim, {k: s * v for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cochain):
            return NotImplemented
        return (self.degree, self.dim, self.coeffs) == (other.degree, other.dim, other.coeffs)

    def __hash__(self):
        return hash((self.degree, self.dim, tuple(self.coeffs.items())))

    def __repr__(self):
        body = ", ".join(f"{a}->{t}: {v}" for (a, t), v in self.coeffs.items())
        return f"Cochain(q={self.degree}, n={self.dim}; {body})"

    def to_sparse(self) -> dict:
        space = cochain_space(self.dim, self.degree)
        return {space.index[key]: v for key, v in self.coeffs.items()}

    def to_vector(self) -> tuple:
        space = cochain_space(self.dim, self.degree)
        vec = [ZERO] * space.size
        for key, v in self.coeffs.items():
            vec[space.index[key]] = v
        return tuple(vec)

    @classmethod
    def from_vector(cls, degree: int, dim: int, vec) -> "Cochain":
        space = cochain_space(dim, degree)
        items = vec.items() if isinstance(vec, dict) else enumerate(vec)
        return cls(degree, dim, {space.basis[i]: v for i, v in items if v})

    def image_targets(self) -> set:
        return {t for (_, t) in self.coeffs}


@dataclass(frozen=True)
class CochainSpace:
    dim: int
    degree: int
    basis: tuple
    index: dict

    @property
    def size(self) -> int:
        return len(self.basis)


@lru_cache(maxsize=None)
def cochain_space(n: int, q: int) -> CochainSpace:
    basis = tuple((args, t) for args in combinations(range(1, n + 1), q) for t in range(1, n + 1))
    return CochainSpace(n, q, basis, {b: i for i, b in enumerate(basis)})


def cochain_dim(n: int, q: int) -> int:
    return comb(n, q) * n if q >= 0 else 0


# ---------------------------------------------------------------------------
# the differential


def ce_differential(g: LieAlgebra, f: Cochain) -> Cochain:
    """d f, computed by pushing each nonzero coefficient of f forward."""
    if f.dim != g.dim:
        raise InputError(f"cochain on a {f.dim}-dim space for a {g.dim}-dim algebra")
    n, q = g.dim, f.degree
    out: dict = {}

    def add(J, vec, scale):
        for t, v in vec.items():
            key = (J, t)
            nv = out.get(key, ZERO) + scale * v
            if nv:
                out[key] = nv
            else:
                out.pop(key, None)

    for (I, k), c in f.coeffs.items():
        Iset = set(I)
        # sum_i (-1)^i [x_i, f(rest)]: x_i = a inserted into I
        for a in range(1, n + 1):
            if a in Iset:
                continue
            J = tuple(sorted(I + (a,)))
            pos = J.index(a)
            add(J, g.bracket_basis(a, k), c if pos % 2 == 0 else -c)
        # sum_{i<j} (-1)^(i+j) f([x_i, x_j], rest) with (m, rest) ~ I
        for pm, m in enumerate(I):
            rest = I[:pm] + I[pm + 1:]
            rset = set(rest)
            sm = -c if pm % 2 else c
            for (a, b), vec in g.brackets.items():
                cm = vec.get(m)
                if not cm or a in rset or b in rset:
                    continue
                J = tuple(sorted(rest + (a, b)))
                ia, ib = J.index(a), J.index(b)
                s = sm * cm
                if (ia + ib) % 2:
                    s = -s
                add(J, {k: ONE}, s)
    return Cochain(q + 1, n, out)


def ce_differential_direct(g: LieAlgebra, f: Cochain) -> Cochain:
    """d f evaluated literally on every increasing (q+1)-tuple (slow oracle)."""
    n, q = g.dim, f.degree
    values: dict = {}
    for J in combinations(range(1, n + 1), q + 1):
        acc: dict = {}
        for i, xi in enumerate(J):
            rest = J[:i] + J[i + 1:]
            for t, v in f(*rest).items():
                _add_into(acc, g.bracket_basis(xi, t), v if i % 2 == 0 else -v)
        for i, j in combinations(range(q + 1), 2):
            rest = J[:i] + J[i + 1:j] + J[j + 1:]
            sign = -1 if (i + j) % 2 else 1
            for m, cm in g.bracket_basis(J[i], J[j]).items():
                for t, v in f(m, *rest).items():
                    _add_into(acc, {t: v}, sign * cm)
        if acc:
            values[J] = acc
    return Cochain.from_values(q + 1, n, values)


@lru_cache(maxsize=64)
def _coboundary_columns(g: LieAlgebra, q: int) -> tuple:
    """d of every basis cochain of C^q, as sparse vectors over C^(q+1)."""
    n = g.dim
    src = cochain_space(n, q)
    dst = cochain_space(n, q + 1)
    cols = []
    for key in src.basis:
        img = ce_differential(g, Cochain(q, n, {key: ONE}))
        cols.append({dst.index[k]: v for k, v in img.coeffs.items()})
    return tuple(cols)


def coboundary_matrix(g: LieAlgebra, q: int) -> Matrix:
    """Matrix of d: C^q -> C^(q+1) (rows index C^(q+1), columns C^q)."""
    if q < 0:
        raise InputError("negative degree")
    cols = _coboundary_columns(g, q)
    rows = _transpose_sparse(cols, cochain_space(g.dim, q + 1).size)
    return Matrix.from_sparse(rows, len(cols))


def cocycle_space(g: LieAlgebra, q: int) -> Subspace:
    """Z^q as a subspace of C^q coordinates."""
    if q < 0:
        raise InputError("negative degree")
    cols = _coboundary_columns(g, q)
    rows = _transpose_sparse(cols, cochain_space(g.dim, q + 1).size)
    return _kernel_sparse(rows, len(cols))


def coboundary_space(g: LieAlgebra, q: int) -> Subspace:
    """B^q = d(C^(q-1)); B^0 = 0."""
    if q < 0:
        raise InputError("negative degree")
    size = cochain_space(g.dim, q).size
    if q == 0:
        return Subspace.zero(size)
    return _subspace_from_sparse(_coboundary_columns(g, q - 1), size)


def h_dim(g: LieAlgebra, q: int) -> int:
    z = cocycle_space(g, q)
    b = coboundary_space(g, q)
    assert b.issubspace(z), "B^q not contained in Z^q"
    return z.dim - b.dim


def cohomology_dims(g: LieAlgebra, q: int) -> dict:
    z = cocycle_space(g, q)
    b = coboundary_space(g, q)
    return {"c": cochain_space(g.dim, q).size, "z": z.dim, "b": b.dim, "h": z.dim - b.dim}


# ---------------------------------------------------------------------------
# gradings


@dataclass(frozen=True)
class Grading:
    """Integer weight w(X_i) per basis vector (weights[0] is w(X1))."""

    weights: tuple

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))

    def check(self, g: LieAlgebra) -> "Grading":
        """Raise InputError unless c_ij^k != 0 implies w_k = w_i + w_j."""
        if len(self.weights) != g.dim:
            raise InputError(f"{len(self.weights)} weights for a {g.dim}-dimensional algebra")
        w = self.weights
        for (i, j), vec in g.brackets.items():
            for k in vec:
                if w[k - 1] != w[i - 1] + w[j - 1]:
                    raise InputError(
                        f"law is not homogeneous: [X{i},X{j}] has an X{k} component "
                        f"({w[i - 1]}+{w[j - 1]} != {w[k - 1]})"
                    )
        return self

    def cochain_weight(self, args: Sequence[int], target: int) -> int:
        return self.weights[target - 1] - sum(self.weights[a - 1] for a in args)

    def weights_in_degree(self, n: int, q: int) -> list[int]:
        space = cochain_space(n, q)
        return sorted({self.cochain_weight(a, t) for a, t in space.basis})

    def homogeneous_weight(self, f: Cochain) -> int | None:
        ws = {self.cochain_weight(a, t) for a, t in f.coeffs}
        if len(ws) == 1:
            return ws.pop()
        return None

    def component(self, f: Cochain, w: int) -> Cochain:
        return Cochain(f.degree, f.dim, {k: v for k, v in f.coeffs.items() if self.cochain_weight(*k) == w})


def attach_grading(g: LieAlgebra, weights: Sequence[int]) -> Grading:
    return Grading(tuple(weights)).check(g)


def _weight_indices(g: LieAlgebra, grading: Grading, q: int) -> dict:
    out: dict = {}
    for i, (a, t) in enumerate(cochain_space(g.dim, q).basis):
        out.setdefault(grading.cochain_weight(a, t), []).append(i)
    return out


def graded_spaces(g: LieAlgebra, grading: Grading, q: int) -> dict:
    """weight -> (Z^q_w, B^q_w), both as subspaces of the full C^q coordinates."""
    grading.check(g)
    n = g.dim
    size = cochain_space(n, q).size
    cols_q = _coboundary_columns(g, q)
    w_q = _weight_indices(g, grading, q)
    w_q1 = _weight_indices(g, grading, q + 1)
    rev_q1 = {i: w for w, idx in w_q1.items() for i in idx}
    prev_cols = _coboundary_columns(g, q - 1) if q > 0 else ()
    w_prev = _weight_indices(g, grading, q - 1) if q > 0 else {}

    out = {}
    for w in sorted(w_q):
        idx = w_q[w]
        local = {gi: li for li, gi in enumerate(idx)}
        # d must preserve weight
        for gi in idx:
            for r in cols_q[gi]:
                if rev_q1[r] != w:
                    raise AssertionError(f"differential does not preserve weight {w}")
        block_cols = [cols_q[gi] for gi in idx]
        rows_by_target: dict = {}
        for li, col in enumerate(block_cols):
            for r, v in col.items():
                rows_by_target.setdefault(r, {})[li] = v
        zl = _kernel_sparse(list(rows_by_target.values()), len(idx))
        z = _subspace_from_sparse([{idx[c]: v for c, v in row.items()} for row in zl.sparse_basis()], size)
        bvecs = [prev_cols[gi] for gi in w_prev.get(w, [])]
        for vec in bvecs:
            if any(c not in local for c in vec):
                raise AssertionError(f"differential does not preserve weight {w}")
        b = _subspace_from_sparse(bvecs, size)
        out[w] = (z, b)
    return out


def graded_dims(g: LieAlgebra, grading: Grading, q: int) -> dict:
    """weight -> (dim Z^q_w, dim B^q_w)."""
    return {w: (z.dim, b.dim) for w, (z, b) in graded_spaces(g, grading, q).items()}


# ---------------------------------------------------------------------------
# cocycles, coboundaries, deformations


def is_cocycle(g: LieAlgebra, f: Cochain) -> bool:
    return ce_differential(g, f).is_zero()


def is_coboundary(g: LieAlgebra, psi: Cochain) -> Cochain | None:
    """A preimage f with d f = psi, or None if psi is a non-trivial cocycle."""
    if not is_cocycle(g, psi):
        raise InputError("cochain is not a cocycle")
    q = psi.degree
    if psi.is_zero():
        return Cochain.zero(max(q - 1, 0), g.dim) if q > 0 else psi
    if q == 0:
        return None
    cols = _coboundary_columns(g, q - 1)
    size = cochain_space(g.dim, q).size
    rows = _transpose_sparse(cols, size)
    rhs = [ZERO] * size
    for i, v in psi.to_sparse().items():
        rhs[i] = v
    sol = _solve_sparse(rows, len(cols), rhs)
    if sol is None:
        return None
    return Cochain.from_vector(q - 1, g.dim, sol)


def independent_mod(vectors: Iterable[Cochain], subspace: Subspace) -> bool:
    vecs = [v.to_sparse() for v in vectors]
    joined = _subspace_from_sparse(subspace.sparse_basis() + vecs, subspace.ambient_dim)
    return joined.dim == subspace.dim + len(vecs)


def bracket_cochain(g: LieAlgebra) -> Cochain:
    """The law itself as a 2-cochain."""
    return Cochain(2, g.dim, {((i, j), k): v for (i, j), vec in g.brackets.items() for k, v in vec.items()})


def element_cochain(g: LieAlgebra, x: Sequence) -> Cochain:
    return Cochain(0, g.dim, {((), k + 1): v for k, v in enumerate(x) if v})


def endomorphism_cochain(m: Matrix) -> Cochain:
    """1-cochain of a matrix acting on column vectors: f(X_c) = sum_r m[r][c] X_r."""
    n = m.rows
    return Cochain(1, n, {((c + 1,), r + 1): m[r, c] for r in range(n) for c in range(n) if m[r, c]})


def cochain_to_matrix(f: Cochain) -> Matrix:
    if f.degree != 1:
        raise InputError("only 1-cochains are endomorphisms")
    n = f.dim
    grid = [[ZERO] * n for _ in range(n)]
    for ((c,), r), v in f.coeffs.items():
        grid[r - 1][c - 1] = v
    return Matrix(grid, n)


def nr_square(g: LieAlgebra, psi: Cochain) -> Cochain:
    """(psi o psi)(x, y, z) = psi(psi(x,y),z) + psi(psi(y,z),x) + psi(psi(z,x),y)."""
    if psi.degree != 2 or psi.dim != g.dim:
        raise InputError("nr_square needs a 2-cochain on the algebra")
    n = g.dim
    values: dict = {}
    for i, j, k in combinations(range(1, n + 1), 3):
        acc: dict = {}
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            for m, v in psi(a, b).items():
                _add_into(acc, psi(m, c), v)
        if acc:
            values[(i, j, k)] = acc
    return Cochain.from_values(3, n, values)


def sq1(g: LieAlgebra, psi: Cochain) -> bool:
    """True when the class of psi o psi in H^3 vanishes (no 1/2 factor)."""
    if psi.degree != 2:
        raise InputError("sq1 needs a 2-cochain")
    if not is_cocycle(g, psi):
        raise InputError("sq1 needs a 2-cocycle")
    sq = nr_square(g, psi)
    if sq.is_zero():
        return True
    return is_coboundary(g, sq) is not None


def add_cochain(g: LieAlgebra, psi: Cochain, t=ONE) -> LieAlgebra:
    """Bracket table of g + t*psi, unchecked."""
    t = Fraction(t)
    brackets = {key: dict(vec) for key, vec in g.brackets.items()}
    for ((i, j), k), v in psi.coeffs.items():
        vec = brackets.setdefault((i, j), {})
        _add_into(vec, {k: v}, t)
    return LieAlgebra(g.dim, brackets, g.names)


def linear_deformation(g: LieAlgebra, psi: Cochain, t) -> LieAlgebra:
    """The law g + t*psi; raises JacobiError if it is not a Lie law."""
    if psi.degree != 2 or psi.dim != g.dim:
        raise InputError("a linear deformation needs a 2-cochain on the algebra")
    h = add_cochain(g, psi, t)
    bad = jacobi_check(h)
    if bad:
        raise JacobiError(bad)
    return h
