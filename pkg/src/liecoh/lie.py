"""
Lie algebras given by structure constants.

Basis vectors are labelled X1..Xn and all index arguments are 1-based, so
that bracket tables can be copied literally from Maurer-Cartan data.  Vectors
(elements of the algebra) are plain tuples of Fractions of length n, with
position 0 holding the X1 coordinate.

Maurer-Cartan conversion uses d(w)(X, Y) = +w([X, Y]): the coefficient of
w_i ^ w_j (i < j) in d(w_k) is the X_k-coordinate of [X_i, X_j].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .errors import InputError, JacobiError
from .exact_linalg import (
    ONE,
    ZERO,
    Matrix,
    Subspace,
    _kernel_sparse,
    _subspace_from_sparse,
    inverse,
)


def _add_into(acc: dict, vec: Mapping, scale=ONE):
    for k, v in vec.items():
        nv = acc.get(k, ZERO) + scale * v
        if nv:
            acc[k] = nv
        else:
            acc.pop(k, None)
    return acc


class LieAlgebra:
    """Structure constants c_ij^k of [X_i, X_j] = sum_k c_ij^k X_k, only i < j stored.

    The plain constructor does not check the Jacobi identity (so broken
    tables can be fed to :func:`jacobi_check`); use :meth:`validated` or
    :func:`from_maurer_cartan` for checked construction.
    """

    __slots__ = ("dim", "names", "brackets")

    def __init__(self, dim: int, brackets: Mapping | None = None, names: Sequence[str] | None = None):
        if dim < 0:
            raise InputError("negative dimension")
        self.dim = dim
        self.names = tuple(names) if names is not None else tuple(f"X{i}" for i in range(1, dim + 1))
        if len(self.names) != dim:
            raise InputError(f"{len(self.names)} names for a {dim}-dimensional algebra")
        table: dict = {}
        for (i, j), vec in (brackets or {}).items():
            if not (1 <= i <= dim and 1 <= j <= dim):
                raise InputError(f"bracket index ({i},{j}) out of range 1..{dim}")
            if i == j:
                if any(Fraction(v) for v in vec.values()):
                    raise InputError(f"[X{i},X{i}] must vanish")
                continue
            sign = ONE
            if i > j:
                i, j, sign = j, i, -ONE
            cur = table.setdefault((i, j), {})
            for k, v in vec.items():
                if not 1 <= k <= dim:
                    raise InputError(f"bracket target index {k} out of range 1..{dim}")
                _add_into(cur, {k: Fraction(v)}, sign)
        self.brackets = {key: dict(sorted(v.items())) for key, v in sorted(table.items()) if v}

    @classmethod
    def validated(cls, dim, brackets=None, names=None) -> "LieAlgebra":
        g = cls(dim, brackets, names)
        bad = jacobi_check(g)
        if bad:
            raise JacobiError(bad)
        return g

    @classmethod
    def abelian(cls, n: int) -> "LieAlgebra":
        return cls(n)

    def bracket_basis(self, i: int, j: int) -> dict:
        """[X_i, X_j] as a sparse dict target -> coefficient (1-based)."""
        if i < j:
            return self.brackets.get((i, j), {})
        if i > j:
            return {k: -v for k, v in self.brackets.get((j, i), {}).items()}
        return {}

    def bracket(self, x: Sequence, y: Sequence) -> tuple:
        acc: dict = {}
        for i, xi in enumerate(x, start=1):
            if not xi:
                continue
            for j, yj in enumerate(y, start=1):
                if yj and i != j:
                    _add_into(acc, self.bracket_basis(i, j), Fraction(xi) * Fraction(yj))
        return tuple(acc.get(k, ZERO) for k in range(1, self.dim + 1))

    def basis_vector(self, i: int) -> tuple:
        return tuple(ONE if k == i else ZERO for k in range(1, self.dim + 1))

    def ad_matrix(self, x: Sequence) -> Matrix:
        """Matrix of ad(x) acting on column vectors."""
        cols = [self.bracket(x, self.basis_vector(j)) for j in range(1, self.dim + 1)]
        return Matrix(cols, self.dim).transpose() if self.dim else Matrix([], 0)

    def same_structure(self, other: "LieAlgebra") -> bool:
        return self.dim == other.dim and self.brackets == other.brackets

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.same_structure(other) and self.names == other.names

    def __hash__(self):
        return hash((self.dim, tuple((k, tuple(v.items())) for k, v in self.brackets.items())))

    def __repr__(self):
        parts = []
        for (i, j), vec in self.brackets.items():
            terms = " + ".join(f"{v}*{self.names[k - 1]}" for k, v in vec.items())
            parts.append(f"[{self.names[i - 1]},{self.names[j - 1]}]={terms}")
        return f"LieAlgebra(dim={self.dim}; " + ", ".join(parts) + ")"


def from_maurer_cartan(equations: Mapping[int, Mapping], dim: int | None = None, names=None) -> LieAlgebra:
    """Build the algebra from d(w_k) = sum c * w_i ^ w_j.

    ``equations`` maps k to {(i, j): c}; pairs with i > j are accepted and
    flipped with a sign.  Raises JacobiError when the result is not a Lie law.
    """
    if dim is None:
        idx = [k for k in equations] + [i for eq in equations.values() for pair in eq for i in pair]
        dim = max(idx, default=0)
    brackets: dict = {}
    for k, eq in equations.items():
        for (i, j), c in eq.items():
            brackets.setdefault((i, j), {})
            brackets[(i, j)][k] = brackets[(i, j)].get(k, ZERO) + Fraction(c)
    return LieAlgebra.validated(dim, brackets, names)


def jacobi_check(g: LieAlgebra) -> list:
    """Triples (i, j, k), i < j < k, where the cyclic sum of [[X_i,X_j],X_k] is nonzero.

    Each entry is ``((i, j, k), defect)`` with defect a sparse dict.
    """
    out = []
    for i, j, k in combinations(range(1, g.dim + 1), 3):
        acc: dict = {}
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            for m, v in g.bracket_basis(a, b).items():
                _add_into(acc, g.bracket_basis(m, c), v)
        if acc:
            out.append(((i, j, k), dict(sorted(acc.items()))))
    return out


# ---------------------------------------------------------------------------
# structural invariants


def center(g: LieAlgebra) -> Subspace:
    n = g.dim
    # x in center iff sum_i x_i c_{ij}^k = 0 for all j, k
    rows: dict = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k, v in g.bracket_basis(i, j).items():
                rows.setdefault((j, k), {})[i - 1] = v
    return _kernel_sparse(list(rows.values()), n)


def _bracket_span(g: LieAlgebra, a: Sequence[dict], b: Sequence[dict]) -> Subspace:
    vecs = []
    for u in a:
        for v in b:
            acc: dict = {}
            for i, ui in u.items():
                for j, vj in v.items():
                    if i != j:
                        _add_into(acc, g.bracket_basis(i + 1, j + 1), ui * vj)
            vecs.append({k - 1: x for k, x in acc.items()})
    return _subspace_from_sparse(vecs, g.dim)


def derived_subalgebra(g: LieAlgebra) -> Subspace:
    vecs = [{k - 1: v for k, v in vec.items()} for vec in g.brackets.values()]
    return _subspace_from_sparse(vecs, g.dim)


def derived_series(g: LieAlgebra) -> list[Subspace]:
    """D^0 = g, D^(i+1) = [D^i, D^i], until the dimension stops dropping."""
    series = [Subspace.full(g.dim)]
    while series[-1].dim:
        basis = series[-1].sparse_basis()
        nxt = _bracket_span(g, basis, basis)
        if nxt.dim == series[-1].dim:
            break
        series.append(nxt)
    return series


def solvable_steps(g: LieAlgebra) -> int | None:
    series = derived_series(g)
    if series[-1].dim:
        return None
    return len(series) - 1


def lower_central_series(g: LieAlgebra) -> list[Subspace]:
    series = [Subspace.full(g.dim)]
    full = series[0].sparse_basis()
    while series[-1].dim:
        nxt = _bracket_span(g, full, series[-1].sparse_basis())
        if nxt.dim == series[-1].dim:
            break
        series.append(nxt)
    return series


def derivations(g: LieAlgebra) -> Subspace:
    """Derivations as a subspace of n x n matrices (row-major, acting on columns).

    Coordinate r*n + c holds the X_{r+1} component of f(X_{c+1}).  The
    equations f[X_a,X_b] - [fX_a,X_b] - [X_a,fX_b] = 0 are set up directly.
    """
    n = g.dim
    rows: dict = {}

    def add(key, var, val):
        row = rows.setdefault(key, {})
        nv = row.get(var, ZERO) + val
        if nv:
            row[var] = nv
        else:
            row.pop(var, None)

    for a, b in combinations(range(1, n + 1), 2):
        # f([X_a, X_b]) = sum_m c_ab^m f(X_m); X_r-component is sum_m c_ab^m F[r][m]
        for m, c in g.bracket_basis(a, b).items():
            for r in range(1, n + 1):
                add((a, b, r), (r - 1) * n + (m - 1), c)
        # [f X_a, X_b] = sum_s F[s][a] [X_s, X_b]
        for s in range(1, n + 1):
            for r, c in g.bracket_basis(s, b).items():
                add((a, b, r), (s - 1) * n + (a - 1), -c)
            for r, c in g.bracket_basis(a, s).items():
                add((a, b, r), (s - 1) * n + (b - 1), -c)
    return _kernel_sparse(list(rows.values()), n * n)


def matrix_to_vector(m: Matrix) -> tuple:
    return tuple(x for row in m for x in row)


def vector_to_matrix(v: Sequence, n: int) -> Matrix:
    v = tuple(v)
    return Matrix([v[r * n:(r + 1) * n] for r in range(n)], n)


def inner_derivations(g: LieAlgebra) -> Subspace:
    return Subspace(g.dim * g.dim, [matrix_to_vector(g.ad_matrix(g.basis_vector(i))) for i in range(1, g.dim + 1)])


def matrix_lie_algebra(mats: Sequence[Matrix], names=None) -> LieAlgebra:
    """Structure constants of a family of matrices closed under commutators.

    The matrices must be linearly independent and span a Lie algebra under
    [A, B] = AB - BA; otherwise InputError.
    """
    n = len(mats)
    if n == 0:
        return LieAlgebra(0)
    flat = [matrix_to_vector(m) for m in mats]
    size = len(flat[0])
    if Subspace(size, flat).dim != n:
        raise InputError("matrices are linearly dependent")
    # solve coordinates of commutators in the given basis
    from .exact_linalg import _solve_sparse, _transpose_sparse

    cols = [{c: v for c, v in enumerate(f) if v} for f in flat]
    eqs = _transpose_sparse(cols, size)
    brackets = {}
    for i, j in combinations(range(n), 2):
        comm = mats[i] @ mats[j] - mats[j] @ mats[i]
        rhs = matrix_to_vector(comm)
        sol = _solve_sparse(eqs, n, rhs)
        if sol is None:
            raise InputError(f"commutator of basis matrices {i + 1},{j + 1} leaves the span")
        if sol:
            brackets[(i + 1, j + 1)] = {c + 1: v for c, v in sol.items()}
    return LieAlgebra(n, brackets, names)


# ---------------------------------------------------------------------------
# basis changes


@dataclass(frozen=True)
class BasisChange:
    """Invertible n x n matrix; column a holds the new basis vector Y_a in old coordinates."""

    matrix: Matrix

    def __post_init__(self):
        object.__setattr__(self, "_inv", inverse(self.matrix))

    @property
    def inverse(self) -> Matrix:
        return self._inv

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "BasisChange":
        n = len(columns)
        return cls(Matrix(columns, n).transpose() if n else Matrix([], 0))


def apply_basis_change(g: LieAlgebra, P: BasisChange | Matrix) -> LieAlgebra:
    """Structure constants of g in the basis given by the columns of P."""
    if isinstance(P, Matrix):
        P = BasisChange(P)
    n = g.dim
    if P.matrix.shape != (n, n):
        raise InputError(f"basis change of shape {P.matrix.shape} for a {n}-dimensional algebra")
    cols = [P.matrix.column(a) for a in range(n)]
    pinv = P.inverse
    brackets = {}
    for a, b in combinations(range(n), 2):
        old = g.bracket(cols[a], cols[b])
        new = pinv @ old
        vec = {k + 1: v for k, v in enumerate(new) if v}
        if vec:
            brackets[(a + 1, b + 1)] = vec
    return LieAlgebra(n, brackets, g.names)


def is_isomorphism_witness(g: LieAlgebra, h: LieAlgebra, P: BasisChange | Matrix) -> bool:
    if g.dim != h.dim:
        return False
    return apply_basis_change(g, P).same_structure(h)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ContractionReport:
    der_g: int
    der_h: int
    derived_g: int
    derived_h: int
    center_g: int
    center_h: int

    @property
    def derOk(self) -> bool:
        return self.der_g < self.der_h

    @property
    def derivedOk(self) -> bool:
        return self.derived_g >= self.derived_h

    @property
    def centerOk(self) -> bool:
        return self.center_g <= self.center_h

    @property
    def all_ok(self) -> bool:
        return self.derOk and self.derivedOk and self.centerOk

    def as_dict(self) -> dict:
        return {
            "derOk": self.derOk,
            "derivedOk": self.derivedOk,
            "centerOk": self.centerOk,
            "dims": {
                "der_g": self.der_g,
                "der_h": self.der_h,
                "derived_g": self.derived_g,
                "derived_h": self.derived_h,
                "center_g": self.center_g,
                "center_h": self.center_h,
            },
        }


def contraction_conditions(g: LieAlgebra, h: LieAlgebra) -> ContractionReport:
    """Necessary conditions for g to contract onto h (g degenerates to h)."""
    if g.dim != h.dim:
        raise InputError(f"dimension mismatch: {g.dim} vs {h.dim}")
    return ContractionReport(
        der_g=derivations(g).dim,
        der_h=derivations(h).dim,
        derived_g=derived_subalgebra(g).dim,
        derived_h=derived_subalgebra(h).dim,
        center_g=center(g).dim,
        center_h=center(h).dim,
    )


# ---------------------------------------------------------------------------
# small standard algebras


def heisenberg(n: int) -> LieAlgebra:
    """h_n, dimension 2n+1: [X_{2k+1}, X_{2k+2}] = X_{2n+1} for k = 0..n-1."""
    top = 2 * n + 1
    return LieAlgebra.validated(top, {(2 * k + 1, 2 * k + 2): {top: ONE} for k in range(n)})


def direct_sum(g: LieAlgebra, h: LieAlgebra) -> LieAlgebra:
    shift = g.dim
    brackets = dict(g.brackets)
    for (i, j), vec in h.brackets.items():
        brackets[(i + shift, j + shift)] = {k + shift: v for k, v in vec.items()}
    return LieAlgebra(g.dim + h.dim, brackets)


def ad_matrices(g: LieAlgebra) -> list[Matrix]:
    return [g.ad_matrix(g.basis_vector(i)) for i in range(1, g.dim + 1)]


def to_vector(sparse: Mapping[int, Fraction], n: int) -> tuple:
    """1-based sparse dict to a dense tuple."""
    return tuple(Fraction(sparse.get(k, ZERO)) for k in range(1, n + 1))


def iter_pairs(n: int) -> Iterable[tuple[int, int]]:
    return combinations(range(1, n + 1), 2)
