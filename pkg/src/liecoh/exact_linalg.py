"""
Exact rational linear algebra.

Scalars are ``fractions.Fraction``. Matrices are immutable dense grids; the
elimination kernels work on sparse rows (``dict`` column -> value) internally,
which is what the cochain complexes produce anyway.

Subspaces are stored by their reduced row-echelon basis, so two subspaces are
equal exactly when their basis matrices are equal.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .errors import InputError

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text) -> Fraction:
    """Parse ``"n"`` or ``"n/d"`` (d > 0). Ints and Fractions pass through."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise InputError(f"not a rational literal: {text!r}")
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise InputError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise InputError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(x) -> str:
    """Canonical string: ``"n"`` or ``"n/d"`` with d > 0, reduced."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class Matrix:
    """Immutable dense matrix of Fractions, row-major."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Iterable], cols: int | None = None):
        grid = tuple(tuple(Fraction(x) for x in row) for row in data)
        if cols is None:
            cols = len(grid[0]) if grid else 0
        for row in grid:
            if len(row) != cols:
                raise InputError("ragged matrix rows")
        self.rows = len(grid)
        self.cols = cols
        self._data = grid

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls([[ZERO] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_sparse(cls, rows: Sequence[dict], cols: int) -> "Matrix":
        out = []
        for r in rows:
            dense = [ZERO] * cols
            for c, v in r.items():
                dense[c] = v
            out.append(dense)
        return cls(out, cols)

    def to_sparse(self) -> list[dict]:
        return [{c: v for c, v in enumerate(row) if v} for row in self._data]

    def tolist(self) -> list[list[Fraction]]:
        return [list(row) for row in self._data]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def row(self, i: int) -> tuple:
        return self._data[i]

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self._data)

    def __getitem__(self, idx):
        if isinstance(idx, tuple):
            i, j = idx
            return self._data[i][j]
        return self._data[idx]

    def __iter__(self):
        return iter(self._data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.cols == other.cols and self._data == other._data

    def __hash__(self):
        return hash((self.cols, self._data))

    def __repr__(self):
        body = "; ".join(" ".join(format_rational(x) for x in row) for row in self._data)
        return f"Matrix({self.rows}x{self.cols}: [{body}])"

    def transpose(self) -> "Matrix":
        return Matrix([self.column(j) for j in range(self.cols)], self.rows)

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise InputError(f"shape mismatch {self.shape} @ {other.shape}")
            ocols = [other.column(j) for j in range(other.cols)]
            return Matrix(
                [[sum((a * b for a, b in zip(row, col)), ZERO) for col in ocols] for row in self._data],
                other.cols,
            )
        vec = tuple(Fraction(x) for x in other)
        if len(vec) != self.cols:
            raise InputError(f"vector of length {len(vec)} against {self.cols} columns")
        return tuple(sum((a * b for a, b in zip(row, vec)), ZERO) for row in self._data)

    def __mul__(self, scalar):
        s = Fraction(scalar)
        return Matrix([[s * x for x in row] for row in self._data], self.cols)

    __rmul__ = __mul__

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise InputError(f"shape mismatch {self.shape} + {other.shape}")
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)], self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other * -1

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise InputError(f"column mismatch {self.cols} vs {other.cols}")
        return Matrix(self._data + other._data, self.cols)


# ---------------------------------------------------------------------------
# elimination kernels (sparse rows)


def _sparse_rref(rows: Iterable[dict], ncols: int) -> tuple[list[int], dict[int, dict]]:
    """Reduce sparse rows; returns (sorted pivot columns, pivot col -> row).

    The pivot rows are kept fully reduced against each other after every
    insertion, so each one is 1 at its own pivot and 0 at all others.
    """
    pivots: dict[int, dict] = {}
    for src in rows:
        row = {c: Fraction(v) for c, v in src.items() if v}
        if not row:
            continue
        for pc in sorted(set(row).intersection(pivots)):
            f = row.get(pc)
            if not f:
                continue
            for c, v in pivots[pc].items():
                nv = row.get(c, ZERO) - f * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
        if not row:
            continue
        lead = min(row)
        inv = 1 / row[lead]
        if inv != 1:
            row = {c: v * inv for c, v in row.items()}
        for prow in pivots.values():
            f = prow.get(lead)
            if not f:
                continue
            for c, v in row.items():
                nv = prow.get(c, ZERO) - f * v
                if nv:
                    prow[c] = nv
                else:
                    prow.pop(c, None)
        pivots[lead] = row
    return sorted(pivots), pivots


def _kernel_from_rref(pivot_cols: list[int], pivots: dict[int, dict], ncols: int) -> list[dict]:
    pivset = set(pivot_cols)
    free = [c for c in range(ncols) if c not in pivset]
    # column -> [(pivot col, coefficient)] for the free columns
    by_free: dict[int, list] = {c: [] for c in free}
    for pc in pivot_cols:
        for c, v in pivots[pc].items():
            if c != pc:
                by_free[c].append((pc, v))
    basis = []
    for fc in free:
        vec = {fc: ONE}
        for pc, v in by_free[fc]:
            vec[pc] = -v
        basis.append(vec)
    return basis


def _subspace_from_sparse(rows: Iterable[dict], ncols: int) -> "Subspace":
    pcols, piv = _sparse_rref(rows, ncols)
    return Subspace._from_rref(ncols, [piv[c] for c in pcols])


def _kernel_sparse(rows: Sequence[dict], ncols: int) -> "Subspace":
    pcols, piv = _sparse_rref(rows, ncols)
    return _subspace_from_sparse(_kernel_from_rref(pcols, piv, ncols), ncols)


def _transpose_sparse(rows: Sequence[dict], ncols: int) -> list[dict]:
    out: list[dict] = [dict() for _ in range(ncols)]
    for i, r in enumerate(rows):
        for c, v in r.items():
            out[c][i] = v
    return out


def rref(m: Matrix) -> tuple[Matrix, int]:
    """Reduced row-echelon form; zero rows are kept at the bottom."""
    pcols, piv = _sparse_rref(m.to_sparse(), m.cols)
    rank = len(pcols)
    out = [piv[c] for c in pcols] + [{} for _ in range(m.rows - rank)]
    return Matrix.from_sparse(out, m.cols), rank


def rank(m: Matrix) -> int:
    return len(_sparse_rref(m.to_sparse(), m.cols)[0])


def gauss_rank(m: Matrix) -> int:
    """Plain dense Gaussian elimination over Fractions (rank only)."""
    a = m.tolist()
    nrows, ncols = m.rows, m.cols
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, nrows):
            if a[i][c]:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == nrows:
            break
    return r


def bareiss_rank(m: Matrix) -> int:
    """Rank by fraction-free (Bareiss) elimination on integer-scaled rows."""
    return bareiss_rank_sparse(m.to_sparse(), m.cols)


def bareiss_rank_sparse(rows: Sequence[dict], ncols: int) -> int:
    a = []
    for row in rows:
        if not row:
            continue
        den = lcm(*(Fraction(x).denominator for x in row.values()))
        a.append({c: int(Fraction(x) * den) for c, x in row.items() if x})
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i].get(c)), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        ar = a[r]
        pv = ar[c]
        for i in range(r + 1, len(a)):
            ai = a[i]
            f = ai.get(c, 0)
            new = {}
            for j in set(ai).union(ar) if f else ai:
                if j <= c:
                    continue
                q, rem = divmod(pv * ai.get(j, 0) - f * ar.get(j, 0), prev)
                assert rem == 0, "Bareiss division not exact"
                if q:
                    new[j] = q
            a[i] = new
        prev = pv
        r += 1
    return r


def kernel_basis(m: Matrix) -> "Subspace":
    """Right kernel {v : m v = 0} as a subspace of Q^cols."""
    return _kernel_sparse(m.to_sparse(), m.cols)


def solve(m: Matrix, b: Sequence) -> tuple | None:
    """A particular solution of m x = b (free variables set to 0), or None."""
    b = [Fraction(x) for x in b]
    if len(b) != m.rows:
        raise InputError(f"right-hand side has length {len(b)}, expected {m.rows}")
    x = _solve_sparse(m.to_sparse(), m.cols, b)
    if x is None:
        return None
    return tuple(x.get(c, ZERO) for c in range(m.cols))


def _solve_sparse(rows: Sequence[dict], ncols: int, b: Sequence) -> dict | None:
    aug = []
    for r, bi in zip(rows, b):
        row = dict(r)
        if bi:
            row[ncols] = bi
        aug.append(row)
    pcols, piv = _sparse_rref(aug, ncols + 1)
    if pcols and pcols[-1] == ncols:
        return None
    return {pc: piv[pc][ncols] for pc in pcols if piv[pc].get(ncols)}


def inverse(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise InputError(f"cannot invert a {m.rows}x{m.cols} matrix")
    n = m.rows
    aug = []
    for i, row in enumerate(m.to_sparse()):
        row = dict(row)
        row[n + i] = ONE
        aug.append(row)
    pcols, piv = _sparse_rref(aug, 2 * n)
    if pcols[:n] != list(range(n)):
        raise InputError("matrix is singular")
    return Matrix([[piv[i].get(n + j, ZERO) for j in range(n)] for i in range(n)], n)


# ---------------------------------------------------------------------------


class Subspace:
    """Linear subspace of Q^ambient_dim, stored by its RREF basis."""

    __slots__ = ("ambient_dim", "_rows")

    def __init__(self, ambient_dim: int, vectors: Iterable[Sequence] = ()):
        rows = []
        for v in vectors:
            v = tuple(v)
            if len(v) != ambient_dim:
                raise InputError(f"vector of length {len(v)} in a {ambient_dim}-dim space")
            rows.append({c: Fraction(x) for c, x in enumerate(v) if x})
        pcols, piv = _sparse_rref(rows, ambient_dim)
        self.ambient_dim = ambient_dim
        self._rows = tuple(tuple(sorted(piv[c].items())) for c in pcols)

    @classmethod
    def _from_rref(cls, ambient_dim: int, rows: list[dict]) -> "Subspace":
        obj = cls.__new__(cls)
        obj.ambient_dim = ambient_dim
        obj._rows = tuple(tuple(sorted(r.items())) for r in rows)
        return obj

    @classmethod
    def from_sparse(cls, ambient_dim: int, rows: Iterable[dict]) -> "Subspace":
        return _subspace_from_sparse(rows, ambient_dim)

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls._from_rref(n, [{i: ONE} for i in range(n)])

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls._from_rref(n, [])

    @property
    def dim(self) -> int:
        return len(self._rows)

    def __len__(self):
        return self.dim

    @property
    def basis(self) -> Matrix:
        return Matrix.from_sparse([dict(r) for r in self._rows], self.ambient_dim)

    def sparse_basis(self) -> list[dict]:
        return [dict(r) for r in self._rows]

    def vectors(self) -> list[tuple]:
        return [tuple(row) for row in self.basis]

    @property
    def pivots(self) -> list[int]:
        return [r[0][0] for r in self._rows]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self._rows == other._rows

    def __hash__(self):
        return hash((self.ambient_dim, self._rows))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"

    def _check(self, other: "Subspace"):
        if self.ambient_dim != other.ambient_dim:
            raise InputError(f"ambient dimensions differ: {self.ambient_dim} vs {other.ambient_dim}")

    def contains(self, v) -> bool:
        if isinstance(v, dict):
            vec = {c: Fraction(x) for c, x in v.items() if x}
        else:
            v = tuple(v)
            if len(v) != self.ambient_dim:
                raise InputError(f"vector of length {len(v)} in a {self.ambient_dim}-dim space")
            vec = {c: Fraction(x) for c, x in enumerate(v) if x}
        # reduce against the RREF basis: the pivot entries fix the coefficients
        for row in self._rows:
            pc = row[0][0]
            f = vec.get(pc)
            if not f:
                continue
            for c, x in row:
                nv = vec.get(c, ZERO) - f * x
                if nv:
                    vec[c] = nv
                else:
                    vec.pop(c, None)
        return not vec

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def issubspace(self, other: "Subspace") -> bool:
        self._check(other)
        return all(other.contains(dict(r)) for r in self._rows)

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return _subspace_from_sparse(self.sparse_basis() + other.sparse_basis(), self.ambient_dim)

    __add__ = sum

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        a, b = self.sparse_basis(), other.sparse_basis()
        if not a or not b:
            return Subspace.zero(self.ambient_dim)
        # (x, y) with sum_i x_i a_i - sum_j y_j b_j = 0
        na = len(a)
        cols = [dict(r) for r in a] + [{c: -v for c, v in r.items()} for r in b]
        eqs = _transpose_sparse(cols, self.ambient_dim)
        ker = _kernel_sparse(eqs, len(cols))
        out = []
        for coeffs in ker.sparse_basis():
            vec: dict = {}
            for i, x in coeffs.items():
                if i >= na:
                    continue
                for c, v in a[i].items():
                    nv = vec.get(c, ZERO) + x * v
                    if nv:
                        vec[c] = nv
                    else:
                        vec.pop(c, None)
            out.append(vec)
        return _subspace_from_sparse(out, self.ambient_dim)

    __and__ = intersect


def contains(s: Subspace, v) -> bool:
    return s.contains(v)


def subspace_sum(s: Subspace, t: Subspace) -> Subspace:
    return s.sum(t)


def intersect(s: Subspace, t: Subspace) -> Subspace:
    return s.intersect(t)


def span(vectors: Iterable[Sequence], ambient_dim: int) -> Subspace:
    return Subspace(ambient_dim, vectors)
