from fractions import Fraction as F

import pytest

from liecoh.errors import InputError, JacobiError
from liecoh.exact_linalg import Matrix, Subspace
from liecoh.family import build_F, params
from liecoh.lie import (
    BasisChange,
    LieAlgebra,
    apply_basis_change,
    center,
    contraction_conditions,
    derivations,
    derived_subalgebra,
    direct_sum,
    from_maurer_cartan,
    heisenberg,
    inner_derivations,
    is_isomorphism_witness,
    jacobi_check,
    lower_central_series,
    solvable_steps,
)


def test_maurer_cartan_sign_convention():
    g = from_maurer_cartan({1: {(1, 2): 1, (3, 4): 1}, 3: {(2, 3): 3}, 4: {(2, 4): -4}})
    assert g.brackets == {(1, 2): {1: 1}, (2, 3): {3: 3}, (2, 4): {4: -4}, (3, 4): {1: 1}}
    assert g.same_structure(build_F(params(2, [3])))


def test_maurer_cartan_trivial_and_heisenberg():
    assert from_maurer_cartan({}, dim=3).brackets == {}
    h1 = from_maurer_cartan({3: {(1, 2): 1}})
    assert h1.brackets == {(1, 2): {3: 1}}
    assert h1 == heisenberg(1)


def test_maurer_cartan_rejects_non_lie():
    with pytest.raises(JacobiError) as err:
        from_maurer_cartan({3: {(1, 2): 1}, 2: {(1, 3): 1}, 1: {(1, 2): 1}})
    assert err.value.violations


def test_brackets_antisymmetric():
    g = LieAlgebra(2, {(2, 1): {1: 1}})
    assert g.bracket_basis(1, 2) == {1: -1}
    assert g.bracket_basis(2, 1) == {1: 1}
    with pytest.raises(InputError):
        LieAlgebra(2, {(1, 3): {1: 1}})


def test_jacobi_clean_and_broken(f3):
    assert jacobi_check(f3) == []
    assert jacobi_check(LieAlgebra.abelian(4)) == []
    good = LieAlgebra(3, {(1, 2): {3: 1}, (1, 3): {2: 1}})
    assert jacobi_check(good) == []
    bad = LieAlgebra(3, {(1, 2): {3: 1, 1: 1}, (1, 3): {2: 1}})
    # hand expansion: [[X1,X2],X3] = [X3+X1, X3] = X2, other two terms vanish
    assert jacobi_check(bad) == [((1, 2, 3), {2: 1})]


def test_center_and_derived(f2, f3):
    assert center(f3).dim == 0
    d = derived_subalgebra(f2)
    images = [[v for v in f2.bracket(f2.basis_vector(i), f2.basis_vector(j))] for i in range(1, 5) for j in range(1, 5)]
    assert d == Subspace(4, images)
    assert d == Subspace(4, [[1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    assert derived_subalgebra(f3).dim == 5
    assert center(heisenberg(2)) == Subspace(5, [[0, 0, 0, 0, 1]])


def test_series():
    h = heisenberg(1)
    assert [s.dim for s in lower_central_series(h)] == [3, 1, 0]
    assert solvable_steps(h) == 2
    sl2 = LieAlgebra.validated(3, {(1, 2): {3: 1}, (3, 1): {1: 2}, (3, 2): {2: -2}})
    assert solvable_steps(sl2) is None


def test_derivation_dims(f2, f3):
    assert derivations(f2).dim == 5
    assert derivations(f3).dim == 8
    assert derivations(LieAlgebra.abelian(3)).dim == 9
    assert inner_derivations(f3).issubspace(derivations(f3))


def test_basis_change_identity_and_scaling(f2):
    assert apply_basis_change(f2, Matrix.identity(4)) == f2
    scale = Matrix([[2, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    h = apply_basis_change(f2, scale)
    assert h.bracket_basis(3, 4) == {1: F(1, 2)}
    assert not is_isomorphism_witness(f2, f2, scale)
    with pytest.raises(InputError):
        BasisChange(Matrix([[1, 1], [1, 1]]))


def test_basis_change_round_trip(f3):
    P = BasisChange(Matrix([[1 if r == c else (1 if (r, c) == (0, 3) else 0) for c in range(6)] for r in range(6)]))
    h = apply_basis_change(f3, P)
    assert jacobi_check(h) == []
    assert is_isomorphism_witness(f3, h, P)
    back = BasisChange(P.inverse)
    assert apply_basis_change(h, back).same_structure(f3)


def test_contraction_conditions(f2, f3):
    r = contraction_conditions(f3, f3)
    assert (r.derOk, r.derivedOk, r.centerOk) == (False, True, True)
    r = contraction_conditions(f2, LieAlgebra.abelian(4))
    assert (r.derOk, r.derivedOk, r.centerOk) == (True, True, True)
    assert (r.der_g, r.der_h, r.derived_g, r.derived_h) == (5, 16, 3, 0)
    r = contraction_conditions(LieAlgebra.abelian(4), f2)
    assert not r.centerOk
    with pytest.raises(InputError):
        contraction_conditions(f2, f3)


def test_direct_sum_dims(f2):
    r2 = LieAlgebra.validated(2, {(1, 2): {2: 1}})
    g = direct_sum(r2, f2)
    assert g.dim == 6
    assert derivations(g).dim == 7
    assert center(g).dim == 0
