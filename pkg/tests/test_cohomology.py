import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from liecoh.cohomology import (
    Cochain,
    Grading,
    bracket_cochain,
    ce_differential,
    ce_differential_direct,
    coboundary_space,
    cochain_space,
    cocycle_space,
    endomorphism_cochain,
    graded_dims,
    h_dim,
    is_coboundary,
    add_cochain,
    linear_deformation,
    nr_square,
    sq1,
)
from liecoh.errors import InputError, JacobiError
from liecoh.family import build_F, catalogue_cocycle, family_grading, params, x2_projection
from liecoh.lie import LieAlgebra, derivations, heisenberg, jacobi_check


def random_cochain(rng, n, q, density=0.3):
    coeffs = {}
    for key in cochain_space(n, q).basis:
        if rng.random() < density:
            coeffs[key] = F(rng.randint(-5, 5), rng.randint(1, 3))
    return Cochain(q, n, coeffs)


def test_cochain_alternation():
    f = Cochain.from_values(2, 3, {(2, 1): {3: 1}})
    assert f(1, 2) == {3: -1}
    assert f(2, 1) == {3: 1}
    assert f(1, 1) == {}
    with pytest.raises(InputError):
        Cochain(2, 3, {((1, 1), 2): 1})


def test_inner_derivation_is_cocycle(f2):
    ad = endomorphism_cochain(f2.ad_matrix(f2.basis_vector(2)))
    assert ce_differential(f2, ad).is_zero()


@pytest.mark.parametrize("p,phi", [(2, [3]), (3, [2, 7]), (4, [2, 9, 20])])
def test_theta_is_delta_of_projection(p, phi):
    par = params(p, phi)
    g = build_F(par)
    theta = catalogue_cocycle(par, "theta")
    assert ce_differential(g, x2_projection(par)) == theta
    assert theta(1, 2) == {1: 1}
    for k in range(1, p):
        assert theta(2, 2 * k + 1) == {2 * k + 1: par.phi[k - 1]}
        assert theta(2, 2 * k + 2) == {2 * k + 2: -(1 + par.phi[k - 1])}
    pre = is_coboundary(g, theta)
    assert pre is not None and ce_differential(g, pre) == theta


@pytest.mark.parametrize("q", [0, 1, 2])
def test_push_matches_direct(f3, q):
    rng = random.Random(q)
    for _ in range(20):
        f = random_cochain(rng, f3.dim, q)
        assert ce_differential(f3, f) == ce_differential_direct(f3, f)


@pytest.mark.parametrize("q", [0, 1, 2])
def test_delta_squared_zero(f3, q):
    rng = random.Random(100 + q)
    for _ in range(20):
        f = random_cochain(rng, f3.dim, q)
        assert ce_differential(f3, ce_differential(f3, f)).is_zero()


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32), st.integers(0, 2))
def test_delta_squared_zero_property(seed, q):
    g = build_F(params(2, [3]))
    f = random_cochain(random.Random(seed), g.dim, q, 0.5)
    assert ce_differential(g, ce_differential(g, f)).is_zero()


def test_cohomology_dims(f2, f3):
    assert h_dim(f3, 1) == 2
    assert h_dim(f3, 2) == 2
    assert cocycle_space(f2, 2).dim == 12
    assert coboundary_space(f2, 2).dim == 11
    assert coboundary_space(f2, 0).dim == 0


def test_z1_is_derivations(f3):
    n = f3.dim
    z1 = cocycle_space(f3, 1)
    assert z1.dim == derivations(f3).dim
    for v in z1.vectors():
        f = Cochain.from_vector(1, n, v)
        m = [[f.value((c,), r) for c in range(1, n + 1)] for r in range(1, n + 1)]
        assert derivations(f3).contains([x for row in m for x in row])


def test_graded_dims(f2, f3):
    d3 = graded_dims(f3, family_grading(3), 2)
    assert {w: z for w, (z, _) in d3.items()} == {-3: 0, -2: 1, -1: 8, 0: 17, 1: 4}
    d2 = graded_dims(f2, family_grading(2), 2)
    z2 = {w: z for w, (z, _) in d2.items() if z}
    assert z2 == {-2: 1, -1: 4, 0: 5, 1: 2}
    assert sum(z for z, _ in d2.values()) == 12
    assert sum(b for _, b in d2.values()) == 11


def test_grading_rejects_inhomogeneous():
    with pytest.raises(InputError):
        Grading((1, 1, 1)).check(heisenberg(1))
    Grading((1, 1, 2)).check(heisenberg(1))


def test_is_coboundary(f3):
    par = params(3, [2, 7])
    assert is_coboundary(f3, catalogue_cocycle(par, "psi_2,2k+1^2k+1", k=1)) is None
    zero = Cochain.zero(2, 6)
    assert is_coboundary(f3, zero).is_zero()
    with pytest.raises(InputError):
        is_coboundary(f3, Cochain(2, 6, {((1, 3), 5): 1}))


def test_nr_square(f3):
    par = params(3, [2, 7])
    assert nr_square(f3, bracket_cochain(f3)).is_zero()
    psi = catalogue_cocycle(par, "psi_2,2k+1^2k+1", k=1)
    assert nr_square(f3, psi).is_zero()
    assert sq1(f3, psi)
    assert nr_square(f3, Cochain.zero(2, 6)).is_zero()
    with pytest.raises(InputError):
        sq1(f3, Cochain(2, 6, {((1, 3), 5): 1}))


def test_linear_deformation(f2, f3):
    psi3 = catalogue_cocycle(params(3, [2, 7]), "psi_2,2k+1^2k+1", k=1)
    assert linear_deformation(f3, psi3, 1).same_structure(build_F(params(3, [3, 7])))
    assert linear_deformation(f3, psi3, 0) == f3
    psi2 = catalogue_cocycle(params(2, [3]), "psi_2,2k+1^2k+1", k=1)
    assert linear_deformation(f2, psi2, F(-1, 2)).same_structure(build_F(params(2, [F(5, 2)])))


def test_linear_deformation_rejects_non_lie():
    g = heisenberg(1)
    psi = Cochain(2, 3, {((1, 3), 2): 1, ((1, 2), 1): 1})
    with pytest.raises(JacobiError) as err:
        linear_deformation(g, psi, 1)
    assert err.value.violations


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32))
def test_deformation_valid_iff_cocycle_and_square_zero(seed):
    g = heisenberg(1)
    rng = random.Random(seed)
    psi = random_cochain(rng, 3, 2, 0.25)
    expected = ce_differential(g, psi).is_zero() and nr_square(g, psi).is_zero()
    # the Jacobiator of g + t psi is quadratic in t with zero constant term
    valid = all(not jacobi_check(add_cochain(g, psi, t)) for t in (1, 2))
    assert valid == expected


def test_abelian_cochains_all_cocycles():
    a = LieAlgebra.abelian(4)
    assert cocycle_space(a, 2).dim == 24
    assert coboundary_space(a, 2).dim == 0
