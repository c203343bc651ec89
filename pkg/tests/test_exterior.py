from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from liecoh.errors import InputError
from liecoh.exterior import (
    KForm,
    contact_witness,
    differential_1form,
    frobenius_witness,
    is_contact_form,
    is_frobenius_form,
    power,
    top_coefficient,
    wedge,
)
from liecoh.family import build_F, params
from liecoh.lie import LieAlgebra, direct_sum, heisenberg


def w(n, i):
    return KForm.basis_1form(n, i)


def test_differential_examples(f2):
    assert differential_1form(f2, w(4, 1)) == KForm(2, 4, {(1, 2): -1, (3, 4): -1})
    assert differential_1form(LieAlgebra.abelian(3), KForm(1, 3, {1: 2, 3: 1})).is_zero()
    assert differential_1form(heisenberg(1), w(3, 3)) == KForm(2, 3, {(1, 2): -1})
    with pytest.raises(InputError):
        differential_1form(f2, KForm(2, 4, {(1, 2): 1}))


def test_wedge_examples(f2):
    assert wedge(w(4, 1), w(4, 1)).is_zero()
    top = w(4, 1) ^ w(4, 2) ^ w(4, 3) ^ w(4, 4)
    assert top_coefficient(top) == 1
    assert (w(4, 2) ^ w(4, 1)) == KForm(2, 4, {(1, 2): -1})
    d = differential_1form(f2, w(4, 1))
    assert wedge(d, d) == KForm(4, 4, {(1, 2, 3, 4): 2})
    overflow = wedge(top, w(4, 1))
    assert overflow.degree == 4 and overflow.is_zero()


forms = st.integers(0, 3).flatmap(
    lambda k: st.dictionaries(
        st.lists(st.integers(1, 5), min_size=k, max_size=k, unique=True).map(tuple),
        st.integers(-3, 3),
        max_size=4,
    ).map(lambda c, k=k: KForm(k, 5, c))
)


@settings(max_examples=80, deadline=None)
@given(forms, forms)
def test_graded_commutativity(a, b):
    if a.degree + b.degree > 5:
        return
    sign = -1 if (a.degree * b.degree) % 2 else 1
    assert wedge(a, b) == wedge(b, a) * sign


@settings(max_examples=40, deadline=None)
@given(forms, forms, forms)
def test_wedge_associative(a, b, c):
    if a.degree + b.degree + c.degree > 5:
        return
    assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_heisenberg_contact(n):
    h = heisenberg(n)
    top = w(2 * n + 1, 2 * n + 1)
    assert is_contact_form(h, top)
    assert is_contact_form(h, top, d_sign=1)
    assert contact_witness(h) is not None


def test_contact_negative_and_errors():
    assert not is_contact_form(heisenberg(1), w(3, 1))
    with pytest.raises(InputError):
        is_contact_form(LieAlgebra.abelian(4), w(4, 1))


@pytest.mark.parametrize("p,phi", [(2, [3]), (3, [2, 7]), (4, [2, 9, 20])])
def test_frobenius_witness_family(p, phi):
    g = build_F(params(p, phi))
    top = top_coefficient(power(differential_1form(g, w(2 * p, 1)), p))
    assert abs(top) == factorial(p)
    assert frobenius_witness(g) == w(2 * p, 1)


def _top_quadratic(g, coeffs):
    d = differential_1form(g, KForm.from_vector(coeffs))
    return top_coefficient(wedge(d, d))


def test_no_frobenius_form_on_h1_plus_line():
    g = direct_sum(heisenberg(1), LieAlgebra.abelian(1))
    assert frobenius_witness(g, trials=50) is None
    assert frobenius_witness(LieAlgebra.abelian(4)) is None
    # top coefficient of (dω)^2 is a quadratic form in the coefficients of ω;
    # it vanishes identically iff it vanishes on every e_i and e_i + e_j
    for i in range(4):
        for j in range(i, 4):
            v = [0] * 4
            v[i] += 1
            v[j] += 1
            assert _top_quadratic(g, v) == 0


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=6, max_size=6))
def test_predicates_sign_invariant(coeffs):
    g = build_F(params(3, [2, 7]))
    if not any(coeffs):
        return
    form = KForm.from_vector(coeffs)
    assert is_frobenius_form(g, form) == is_frobenius_form(g, form, d_sign=1)
    h = heisenberg(2)
    f5 = KForm.from_vector(coeffs[:5]) if any(coeffs[:5]) else w(5, 5)
    assert is_contact_form(h, f5) == is_contact_form(h, f5, d_sign=1)


def test_json_round_trip():
    f = KForm(1, 4, {1: 1, 4: -3})
    assert KForm.from_json(f.to_json(), 4) == f
    g = KForm.from_json({"1": "1", "3": "-2/5"}, 4)
    assert g.to_json() == {"1": "1", "3": "-2/5"}
