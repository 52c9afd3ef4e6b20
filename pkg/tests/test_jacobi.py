from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from hermbranch.exact import ScalarPolynomial
from hermbranch.jacobi import (
    Q,
    binom,
    check_jacobi_recurrences,
    check_q_identities,
    homogenized,
    jacobi,
    qpoly,
)

z = ScalarPolynomial.z
zb = ScalarPolynomial.zbar
small = st.integers(0, 5)


def test_low_degrees():
    assert jacobi(0, 3, 1).coeffs == (1,)
    assert jacobi(-1, 2, 2).coeffs == ()
    for al, be in [(0, 0), (2, 1), (3, 5)]:
        p = jacobi(1, al, be)
        for t in (Fraction(-1), Fraction(0), Fraction(1, 3), Fraction(2)):
            assert p(t) == (1 + be) * (t - 1) / 2 + (1 + al) * (t + 1) / 2


def test_negative_degree_rejected():
    with pytest.raises(ValueError):
        jacobi(-2, 0, 0)
    with pytest.raises(ValueError):
        qpoly(0, 0, 0, 1)


@given(st.integers(0, 6), small, small)
def test_matches_sympy(ell, al, be):
    t = sympy.Symbol("t")
    ref = sympy.Poly(sympy.jacobi(ell, al, be, t), t).all_coeffs()[::-1]
    assert [Fraction(int(c.p), int(c.q)) for c in ref] == list(jacobi(ell, al, be).coeffs)


@given(st.integers(0, 6), small, small)
def test_value_at_one(ell, al, be):
    assert jacobi(ell, al, be)(1) == binom(ell + al, ell)


def test_q_examples():
    assert Q(0, 2, 3, 2) == ScalarPolynomial.const(2, 1)
    for al, be in [(0, 0), (1, 2)]:
        assert Q(1, al, be, 2) == (z(2, 2) * zb(2, 2)).scale(1 + al) - (z(2, 1) * zb(2, 1)).scale(1 + be)
    assert Q(1, 0, 0, 3) == z(3, 3) * zb(3, 3) - z(3, 1) * zb(3, 1) - z(3, 2) * zb(3, 2)
    assert not Q(-1, 0, 0, 2)


@pytest.mark.parametrize("n", [2, 3])
def test_homogenized_equals_q(n):
    # cross-multiplication: |z|^{2l} P_l(t) cleared of denominators is Q
    for ell in range(6):
        for al in range(3):
            for be in range(3):
                assert homogenized(jacobi(ell, al, be), n) == Q(ell, al, be, n)


def test_q_is_bihomogeneous():
    for ell in range(4):
        assert Q(ell, 1, 2, 3).bidegree() in (None, (ell, ell))


def test_identity_i_example():
    # d/dz1 (z2 zb2 - z1 zb1) = -zb1 = -(1+0) zb1 Q_0
    assert Q(1, 0, 0, 2).derive("z", 1) == -zb(2, 1)
    assert check_q_identities(1, 0, 0).ok


def test_full_grids():
    q = check_q_identities(6, 6, 6)
    r = check_jacobi_recurrences(6, 6, 6)
    assert q.ok and r.ok
    assert len(q.items) > 0 and len(r.items) > 0


def test_recurrence_example():
    rep = check_jacobi_recurrences(1, 2, 2)
    names = {it.name: it.passed for it in rep.items}
    assert names["(i) l=1 alpha=2 beta=2"] and names["(iii) l=1 alpha=2 beta=2"]


def test_generalized_binomial():
    assert binom(5, 2) == 10
    assert binom(-1, 2) == 1
    assert binom(3, -1) == 0
