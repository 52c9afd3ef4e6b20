from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hermbranch.bases import basis, ratio
from hermbranch.calculus import SpaceLabel, SpinorPolynomial, euclidean_dirac, is_hermitian_monogenic, label_of
from hermbranch.exact import ScalarPolynomial
from hermbranch.factors import (
    OperatorPolynomial,
    SideConditionError,
    apply_factor,
    branch_case,
    fischer_factor,
    last_vector,
    s_poly,
    tilde_vector,
    x_factor,
    z_vector,
    zdagger_vector,
)
from hermbranch.fock import ANNIHILATE, CREATE
from hermbranch.golden import monomial_states

Op = OperatorPolynomial
z = ScalarPolynomial.z
zb = ScalarPolynomial.zbar


def span_matches(X, Y, space):
    """X f is a fixed nonzero multiple of Y f on every f in space."""
    c = None
    for f in space:
        u, v = apply_factor(X, f), apply_factor(Y, f)
        if not u and not v:
            continue
        k = ratio(u, v)
        if not k or (c is not None and k != c):
            return False
        c = k
    return c is not None


class TestS:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_degree_zero_is_identity(self, n):
        for j in range(3):
            for i in range(3):
                assert s_poly(0, j, i, n) == Op.identity(n)

    def test_degree_minus_one_is_zero(self):
        assert not s_poly(-1, 0, 0, 2)

    def test_s100_n2(self):
        expect = (Op.f(2, 1) * z(2, 1) - Op.fd(2, 1) * zb(2, 1)) - (Op.f(2, 2) * z(2, 2) - Op.fd(2, 2) * zb(2, 2))
        assert s_poly(1, 0, 0, 2) == expect
        assert tilde_vector(2) - last_vector(2) == expect

    @pytest.mark.parametrize("n", [2, 3])
    def test_s200_on_vacuum_matches_displayed_component(self, n):
        tsq = ScalarPolynomial.norm_sq(n, n - 1)
        shown = Op.poly((z(n, n) * zb(n, n)).scale(n - 1) - tsq) - last_vector(n) * tilde_vector(n)
        space = [SpinorPolynomial.state(n, A) for r in range(n) for A in combinations(range(1, n), r)]
        assert span_matches(s_poly(2, 0, 0, n), shown, space)

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            s_poly(0, 0, 0, 1)
        with pytest.raises(ValueError):
            s_poly(-2, 0, 0, 2)
        with pytest.raises(ValueError):
            s_poly(1, -1, 0, 2)


class TestX:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_trivial_factors(self, n):
        for r in range(1, n):
            assert x_factor(n, r, r, 0, 0, 0, 0) == Op.identity(n, (n - 1) * r)
            assert x_factor(n, r, r, 1, 0, 1, 0) == Op.identity(n, n * (r + 1))
            assert x_factor(n, r, r - 1, 0, 0, 0, 0) == Op.fd(n, n).scale((n - 1) * (n - r))

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_m10_decomposition(self, n):
        for r in range(1, n):
            shown = Op.fd(n, n) * z_vector(n, tilde=True) + Op.poly(z(n, n)).scale(r)
            assert span_matches(x_factor(n, r, r, 1, 0, 0, 0), shown, monomial_states(n - 1, 0, 0, r))

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_m01_decomposition(self, n):
        for r in range(1, n):
            shown = zdagger_vector(n, tilde=True) - (Op.fd(n, n) * zb(n, n)).scale(n - r)
            space = monomial_states(n - 1, 0, 0, r - 1)
            assert span_matches(x_factor(n, r, r - 1, 0, 1, 0, 0), shown, space)

    def test_r_minus_one_factor_on_state(self):
        n, r = 3, 2
        s = SpinorPolynomial.state(n, (1,))
        assert apply_factor(x_factor(n, r, r - 1, 0, 0, 0, 0), s) == s.fd(n).scale((n - 1) * (n - r))

    def test_case_i_with_ell_zero_is_first_term(self):
        n, r = 3, 1
        for c, d, b in [(0, 0, 1), (1, 0, 2), (0, 1, 2)]:
            a = c  # u = 0
            X = x_factor(n, r, r, a, b, c, d)
            j = b - d
            assert X == (Op.poly(zb(n, n) ** j)).scale((n + c + d - 1) * (c + r))

    @pytest.mark.parametrize("n", [2, 3])
    def test_mapping_property(self, n):
        for r in range(1, n):
            for a in range(3):
                for b in range(3):
                    for s in (r, r - 1):
                        for c in range(a + 1):
                            for d in range(b + 1):
                                try:
                                    X = x_factor(n, r, s, a, b, c, d)
                                except SideConditionError:
                                    continue
                                if not SpaceLabel(n - 1, c, d, s).valid:
                                    continue
                                for e in basis(n - 1, c, d, s):
                                    g = apply_factor(X, e)
                                    assert g, (r, s, a, b, c, d)
                                    assert is_hermitian_monogenic(g)
                                    assert label_of(g) == SpaceLabel(n, a, b, r)


class TestCases:
    def test_dispatch(self):
        assert branch_case(3, 1, 1, 2, 2, 1, 1).tag == "i"  # u = v goes to (i)
        assert branch_case(3, 1, 1, 2, 1, 0, 0).tag == "iii"
        assert branch_case(3, 1, 0, 1, 2, 0, 0).tag == "ii"
        assert branch_case(3, 1, 0, 1, 1, 0, 0).tag == "iv"  # u = v goes to (iv)
        assert branch_case(3, 0, 0, 0, 2, 0, 1).tag == "r0"
        assert branch_case(3, 3, 2, 2, 0, 1, 0).tag == "rn"

    @pytest.mark.parametrize("args", [
        (3, 1, 1, 2, 2, 1, 1, "iii"),  # u <= v
        (3, 1, 0, 1, 1, 0, 0, "ii"),   # u >= v
        (3, 1, 1, 1, 0, 2, 0, None),   # c > a
        (3, 1, 3, 1, 0, 0, 0, None),   # bad child grade
        (3, 0, 0, 1, 0, 0, 0, None),   # r = 0 needs a = 0
        (3, 3, 2, 0, 1, 0, 0, None),   # r = n needs b = 0
        (1, 0, 0, 0, 0, 0, 0, None),
        (3, 1, 1, 1, 0, 0, 0, "r0"),
    ])
    def test_side_conditions(self, args):
        with pytest.raises(SideConditionError):
            branch_case(*args)

    def test_describe(self):
        assert "case i" in branch_case(3, 1, 1, 0, 0, 0, 0).describe()


class TestFischer:
    def test_n2_example(self):
        assert fischer_factor(2, 0, 0, 1) == z_vector(2) + zdagger_vector(2)

    def test_range(self):
        with pytest.raises(ValueError):
            fischer_factor(2, 0, 0, 0)

    @pytest.mark.parametrize("a,b", [(a, b) for a in range(3) for b in range(3)])
    def test_images_are_monogenic(self, a, b):
        X = fischer_factor(2, a, b, 1)
        for e in basis(2, a, b, 1):
            assert not euclidean_dirac(apply_factor(X, e))
        assert not apply_factor(X, SpinorPolynomial.zero(2))


class TestOperatorAlgebra:
    def test_identity_application(self):
        f = SpinorPolynomial.state(2, (1,), z(2, 2))
        assert apply_factor(Op.identity(2), f) == f

    def test_embedding(self):
        f = SpinorPolynomial.state(1, (1,), z(1, 1))
        assert apply_factor(Op.fd(2, 2), f) == -SpinorPolynomial.state(2, (1, 2), z(2, 1))  # fd_2 {1} = -{1,2}
        with pytest.raises(ValueError):
            apply_factor(Op.identity(1), SpinorPolynomial.state(2))

    def test_mode_range(self):
        with pytest.raises(IndexError):
            Op.fd(2, 3)

    def test_normal_order_examples(self):
        assert (Op.f(2, 1) * Op.fd(2, 1)).normal_ordered() == Op.identity(2) - Op.fd(2, 1) * Op.f(2, 1)
        assert not (Op.fd(2, 2) * Op.fd(2, 2)).normal_ordered()
        assert (Op.f(2, 2) * Op.f(2, 1)).normal_ordered() == -(Op.f(2, 1) * Op.f(2, 2))

    letters = st.lists(st.tuples(st.sampled_from([CREATE, ANNIHILATE]), st.integers(1, 3)), max_size=5)

    @given(letters)
    def test_normal_order_preserves_action(self, w):
        X = Op.word(3, tuple(w))
        N = X.normal_ordered()
        for r in range(4):
            for f in monomial_states(3, 0, 0, r):
                assert apply_factor(X, f) == apply_factor(N, f)
