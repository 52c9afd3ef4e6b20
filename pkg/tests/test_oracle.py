from itertools import combinations

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from hermbranch.calculus import SpinorPolynomial, dirac_z, dirac_zdagger, euclidean_dirac
from hermbranch.exact import GaussianRational, ScalarPolynomial
from hermbranch.oracle import (
    bareiss_rank,
    bihomogeneous_monomials,
    dirac_kernel_dim,
    exponent_vectors,
    hermitian_kernel_dim,
    polynomial_rank,
    rational_rank,
    sparse_rank,
)

matrices = st.integers(1, 6).flatmap(
    lambda c: st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c), min_size=1, max_size=6)
)


@given(matrices)
def test_bareiss_matches_sympy(M):
    assert bareiss_rank(M) == sympy.Matrix(M).rank()


def test_bareiss_edge_cases():
    assert bareiss_rank([]) == 0
    assert bareiss_rank([[0, 0], [0, 0]]) == 0
    assert bareiss_rank([[1, 2], [2, 4]]) == 1
    assert sparse_rank([{0: 1, 5: 2}, {5: 4, 0: 2}, {}]) == 1


def test_rational_rank_complex():
    i = GaussianRational(0, 1)
    one = GaussianRational(1)
    # (1, i) and (i, -1) are dependent over Q(i); over Q they would not be
    assert rational_rank([{0: one, 1: i}, {0: i, 1: -one}]) == 1
    assert rational_rank([{0: one, 1: i}, {0: one, 1: -i}]) == 2
    assert rational_rank([{0: GaussianRational("1/3")}, {0: GaussianRational("1/2")}]) == 1


def test_monomial_counts():
    assert len(exponent_vectors(3, 2)) == 6
    assert len(bihomogeneous_monomials(2, 1, 2)) == 2 * 3


@pytest.mark.parametrize("a,b", [(a, b) for a in range(4) for b in range(4)])
def test_dim2_closed_forms(a, b):
    assert hermitian_kernel_dim(2, a, b, 1) == a + b + 2
    assert hermitian_kernel_dim(2, a, b, 0) == (b + 1 if a == 0 else 0)
    assert hermitian_kernel_dim(2, a, b, 2) == (a + 1 if b == 0 else 0)


def test_out_of_range_grade():
    assert hermitian_kernel_dim(2, 0, 0, 3) == 0


def _states(n, grades, bidegrees):
    out = []
    for r in grades:
        for A in combinations(range(1, n + 1), r):
            for a, b in bidegrees:
                for key in bihomogeneous_monomials(n, a, b):
                    out.append(SpinorPolynomial.state(n, A, ScalarPolynomial.monomial(key[:n], key[n:])))
    return out


def _kernel_dim(states, op):
    """Kernel dimension of op on span(states), via the library's operators and sympy's rank."""
    images = [op(s) for s in states]
    keys = sorted({k for c in images for k in c}, key=repr)
    if not keys:
        return len(states)
    zero = GaussianRational(0)
    M = sympy.Matrix([[sympy.Rational(str(c.get(k, zero).re)) for c in images] for k in keys])
    return len(states) - M.rank()


def _stacked(f):
    out = {("z", k): v for k, v in dirac_z(f).coordinates().items()}
    out.update({("zd", k): v for k, v in dirac_zdagger(f).coordinates().items()})
    return out


@pytest.mark.parametrize("n,a,b,r", [(2, 1, 1, 1), (3, 1, 1, 1), (3, 2, 1, 2), (3, 0, 2, 0), (3, 1, 0, 3)])
def test_hermitian_oracle_independent(n, a, b, r):
    assert hermitian_kernel_dim(n, a, b, r) == _kernel_dim(_states(n, [r], [(a, b)]), _stacked)


@pytest.mark.parametrize("n,k", [(1, 2), (2, 0), (2, 1), (2, 2), (2, 3), (3, 1)])
def test_dirac_oracle_independent(n, k):
    # the Euclidean Dirac operator mixes bidegrees and grades: use the whole degree-k space
    states = _states(n, range(n + 1), [(a, k - a) for a in range(k + 1)])
    assert dirac_kernel_dim(n, k) == _kernel_dim(states, lambda f: euclidean_dirac(f).coordinates())


def test_dirac_kernel_n2():
    assert [dirac_kernel_dim(2, k) for k in range(4)] == [4, 12, 24, 40]


def test_polynomial_rank():
    z = ScalarPolynomial.z
    f = SpinorPolynomial.state(2, (1,), z(2, 1))
    g = SpinorPolynomial.state(2, (1,), z(2, 2))
    assert polynomial_rank([f, g, f + g]) == 2
    assert polynomial_rank([]) == 0
