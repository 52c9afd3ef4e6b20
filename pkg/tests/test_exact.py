from fractions import Fraction

import numpy as np
import pytest
from conftest import gaussians, nonzero_gaussians, scalar_polys
from hypothesis import given
from hypothesis import strategies as st

from hermbranch.exact import GaussianRational, ScalarPolynomial, sphere_moment

G = GaussianRational
z = ScalarPolynomial.z
zb = ScalarPolynomial.zbar


class TestGaussianRational:
    def test_modulus_identity(self):
        assert G(1, 1) * G(1, -1) == 2

    def test_conj(self):
        assert G(Fraction(3, 2), Fraction(1, 4)).conj() == G(Fraction(3, 2), Fraction(-1, 4))

    def test_sum_of_reals(self):
        assert G(Fraction(1, 3)) + G(Fraction(1, 6)) == G(Fraction(1, 2))

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            G(1) / G(0)

    def test_parse_and_str(self):
        assert G.parse("3/4", "-1/2") == G(Fraction(3, 4), Fraction(-1, 2))
        assert str(G(0, 1)) == "1i"

    @given(gaussians, gaussians, gaussians)
    def test_field_axioms(self, x, y, w):
        assert x + y == y + x
        assert x * y == y * x
        assert (x + y) * w == x * w + y * w
        assert (x * y) * w == x * (y * w)
        assert (x * y).conj() == x.conj() * y.conj()

    @given(gaussians, nonzero_gaussians)
    def test_division_inverts_multiplication(self, x, y):
        assert (x / y) * y == x

    @given(gaussians)
    def test_hash_consistent_with_int(self, x):
        if not x.im and x.re.denominator == 1:
            assert hash(x) == hash(int(x.re))


class TestScalarPolynomial:
    def test_products(self):
        n = 2
        assert z(n, 1) * zb(n, 1) == ScalarPolynomial.monomial((1, 0), (1, 0))
        assert (z(n, 1) + z(n, 2)) * (z(n, 1) - z(n, 2)) == z(n, 1) ** 2 - z(n, 2) ** 2
        sq = ScalarPolynomial.norm_sq(n) ** 2
        expect = (z(n, 1) * zb(n, 1)) ** 2 + (z(n, 1) * zb(n, 1) * z(n, 2) * zb(n, 2)).scale(2) + (
            z(n, 2) * zb(n, 2)
        ) ** 2
        assert sq == expect

    def test_derivatives(self):
        n = 2
        assert (z(n, 1) ** 2 * zb(n, 2)).derive("z", 1) == (z(n, 1) * zb(n, 2)).scale(2)
        assert z(n, 1).derive("zbar", 2).is_zero()
        assert (z(n, 2) * zb(n, 2)).derive("z", 2) == zb(n, 2)

    def test_bidegree_split(self):
        n = 2
        p = z(n, 1) * zb(n, 2) + z(n, 1) ** 2
        assert p.bidegree_split() == {(1, 1): z(n, 1) * zb(n, 2), (2, 0): z(n, 1) ** 2}
        assert ScalarPolynomial.zero(n).bidegree_split() == {}
        q = z(n, 1) * zb(n, 1) * z(n, 2)
        assert q.bidegree_split() == {(2, 1): q}

    def test_variable_range_checked(self):
        with pytest.raises(ValueError):
            z(2, 3)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            z(2, 1) + z(3, 1)

    def test_embed_pads_both_halves(self):
        p = ScalarPolynomial.monomial((1, 2), (3, 0))
        assert p.embed(3) == ScalarPolynomial.monomial((1, 2, 0), (3, 0, 0))

    @given(scalar_polys(2), scalar_polys(2), scalar_polys(2))
    def test_ring_axioms(self, p, q, r):
        assert p + q == q + p
        assert p * q == q * p
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert (p - p).is_zero()

    @given(scalar_polys(2), scalar_polys(2), st.sampled_from(["z", "zbar"]), st.integers(1, 2))
    def test_leibniz(self, p, q, kind, j):
        assert (p * q).derive(kind, j) == p.derive(kind, j) * q + p * q.derive(kind, j)

    @given(scalar_polys(2))
    def test_bidegree_split_recombines(self, p):
        acc = ScalarPolynomial.zero(2)
        for part in p.bidegree_split().values():
            acc = acc + part
        assert acc == p

    @given(scalar_polys(2), st.complex_numbers(max_magnitude=2, allow_nan=False, allow_infinity=False),
           st.complex_numbers(max_magnitude=2, allow_nan=False, allow_infinity=False))
    def test_conj_is_complex_conjugation(self, p, w1, w2):
        v = p.conj().evaluate((w1, w2))
        assert abs(v - p.evaluate((w1, w2)).conjugate()) < 1e-6 * (1 + abs(v))


def _monte_carlo_moment(p, samples=400_000, seed=7):
    # uniform points on S^{2n-1} from normalized complex Gaussians
    n = len(p)
    rng = np.random.default_rng(seed)
    w = rng.normal(size=(samples, n)) + 1j * rng.normal(size=(samples, n))
    w /= np.linalg.norm(w, axis=1, keepdims=True)
    vals = np.prod(np.abs(w) ** (2 * np.array(p)), axis=1)
    return vals.mean(), vals.std() / np.sqrt(samples)


@pytest.mark.parametrize("p", [(1, 0), (2, 1), (1, 1, 0), (2, 0, 1), (3, 0)])
def test_sphere_moment_matches_monte_carlo(p):
    mean, err = _monte_carlo_moment(p)
    assert abs(float(sphere_moment(p)) - mean) < 5 * err + 1e-4


def test_sphere_moment_small_cases():
    assert sphere_moment((5,)) == 1  # |z| = 1 on the circle
    assert sphere_moment((1, 0)) == Fraction(1, 2)
    assert sphere_moment((0, 0, 0)) == 1
