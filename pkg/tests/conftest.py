import sys
from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from hermbranch.calculus import SpinorPolynomial
from hermbranch.exact import GaussianRational, ScalarPolynomial

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gaussians = st.builds(GaussianRational, fractions, fractions)
nonzero_gaussians = gaussians.filter(bool)


def exponents(n, max_deg=2):
    return st.tuples(*[st.integers(0, max_deg)] * (2 * n))


def scalar_polys(n, max_terms=4, max_deg=2):
    return st.dictionaries(exponents(n, max_deg), gaussians, max_size=max_terms).map(
        lambda d: ScalarPolynomial(n, d)
    )


def fock_subsets(n):
    return st.sets(st.integers(1, n), max_size=n).map(lambda s: tuple(sorted(s)))


def spinor_polys(n, max_comps=3, max_deg=2):
    return st.dictionaries(fock_subsets(n), scalar_polys(n, 3, max_deg), max_size=max_comps).map(
        lambda d: SpinorPolynomial(n, d)
    )


def frac(p, q=1):
    return Fraction(p, q)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[num][1])
