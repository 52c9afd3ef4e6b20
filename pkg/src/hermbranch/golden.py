"""The explicitly displayed low-degree embedding factors, as printed.

Each entry gives the factor for one (a,b;c,d) and child grade s, in one or two
printed forms (the S form, and where given the simplified form with P_0 = 1).
Two factors are compared on every S_{n-1}^(s)-valued monomial of bidegree
(c,d): the images must agree up to one common nonzero scalar.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, List, Optional, Tuple

from .bases import ratio
from .calculus import SpinorPolynomial
from .exact import GaussianRational, ScalarPolynomial
from .factors import (
    OperatorPolynomial,
    apply_factor,
    s_poly,
    x_factor,
    z_vector,
    zdagger_vector,
)
from .oracle import bihomogeneous_monomials
from .report import Report

Form = Callable[[int, int], OperatorPolynomial]  # (n, r) -> factor


@dataclass(frozen=True)
class GoldenFactor:
    name: str
    a: int
    b: int
    c: int
    d: int
    same_grade: bool  # s = r when True, s = r-1 otherwise
    forms: Tuple[Tuple[str, Form], ...]


def _id(n):
    return OperatorPolynomial.identity(n)


def _fd(n):
    return OperatorPolynomial.fd(n, n)


def _f(n):
    return OperatorPolynomial.f(n, n)


def _zn(n):
    return ScalarPolynomial.z(n, n)


def _zbn(n):
    return ScalarPolynomial.zbar(n, n)


def _zt(n):
    return z_vector(n, tilde=True)


def _ztd(n):
    return zdagger_vector(n, tilde=True)


GOLDEN_FACTORS: List[GoldenFactor] = [
    GoldenFactor("X_{0,0;0,0}^{r,r}", 0, 0, 0, 0, True, (
        ("S", lambda n, r: s_poly(0, 0, 0, n).scale((n - 1) * r)),
    )),
    GoldenFactor("X_{0,0;0,0}^{r,r-1}", 0, 0, 0, 0, False, (
        ("S", lambda n, r: (s_poly(0, 0, 0, n) * _fd(n)).scale((n - 1) * (n - r))),
    )),
    GoldenFactor("X_{1,0;0,0}^{r,r}", 1, 0, 0, 0, True, (
        ("S", lambda n, r: s_poly(0, 0, 1, n) * _fd(n) * (_zt(n).scale(n - 1 - r) + _ztd(n).scale(r))
         - (s_poly(1, 0, 0, n) * _fd(n)).scale(r)),
        ("P", lambda n, r: (_fd(n) * _zt(n)).scale(n - 1) + (_f(n) * _fd(n) * _zn(n)).scale(r * (n - 1))),
    )),
    GoldenFactor("X_{1,0;0,0}^{r,r-1}", 1, 0, 0, 0, False, (
        ("S", lambda n, r: (s_poly(0, 1, 0, n) * _fd(n) * _zn(n)).scale((n - 1) * (n - r))),
        ("P", lambda n, r: (_fd(n) * _zn(n)).scale((n - 1) * (n - r))),
    )),
    GoldenFactor("X_{1,0;1,0}^{r,r}", 1, 0, 1, 0, True, (
        ("S", lambda n, r: s_poly(0, 0, 1, n).scale(n * (r + 1))),
        ("P", lambda n, r: _id(n).scale(n * (r + 1))),
    )),
    GoldenFactor("X_{1,0;1,0}^{r,r-1}", 1, 0, 1, 0, False, (
        ("S", lambda n, r: (s_poly(0, 0, 1, n) * _fd(n)).scale(n * (n - r))),
        ("P", lambda n, r: _fd(n).scale(n * (n - r))),
    )),
    GoldenFactor("X_{0,1;0,0}^{r,r}", 0, 1, 0, 0, True, (
        ("S", lambda n, r: (s_poly(0, 1, 0, n) * _zbn(n)).scale((n - 1) * r)),
        ("P", lambda n, r: OperatorPolynomial.poly(_zbn(n)).scale((n - 1) * r)),
    )),
    GoldenFactor("X_{0,1;0,0}^{r,r-1}", 0, 1, 0, 0, False, (
        ("S", lambda n, r: s_poly(0, 0, 1, n) * (_zt(n).scale(n - r) + _ztd(n).scale(r - 1))
         - s_poly(1, 0, 0, n).scale(n - r)),
        ("P", lambda n, r: _ztd(n).scale(n - 1)
         + (_f(n) * _zn(n) - _fd(n) * _zbn(n)).scale((n - r) * (n - 1))),
    )),
    GoldenFactor("X_{0,1;0,1}^{r,r}", 0, 1, 0, 1, True, (
        ("S", lambda n, r: s_poly(0, 0, 1, n).scale(n * r)),
        ("P", lambda n, r: _id(n).scale(n * r)),
    )),
    GoldenFactor("X_{0,1;0,1}^{r,r-1}", 0, 1, 0, 1, False, (
        ("S", lambda n, r: (s_poly(0, 0, 1, n) * _fd(n)).scale(n * (n - r + 1))),
        ("P", lambda n, r: _fd(n).scale(n * (n - r + 1))),
    )),
]


def monomial_states(n: int, c: int, d: int, s: int) -> List[SpinorPolynomial]:
    """All S_{n}^(s)-valued monomials of bidegree (c,d) in n variables."""
    out = []
    for A in combinations(range(1, n + 1), s):
        for key in bihomogeneous_monomials(n, c, d):
            out.append(SpinorPolynomial.state(n, A, ScalarPolynomial.monomial(key[:n], key[n:])))
    return out


def common_ratio(X: OperatorPolynomial, Y: OperatorPolynomial, space: List[SpinorPolynomial]) -> Optional[GaussianRational]:
    """The nonzero c with X f = c Y f for every f in space, or None."""
    c = None
    for f in space:
        u, v = apply_factor(X, f), apply_factor(Y, f)
        if not u and not v:
            continue
        k = ratio(u, v)
        if k is None or not k or (c is not None and k != c):
            return None
        c = k
    return c


def golden_check(ns=(2, 3, 4)) -> Report:
    start = time.perf_counter()
    rep = Report("golden", {"n": list(ns)})
    rep.note(f"{len(GOLDEN_FACTORS)} factors are displayed for (a,b) in (0,0), (1,0), (0,1)")
    for g in GOLDEN_FACTORS:
        for n in ns:
            for r in range(1, n):
                s = r if g.same_grade else r - 1
                X = x_factor(n, r, s, g.a, g.b, g.c, g.d)
                space = monomial_states(n - 1, g.c, g.d, s)
                for form, build in g.forms:
                    c = common_ratio(X, build(n, r), space)
                    rep.add(f"{g.name} [{form}] n={n} r={r}", c is not None, f"ratio {c}")
    rep.elapsed = time.perf_counter() - start
    return rep


__all__ = ["GOLDEN_FACTORS", "GoldenFactor", "common_ratio", "golden_check", "monomial_states"]
