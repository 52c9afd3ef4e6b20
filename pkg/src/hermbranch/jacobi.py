"""Jacobi polynomials from the explicit binomial sum and their polynomialized Q forms."""
from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import List, Sequence, Tuple

from .exact import ScalarPolynomial
from .report import Report

UPoly = Tuple[Fraction, ...]  # ascending coefficients in t


def binom(x: int, k: int) -> Fraction:
    """Generalized binomial x(x-1)...(x-k+1)/k!; zero for k < 0, any integer x."""
    if k < 0:
        return Fraction(0)
    num = 1
    for i in range(k):
        num *= x - i
    return Fraction(num, factorial(k))


# -- univariate helpers -------------------------------------------------------


def _trim(c: List[Fraction]) -> UPoly:
    while c and not c[-1]:
        c.pop()
    return tuple(c)


def upoly_add(p: Sequence[Fraction], q: Sequence[Fraction]) -> UPoly:
    m = max(len(p), len(q))
    return _trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(m)])


def upoly_scale(p: Sequence[Fraction], c) -> UPoly:
    return _trim([Fraction(c) * x for x in p])


def upoly_mul(p: Sequence[Fraction], q: Sequence[Fraction]) -> UPoly:
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x:
            for j, y in enumerate(q):
                out[i + j] += x * y
    return _trim(out)


def upoly_pow(p: Sequence[Fraction], e: int) -> UPoly:
    out: UPoly = (Fraction(1),)
    for _ in range(e):
        out = upoly_mul(out, p)
    return out


def upoly_eval(p: Sequence[Fraction], t) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * t + c
    return acc


T = (Fraction(0), Fraction(1))
HALF_T_MINUS_1 = (Fraction(-1, 2), Fraction(1, 2))
HALF_T_PLUS_1 = (Fraction(1, 2), Fraction(1, 2))
HALF_1_MINUS_T = (Fraction(1, 2), Fraction(-1, 2))


@dataclass(frozen=True)
class JacobiPoly:
    ell: int
    alpha: int
    beta: int
    coeffs: UPoly

    def __call__(self, t) -> Fraction:
        return upoly_eval(self.coeffs, Fraction(t))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


@lru_cache(maxsize=None)
def jacobi(ell: int, alpha: int, beta: int) -> JacobiPoly:
    """P_ell^{alpha,beta}(t) = sum_s C(ell+alpha, s) C(ell+beta, ell-s) ((t-1)/2)^{ell-s} ((t+1)/2)^s.

    ell = -1 gives the zero polynomial.
    """
    if ell < -1:
        raise ValueError(f"Jacobi degree {ell} < -1")
    acc: UPoly = ()
    for s in range(ell + 1):
        c = binom(ell + alpha, s) * binom(ell + beta, ell - s)
        if c:
            term = upoly_mul(upoly_pow(HALF_T_MINUS_1, ell - s), upoly_pow(HALF_T_PLUS_1, s))
            acc = upoly_add(acc, upoly_scale(term, c))
    return JacobiPoly(ell, alpha, beta, acc)


@dataclass(frozen=True)
class QPoly:
    ell: int
    alpha: int
    beta: int
    n: int
    value: ScalarPolynomial


@lru_cache(maxsize=None)
def qpoly(ell: int, alpha: int, beta: int, n: int) -> QPoly:
    """|z|^{2 ell} P_ell^{alpha,beta}(t) with t = (|z_n|^2 - |z~|^2)/|z|^2, as a polynomial.

    Equals sum_s C(ell+alpha, s) C(ell+beta, ell-s) (-|z~|^2)^{ell-s} (z_n zbar_n)^s,
    where |z~|^2 = sum_{j<n} z_j zbar_j.
    """
    if n < 2:
        raise ValueError("qpoly needs n >= 2")
    if ell < -1:
        raise ValueError(f"degree {ell} < -1")
    minus_tilde = -ScalarPolynomial.norm_sq(n, n - 1)
    last = ScalarPolynomial.z(n, n) * ScalarPolynomial.zbar(n, n)
    acc = ScalarPolynomial.zero(n)
    for s in range(ell + 1):
        c = binom(ell + alpha, s) * binom(ell + beta, ell - s)
        if c:
            acc = acc + (minus_tilde ** (ell - s) * last ** s).scale(c)
    return QPoly(ell, alpha, beta, n, acc)


def Q(ell: int, alpha: int, beta: int, n: int = 2) -> ScalarPolynomial:
    """Shorthand for qpoly(...).value."""
    return qpoly(ell, alpha, beta, n).value


def homogenized(p: JacobiPoly, n: int = 2) -> ScalarPolynomial:
    """|z|^{2 ell} p(t) with t = (|z_n|^2 - |z~|^2)/|z|^2, built from the t-coefficients."""
    v = ScalarPolynomial.norm_sq(n)
    u = ScalarPolynomial.z(n, n) * ScalarPolynomial.zbar(n, n) - ScalarPolynomial.norm_sq(n, n - 1)
    acc = ScalarPolynomial.zero(n)
    for k, c in enumerate(p.coeffs):
        acc = acc + (u ** k * v ** (p.ell - k)).scale(c)
    return acc


# -- identity checks ----------------------------------------------------------


def check_q_identities(lmax: int, amax: int, bmax: int) -> Report:
    """The six derivative and contiguity identities of the n=2 Q polynomials."""
    start = time.perf_counter()
    rep = Report("qprops", {"l_max": lmax, "alpha_max": amax, "beta_max": bmax})
    n = 2
    z1, zb1 = ScalarPolynomial.z(n, 1), ScalarPolynomial.zbar(n, 1)
    z2, zb2 = ScalarPolynomial.z(n, 2), ScalarPolynomial.zbar(n, 2)
    for ell in range(lmax + 1):
        for al in range(amax + 1):
            for be in range(bmax + 1):
                q = Q(ell, al, be)
                checks = [
                    ("i", q.derive("z", 1), (zb1 * Q(ell - 1, al + 1, be)).scale(-(ell + be))),
                    ("ii", q.derive("zbar", 1), (z1 * Q(ell - 1, al + 1, be)).scale(-(ell + be))),
                    ("iii", q.derive("z", 2), (zb2 * Q(ell - 1, al, be + 1)).scale(ell + al)),
                    ("iv", q.derive("zbar", 2), (z2 * Q(ell - 1, al, be + 1)).scale(ell + al)),
                ]
                if be >= 1:
                    lhs = q.scale(be) + (z2 * zb2 * Q(ell - 1, al, be + 1)).scale(ell + al)
                    checks.append(("v", lhs, Q(ell, al, be - 1).scale(ell + be)))
                if al >= 1:
                    lhs = q.scale(al) - (z1 * zb1 * Q(ell - 1, al + 1, be)).scale(ell + be)
                    checks.append(("vi", lhs, Q(ell, al - 1, be).scale(ell + al)))
                for name, lhs, rhs in checks:
                    resid = lhs - rhs
                    rep.add(
                        f"({name}) l={ell} alpha={al} beta={be}",
                        resid.is_zero(),
                        witness=None if resid.is_zero() else str(resid),
                    )
    rep.elapsed = time.perf_counter() - start
    return rep


def _rec_sides(name: str, ell: int, al: int, be: int):
    P = lambda l, a, b: jacobi(l, a, b).coeffs  # noqa: E731
    la, lb = Fraction(1, ell + al), Fraction(1, ell + be)
    A_part = upoly_add(
        upoly_scale(P(ell, al - 2, be), -(ell + al - 1) * lb) if al >= 2 else (),
        upoly_scale(P(ell, al - 1, be), (al - 1) * lb) if al >= 1 else (),
    )
    B_part = upoly_add(
        upoly_scale(P(ell, al, be - 1), -(be - 1) * la) if be >= 1 else (),
        upoly_scale(P(ell, al, be - 2), (ell + be - 1) * la) if be >= 2 else (),
    )
    prev = P(ell - 1, al, be)
    if name == "i":
        return prev, upoly_add(A_part, B_part)
    if name == "ii":
        return upoly_mul(T, prev), upoly_add(upoly_scale(A_part, -1), B_part)
    if name == "iii":
        return upoly_mul(HALF_T_PLUS_1, prev), B_part
    if name == "iv":
        return upoly_mul(HALF_1_MINUS_T, prev), A_part
    raise ValueError(name)


# identity -> (needs alpha >= 2, needs beta >= 2)
_REC_GUARDS = {"i": (True, True), "ii": (True, True), "iii": (False, True), "iv": (True, False)}


def check_jacobi_recurrences(lmax: int, amax: int, bmax: int) -> Report:
    """The four three-parameter recurrences relating P_{l-1} to shifted P_l.

    Only parameters where every occurring superscript is nonnegative are tested.
    """
    start = time.perf_counter()
    rep = Report("jacobi", {"l_max": lmax, "alpha_max": amax, "beta_max": bmax})
    for name, (need_a, need_b) in _REC_GUARDS.items():
        for ell in range(lmax + 1):
            for al in range(2 if need_a else 0, amax + 1):
                for be in range(2 if need_b else 0, bmax + 1):
                    label = f"({name}) l={ell} alpha={al} beta={be}"
                    if ell + al == 0 or ell + be == 0:
                        rep.note(f"{label}: skipped, zero denominator")
                        continue
                    lhs, rhs = _rec_sides(name, ell, al, be)
                    resid = upoly_add(lhs, upoly_scale(rhs, -1))
                    rep.add(label, not resid, witness=None if not resid else str(resid))
    rep.elapsed = time.perf_counter() - start
    return rep
