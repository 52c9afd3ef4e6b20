"""Recursive bases of the h-monogenic spaces and the explicit two-dimensional bases."""
from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import List, Optional, Tuple

from .calculus import (
    SpaceLabel,
    SpinorPolynomial,
    euclidean_dirac,
    is_hermitian_monogenic,
    label_of,
)
from .exact import GaussianRational, ScalarPolynomial
from .factors import (
    BranchCase,
    OperatorPolynomial,
    apply_factor,
    branch_case,
    factor_for_case,
    fischer_factor,
    s_poly,
)
from .jacobi import Q
from .oracle import dirac_kernel_dim, polynomial_rank
from .report import Report


class CertificationError(RuntimeError):
    """A constructed basis element is not h-monogenic of the expected label."""


@dataclass(frozen=True)
class BranchNode:
    """A basis element with the chain of branching cases that produced it (root case first)."""

    label: SpaceLabel
    path: Tuple[BranchCase, ...]
    element: SpinorPolynomial

    def describe(self) -> str:
        if not self.path:
            return f"{self.label}: base element"
        return f"{self.label}: " + " <- ".join(c.describe() for c in self.path)


def base_basis(a: int, b: int, r: int) -> List[SpinorPolynomial]:
    """n=1: M^0_{0,b} is spanned by zbar^b/b! I and M^1_{a,0} by z^a/a! fd_1 I."""
    if r == 0 and a == 0:
        return [SpinorPolynomial.state(1, (), ScalarPolynomial.zbar(1, 1) ** b * Fraction(1, factorial(b)))]
    if r == 1 and b == 0:
        return [SpinorPolynomial.state(1, (1,), ScalarPolynomial.z(1, 1) ** a * Fraction(1, factorial(a)))]
    return []


def child_labels(n: int, a: int, b: int, r: int) -> List[BranchCase]:
    """Branching cases for M^r_{a,b}(n), ordered by (tag, s descending, c, d)."""
    out = []
    for s in (r, r - 1):
        if not 0 <= s <= n - 1:
            continue
        for c in range(a + 1):
            for d in range(b + 1):
                if not SpaceLabel(n - 1, c, d, s).valid:
                    continue
                try:
                    out.append(branch_case(n, r, s, a, b, c, d))
                except ValueError:
                    continue
    return sorted(out, key=lambda bc: (bc.tag, -bc.s, bc.c, bc.d))


def branch_children(n: int, a: int, b: int, r: int) -> List[Tuple[BranchCase, OperatorPolynomial]]:
    return [(bc, factor_for_case(n, r, bc)) for bc in child_labels(n, a, b, r)]


def _certify(label: SpaceLabel, f: SpinorPolynomial, where: str) -> None:
    chk = is_hermitian_monogenic(f)
    if not chk:
        raise CertificationError(f"{where}: {chk.operator} f != 0, witness {chk.witness}")
    got = label_of(f)
    if got != label:
        raise CertificationError(f"{where}: expected {label}, got {got}")


@lru_cache(maxsize=None)
def build_basis(n: int, a: int, b: int, r: int, certify: bool = True) -> Tuple[BranchNode, ...]:
    """Basis of M^r_{a,b}(n) by iterated branching down to n=1.

    Every element is checked to be h-monogenic with the expected label when
    certify is set; a failing element raises CertificationError.
    """
    label = SpaceLabel(n, a, b, r)
    if not label.valid:
        return ()
    if n == 1:
        return tuple(BranchNode(label, (), f) for f in base_basis(a, b, r))
    nodes = []
    for bc, X in branch_children(n, a, b, r):
        for child in build_basis(n - 1, bc.c, bc.d, bc.s, certify):
            f = apply_factor(X, child.element)
            if certify:
                _certify(label, f, f"{bc.describe()} applied to {child.label}")
            nodes.append(BranchNode(label, (bc,) + child.path, f))
    return tuple(nodes)


def basis(n: int, a: int, b: int, r: int) -> List[SpinorPolynomial]:
    return [node.element for node in build_basis(n, a, b, r)]


def dimension(n: int, a: int, b: int, r: int) -> int:
    return len(build_basis(n, a, b, r))


# -- explicit n = 2 bases -----------------------------------------------------


@dataclass(frozen=True)
class Dim2BasisElement:
    """A closed-form element of M^r_{a,b}(2); kind is p, q, pt, qt, anti or holo."""

    kind: str
    a: int
    b: int
    param: int  # c for p/pt/holo, d for q/qt/anti
    element: SpinorPolynomial

    @property
    def name(self) -> str:
        sym = {"p": "p", "pt": "p~", "q": "q", "qt": "q~", "anti": "a", "holo": "h"}[self.kind]
        if self.kind in ("p", "pt", "holo"):
            return f"{sym}_{{{self.a},{self.b};{self.param},0}}"
        return f"{sym}_{{{self.a},{self.b};0,{self.param}}}"


def _mono2(e1: int, e2: int, kind: str) -> ScalarPolynomial:
    v = ScalarPolynomial.z if kind == "z" else ScalarPolynomial.zbar
    return v(2, 1) ** e1 * v(2, 2) ** e2


def _two_term(c1, p1: ScalarPolynomial, c2, p2: ScalarPolynomial) -> SpinorPolynomial:
    return SpinorPolynomial.state(2, (1,), p1.scale(c1)) + SpinorPolynomial.state(2, (2,), p2.scale(c2))


def _p(a: int, b: int, c: int) -> SpinorPolynomial:
    e = b - a + c
    k = Fraction(1, factorial(a) * factorial(b))
    first = _mono2(c, 0, "z") * _mono2(0, e, "zbar") * Q(a - c, c, e)
    second = _mono2(c + 1, 0, "z") * _mono2(0, e + 1, "zbar") * Q(a - c - 1, c + 1, e + 1)
    return _two_term(k, first, k, second)


def _qt(a: int, b: int, d: int) -> SpinorPolynomial:
    e = b - d - a
    k = Fraction(1, factorial(a + d + 1) * factorial(b - d))
    first = _mono2(d + 1, e - 1, "zbar") * Q(a, d + 1, e - 1)
    second = _mono2(d, e, "zbar") * Q(a, d, e)
    return _two_term(k * (b - d), first, -k * (a + d + 1), second)


def _q(a: int, b: int, d: int) -> SpinorPolynomial:
    e = a - b + d
    k = Fraction(1, factorial(a) * factorial(b))
    first = _mono2(d + 1, 0, "zbar") * _mono2(0, e + 1, "z") * Q(b - d - 1, d + 1, e + 1)
    second = _mono2(d, 0, "zbar") * _mono2(0, e, "z") * Q(b - d, d, e)
    return _two_term(k, first, -k, second)


def _pt(a: int, b: int, c: int) -> SpinorPolynomial:
    e = a - c - b
    k = Fraction(1, factorial(a - c) * factorial(b + c + 1))
    first = _mono2(c, e, "z") * Q(b, c, e)
    second = _mono2(c + 1, e - 1, "z") * Q(b, c + 1, e - 1)
    return _two_term(k * (b + c + 1), first, k * (a - c), second)


@lru_cache(maxsize=None)
def basis_dim2(a: int, b: int, r: int) -> Tuple[Dim2BasisElement, ...]:
    """The closed-form bases of M^r_{a,b}(2), in the order p/q~/q, p~/p/q or p/q by regime."""
    if a < 0 or b < 0 or not 0 <= r <= 2:
        raise ValueError(f"bad n=2 label a={a}, b={b}, r={r}")
    E = Dim2BasisElement
    if r == 0:
        if a:
            return ()
        return tuple(
            E("anti", a, b, d, SpinorPolynomial.state(2, (), _mono2(d, b - d, "zbar"))) for d in range(b + 1)
        )
    if r == 2:
        if b:
            return ()
        return tuple(
            E("holo", a, b, c, SpinorPolynomial.state(2, (1, 2), _mono2(c, a - c, "z"))) for c in range(a + 1)
        )
    if a < b:
        return (
            tuple(E("p", a, b, c, _p(a, b, c)) for c in range(a + 1))
            + tuple(E("qt", a, b, d, _qt(a, b, d)) for d in range(b - a))
            + tuple(E("q", a, b, d, _q(a, b, d)) for d in range(b - a, b + 1))
        )
    if a > b:
        return (
            tuple(E("pt", a, b, c, _pt(a, b, c)) for c in range(a - b))
            + tuple(E("p", a, b, c, _p(a, b, c)) for c in range(a - b, a + 1))
            + tuple(E("q", a, b, d, _q(a, b, d)) for d in range(b + 1))
        )
    return tuple(E("p", a, b, c, _p(a, b, c)) for c in range(a + 1)) + tuple(
        E("q", a, b, d, _q(a, b, d)) for d in range(a + 1)
    )


def dim2_element(kind: str, a: int, b: int, param: int) -> SpinorPolynomial:
    """Look up a closed-form n=2 element; labels outside the basis give zero."""
    if a < 0 or b < 0:
        return SpinorPolynomial.zero(2)
    r = {"anti": 0, "holo": 2}.get(kind, 1)
    for e in basis_dim2(a, b, r):
        if e.kind == kind and e.param == param:
            return e.element
    return SpinorPolynomial.zero(2)


def ratio(f: SpinorPolynomial, g: SpinorPolynomial) -> Optional[GaussianRational]:
    """The scalar c with f = c g, or None if none exists (g nonzero)."""
    if not g:
        return None
    A, key, gc = next(iter(g.terms()))
    fc = f.coordinates().get((A, key))
    if fc is None:
        return None
    c = fc / gc
    return c if f == g.scale(c) else None


def _dim2_kind_for(bc: BranchCase, a: int, b: int) -> Tuple[str, int]:
    # grade-1 children (c,0) pair with p / p~, grade-0 children (0,d) with q / q~
    if bc.s == 1:
        return ("pt" if a > b and bc.c < a - b else "p"), bc.c
    return ("qt" if a < b and bc.d < b - a else "q"), bc.d


def compare_dim2(a: int, b: int) -> Report:
    """Each recursively built element of M^1_{a,b}(2) is a nonzero multiple of its closed form."""
    start = time.perf_counter()
    rep = Report("dim2", {"a": a, "b": b})
    closed = {(e.kind, e.param): e.element for e in basis_dim2(a, b, 1)}
    for node in build_basis(2, a, b, 1):
        bc = node.path[0]
        kind, param = _dim2_kind_for(bc, a, b)
        target = closed.get((kind, param))
        c = ratio(node.element, target) if target is not None else None
        others = [k for k, g in closed.items() if k != (kind, param) and ratio(node.element, g) is not None]
        rep.add(
            f"a={a} b={b} {bc.tag} (c,d)=({bc.c},{bc.d}) ~ {kind}[{param}]",
            c is not None and bool(c) and not others,
            detail=f"ratio {c}" if c is not None else "not proportional",
        )
    rep.elapsed = time.perf_counter() - start
    return rep


# -- Euclidean monogenics -----------------------------------------------------


def fischer_basis(n: int, k: int) -> List[SpinorPolynomial]:
    """Basis of the degree-k S_n-valued monogenics: sum of M^r_{a,b} plus Fischer images of degree k-1."""
    out = []
    for a in range(k + 1):
        for r in range(n + 1):
            out.extend(basis(n, a, k - a, r))
    for a in range(k):
        for r in range(1, n):
            F = fischer_factor(n, a, k - 1 - a, r)
            out.extend(F.apply(f) for f in basis(n, a, k - 1 - a, r))
    return out


@dataclass(frozen=True)
class Theorem2Component:
    name: str
    factor: OperatorPolynomial
    i: int
    images: Tuple[SpinorPolynomial, ...]


def theorem2_components(n: int, k: int) -> List[Theorem2Component]:
    """Images S_{k-i-j,j,i} zbar_n^j M_i(n-1) and S_{k-i-j,j,i} z_n^j fd_n M_i(n-1)."""
    if n < 2:
        raise ValueError("branching needs n >= 2")
    zn = ScalarPolynomial.z(n, n)
    zbn = ScalarPolynomial.zbar(n, n)
    fdn = OperatorPolynomial.fd(n, n)
    out = []
    for i in range(k + 1):
        children = fischer_basis(n - 1, i)
        for j in range(k - i + 1):
            S = s_poly(k - i - j, j, i, n)
            for tag, X in (("zbar_n", S * zbn ** j), ("z_n fd_n", S * zn ** j * fdn)):
                imgs = tuple(apply_factor(X, f) for f in children)
                out.append(Theorem2Component(f"S_{{{k - i - j},{j},{i}}} {tag}^{j} M_{i}({n - 1})", X, i, imgs))
    return out


def theorem2_check(n: int, k: int) -> Report:
    """The branching of degree-k monogenics: closure, independence and total count."""
    start = time.perf_counter()
    rep = Report("theorem2", {"n": n, "k": k})
    comps = theorem2_components(n, k)
    allimgs = []
    for comp in comps:
        bad = [g for g in comp.images if euclidean_dirac(g)]
        rep.add(f"n={n} k={k} {comp.name} monogenic", not bad, witness=str(bad[0]) if bad else None)
        allimgs.extend(comp.images)
    expected_comps = 2 * sum(1 for i in range(k + 1) for j in range(k + 1 - i))
    rep.add(f"n={n} k={k} component count", len(comps) == expected_comps, f"{len(comps)} of {expected_comps}")
    rank = polynomial_rank(allimgs)
    target = dirac_kernel_dim(n, k)
    rep.add(
        f"n={n} k={k} direct sum spans M_{k}({n})",
        rank == len(allimgs) == target,
        f"rank {rank}, images {len(allimgs)}, oracle dim {target}",
    )
    rep.elapsed = time.perf_counter() - start
    return rep


__all__ = [
    "BranchNode",
    "CertificationError",
    "Dim2BasisElement",
    "Theorem2Component",
    "base_basis",
    "basis",
    "basis_dim2",
    "branch_children",
    "build_basis",
    "child_labels",
    "compare_dim2",
    "dim2_element",
    "dimension",
    "fischer_basis",
    "ratio",
    "theorem2_check",
    "theorem2_components",
]
