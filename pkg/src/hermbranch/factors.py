"""Operator-valued polynomials: the S polynomials and the branching embedding factors X.

An OperatorPolynomial is sum_w p_w(z, zbar) * w, where each w is a Witt word
acting by left Clifford multiplication.  Composition X * Y means "apply Y,
then X".  Everything stays polynomial: |z|^{2l} P_l(t) combinations are
always expanded through the Q polynomials.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, Optional, Tuple

from .calculus import SpinorPolynomial, _acc
from .exact import GaussianRational, Scalar, ScalarPolynomial, coerce
from .fock import ANNIHILATE, CREATE, FockSubset, Letter, WittWord, all_subsets, letters_on
from .jacobi import Q

Word = Tuple[Letter, ...]


class SideConditionError(ValueError):
    """A branching case was requested outside its side conditions."""


class OperatorPolynomial:
    __slots__ = ("n", "terms", "_matrix")

    def __init__(self, n: int, terms: Optional[Dict[Word, ScalarPolynomial]] = None):
        self.n = n
        clean: Dict[Word, ScalarPolynomial] = {}
        for w, p in (terms or {}).items():
            w = WittWord(w).letters
            for _, j in w:
                if not 1 <= j <= n:
                    raise IndexError(f"mode index {j} outside 1..{n}")
            if not isinstance(p, ScalarPolynomial):
                p = ScalarPolynomial.const(n, p)
            if p.n != n:
                raise ValueError("dimension mismatch")
            q = clean[w] + p if w in clean else p
            if q:
                clean[w] = q
            else:
                clean.pop(w, None)
        self.terms = clean
        self._matrix = None

    @classmethod
    def _wrap(cls, n: int, terms: Dict[Word, ScalarPolynomial]) -> "OperatorPolynomial":
        obj = object.__new__(cls)
        obj.n = n
        obj.terms = terms
        obj._matrix = None
        return obj

    @classmethod
    def zero(cls, n: int) -> "OperatorPolynomial":
        return cls._wrap(n, {})

    @classmethod
    def identity(cls, n: int, c: Scalar = 1) -> "OperatorPolynomial":
        return cls(n, {(): ScalarPolynomial.const(n, c)})

    @classmethod
    def word(cls, n: int, letters: Word, poly: Optional[ScalarPolynomial] = None) -> "OperatorPolynomial":
        return cls(n, {tuple(letters): ScalarPolynomial.const(n, 1) if poly is None else poly})

    @classmethod
    def poly(cls, p: ScalarPolynomial) -> "OperatorPolynomial":
        return cls(p.n, {(): p})

    @classmethod
    def fd(cls, n: int, j: int) -> "OperatorPolynomial":
        return cls.word(n, ((CREATE, j),))

    @classmethod
    def f(cls, n: int, j: int) -> "OperatorPolynomial":
        return cls.word(n, ((ANNIHILATE, j),))

    def pairs(self) -> Iterator[Tuple[ScalarPolynomial, WittWord]]:
        """The (coefficient polynomial, Witt word) pairs, in canonical order."""
        for w in sorted(self.terms):
            yield self.terms[w], WittWord(w)

    # -- algebra ------------------------------------------------------------

    def __add__(self, other: "OperatorPolynomial") -> "OperatorPolynomial":
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        out = dict(self.terms)
        for w, p in other.terms.items():
            if w in out:
                q = out[w] + p
                if q:
                    out[w] = q
                else:
                    del out[w]
            else:
                out[w] = p
        return OperatorPolynomial._wrap(self.n, out)

    def __neg__(self):
        return OperatorPolynomial._wrap(self.n, {w: -p for w, p in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: Scalar) -> "OperatorPolynomial":
        c = coerce(c)
        if not c:
            return OperatorPolynomial.zero(self.n)
        return OperatorPolynomial._wrap(self.n, {w: p.scale(c) for w, p in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, OperatorPolynomial):
            if self.n != other.n:
                raise ValueError("dimension mismatch")
            out: Dict[Word, ScalarPolynomial] = {}
            for w1, p1 in self.terms.items():
                for w2, p2 in other.terms.items():
                    w = w1 + w2
                    q = p1 * p2
                    out[w] = out[w] + q if w in out else q
            return OperatorPolynomial._wrap(self.n, {w: p for w, p in out.items() if p})
        if isinstance(other, ScalarPolynomial):
            if other.n != self.n:
                raise ValueError("dimension mismatch")
            return OperatorPolynomial._wrap(
                self.n, {w: q for w, q in ((w, p * other) for w, p in self.terms.items()) if q}
            )
        c = coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return self.scale(c)

    def __rmul__(self, other):
        if isinstance(other, ScalarPolynomial):
            return self * other
        c = coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return self.scale(c)

    # -- action and canonical form -----------------------------------------

    def matrix(self) -> Dict[Tuple[FockSubset, FockSubset], ScalarPolynomial]:
        """Canonical form: entry (B, A) is the coefficient of fd_B I in X(fd_A I)."""
        if self._matrix is None:
            m: Dict[Tuple[FockSubset, FockSubset], ScalarPolynomial] = {}
            subsets = list(all_subsets(self.n))
            for w, p in self.terms.items():
                for A in subsets:
                    hit = letters_on(w, A)
                    if hit is None:
                        continue
                    s, B = hit
                    key = (B, A)
                    q = p if s == 1 else -p
                    if key in m:
                        q = m[key] + q
                        if q:
                            m[key] = q
                        else:
                            del m[key]
                    else:
                        m[key] = q
            self._matrix = m
        return self._matrix

    def apply(self, f: SpinorPolynomial) -> SpinorPolynomial:
        return apply_factor(self, f)

    def is_zero(self) -> bool:
        return not self.matrix()

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, OperatorPolynomial):
            return NotImplemented
        return self.n == other.n and self.matrix() == other.matrix()

    def __hash__(self):
        return hash((self.n, frozenset(self.matrix().items())))

    def proportionality(self, other: "OperatorPolynomial") -> Optional[GaussianRational]:
        """The scalar c with self == c * other, or None if there is none (or other is zero)."""
        ma, mb = self.matrix(), other.matrix()
        if set(ma) != set(mb) or not mb:
            return None
        key = next(iter(sorted(mb)))
        pb = mb[key]
        k0 = next(iter(sorted(pb.terms)))
        c = ma[key].terms.get(k0)
        if c is None:
            return None
        c = c / pb.terms[k0]
        for key, p in mb.items():
            if ma[key] != p.scale(c):
                return None
        return c

    def normal_ordered(self) -> "OperatorPolynomial":
        """Same operator with every word rewritten as fd's (ascending) followed by f's (ascending)."""
        out: Dict[Word, ScalarPolynomial] = {}
        for w, p in self.terms.items():
            for nw, s in _normal_word(w).items():
                q = p if s == 1 else p.scale(s)
                out[nw] = out[nw] + q if nw in out else q
        return OperatorPolynomial._wrap(self.n, {w: p for w, p in out.items() if p})

    def __repr__(self):
        return f"OperatorPolynomial(n={self.n}, {len(self.terms)} words)"


def _letter_rank(x: Letter) -> Tuple[int, int]:
    return (0 if x[0] == CREATE else 1, x[1])


@lru_cache(maxsize=None)
def _normal_word(w: Word) -> Dict[Word, int]:
    # first adjacent pair out of order, rewritten with the anticommutation relations
    for i in range(len(w) - 1):
        x, y = w[i], w[i + 1]
        if x == y:
            return {}
        if _letter_rank(x) < _letter_rank(y):
            continue
        out: Dict[Word, int] = {}
        for nw, s in _normal_word(w[:i] + (y, x) + w[i + 2:]).items():
            out[nw] = out.get(nw, 0) - s
        if x[0] == ANNIHILATE and y[0] == CREATE and x[1] == y[1]:
            for nw, s in _normal_word(w[:i] + w[i + 2:]).items():
                out[nw] = out.get(nw, 0) + s
        return {k: v for k, v in out.items() if v}
    return {w: 1}


def apply_factor(X: OperatorPolynomial, f: SpinorPolynomial) -> SpinorPolynomial:
    """X applied to f; a lower-dimensional f is embedded first (same subsets and variables)."""
    if f.n > X.n:
        raise ValueError(f"cannot apply an n={X.n} operator to an n={f.n} polynomial")
    if f.n < X.n:
        f = f.embed(X.n)
    out: Dict[FockSubset, ScalarPolynomial] = {}
    by_input: Dict[FockSubset, list] = {}
    for (B, A), p in X.matrix().items():
        by_input.setdefault(A, []).append((B, p))
    for A, g in f.comps.items():
        for B, p in by_input.get(A, ()):
            _acc(out, B, p * g)
    return SpinorPolynomial._wrap(X.n, out)


# -- vector variables -----------------------------------------------------------


def _var(n: int, kind: str, j: int) -> ScalarPolynomial:
    return ScalarPolynomial.var(n, kind, j)


def z_vector(n: int, tilde: bool = False) -> OperatorPolynomial:
    """sum_j f_j z_j (over j <= n-1 when tilde)."""
    upto = n - 1 if tilde else n
    return OperatorPolynomial(n, {((ANNIHILATE, j),): _var(n, "z", j) for j in range(1, upto + 1)})


def zdagger_vector(n: int, tilde: bool = False) -> OperatorPolynomial:
    """sum_j fd_j zbar_j (over j <= n-1 when tilde)."""
    upto = n - 1 if tilde else n
    return OperatorPolynomial(n, {((CREATE, j),): _var(n, "zbar", j) for j in range(1, upto + 1)})


def last_vector(n: int) -> OperatorPolynomial:
    """f_n z_n - fd_n zbar_n, the real vector variable of the last complex plane."""
    return OperatorPolynomial(
        n, {((ANNIHILATE, n),): _var(n, "z", n), ((CREATE, n),): -_var(n, "zbar", n)}
    )


def tilde_vector(n: int) -> OperatorPolynomial:
    """z~ - z~dagger, the real vector variable of the first n-1 complex planes."""
    return z_vector(n, tilde=True) - zdagger_vector(n, tilde=True)


# -- S polynomials and X factors ------------------------------------------------


@lru_cache(maxsize=None)
def s_poly(m: int, j: int, i: int, n: int) -> OperatorPolynomial:
    """The degree-m embedding polynomial S_{m,j,i}(z, zdagger) in dimension n.

    m = 2l:   Q_l^{i+n-2,j} - (f_n z_n - fd_n zbar_n)(z~ - z~dagger) Q_{l-1}^{i+n-1,j+1}
    m = 2l+1: (l+j+1)(z~ - z~dagger) Q_l^{i+n-1,j} - (l+i+n-1)(f_n z_n - fd_n zbar_n) Q_l^{i+n-2,j+1}
    m = -1 gives the zero operator.
    """
    if n < 2:
        raise ValueError("S polynomials need n >= 2")
    if m < -1:
        raise ValueError(f"total degree {m} < -1")
    if j < 0 or i < 0:
        raise ValueError("indices j, i must be nonnegative")
    xn, xt = last_vector(n), tilde_vector(n)
    ell, odd = divmod(m, 2)
    if not odd:
        return OperatorPolynomial.poly(Q(ell, i + n - 2, j, n)) - (xn * xt) * Q(ell - 1, i + n - 1, j + 1, n)
    return (xt * Q(ell, i + n - 1, j, n)).scale(ell + j + 1) - (xn * Q(ell, i + n - 2, j + 1, n)).scale(
        ell + i + n - 1
    )


def fischer_factor(n: int, a: int, b: int, r: int) -> OperatorPolynomial:
    """(b+n-r) z + (a+r) zdagger, embedding M^r_{a,b}(n) into the Euclidean monogenics."""
    if not 1 <= r <= n - 1:
        raise ValueError(f"fischer_factor needs 1 <= r <= n-1, got r={r}, n={n}")
    return z_vector(n).scale(b + n - r) + zdagger_vector(n).scale(a + r)


def _child_fischer(n: int, c: int, d: int, s: int) -> OperatorPolynomial:
    # (d + (n-1) - s) z~ + (c + s) z~dagger: the Fischer factor of the child label in dimension n-1
    return z_vector(n, tilde=True).scale(d + n - 1 - s) + zdagger_vector(n, tilde=True).scale(c + s)


@dataclass(frozen=True, order=True)
class BranchCase:
    """Which of the branching formulas produced a child, with its derived indices."""

    tag: str  # i | ii | iii | iv | r0 | rn
    ell: int
    j: int
    c: int
    d: int
    s: int

    def describe(self) -> str:
        return f"case {self.tag}: l={self.ell}, j={self.j}, child (c,d)=({self.c},{self.d}), grade s={self.s}"


def branch_case(
    n: int, r: int, s: int, a: int, b: int, c: int, d: int, case: Optional[str] = None
) -> BranchCase:
    """Select (or validate a forced) branching case for X^{r,s}_{a,b;c,d} in dimension n."""
    if n < 2:
        raise SideConditionError("branching needs n >= 2")
    if not (0 <= c <= a and 0 <= d <= b):
        raise SideConditionError(f"need 0 <= c <= a and 0 <= d <= b, got a={a}, b={b}, c={c}, d={d}")
    if not 0 <= r <= n:
        raise SideConditionError(f"grade r={r} outside 0..{n}")
    u, v = a - c, b - d
    if r == 0:
        if case not in (None, "r0"):
            raise SideConditionError(f"r=0 only admits case r0, not {case}")
        if a != 0 or c != 0 or s != 0:
            raise SideConditionError("r=0 requires a=c=0 and s=0")
        return BranchCase("r0", 0, v, c, d, s)
    if r == n:
        if case not in (None, "rn"):
            raise SideConditionError(f"r=n only admits case rn, not {case}")
        if b != 0 or d != 0 or s != n - 1:
            raise SideConditionError("r=n requires b=d=0 and s=n-1")
        return BranchCase("rn", 0, u, c, d, s)
    if s == r:
        tag = case or ("i" if u <= v else "iii")
        if tag == "i":
            if not u <= v:
                raise SideConditionError(f"case (i) needs a-c <= b-d, got {u} > {v}")
            return BranchCase("i", u, v - u, c, d, s)
        if tag == "iii":
            if not u > v:
                raise SideConditionError(f"case (iii) needs a-c > b-d (j >= 1), got {u} <= {v}")
            return BranchCase("iii", v, u - v, c, d, s)
        raise SideConditionError(f"s=r admits cases i/iii, not {tag}")
    if s == r - 1:
        tag = case or ("ii" if u < v else "iv")
        if tag == "ii":
            if not u < v:
                raise SideConditionError(f"case (ii) needs a-c < b-d (j >= 1), got {u} >= {v}")
            return BranchCase("ii", u, v - u, c, d, s)
        if tag == "iv":
            if not u >= v:
                raise SideConditionError(f"case (iv) needs a-c >= b-d, got {u} < {v}")
            return BranchCase("iv", v, u - v, c, d, s)
        raise SideConditionError(f"s=r-1 admits cases ii/iv, not {tag}")
    raise SideConditionError(f"child grade s={s} must be r={r} or r-1={r - 1}")


def factor_for_case(n: int, r: int, bc: BranchCase) -> OperatorPolynomial:
    ell, j, c, d = bc.ell, bc.j, bc.c, bc.d
    zn, zbn = _var(n, "z", n), _var(n, "zbar", n)
    fdn = OperatorPolynomial.fd(n, n)
    if bc.tag == "r0":
        return OperatorPolynomial.poly(zbn ** j)
    if bc.tag == "rn":
        return fdn * zn ** j
    if bc.tag == "i":
        F = _child_fischer(n, c, d, r)
        return (s_poly(2 * ell, j, c + d, n) * zbn ** j).scale((ell + n + c + d - 1) * (c + r)) + (
            s_poly(2 * ell - 1, j, c + d + 1, n) * zbn ** j
        ) * F
    if bc.tag == "ii":
        F = _child_fischer(n, c, d, r - 1)
        return (s_poly(2 * ell, j - 1, c + d + 1, n) * zbn ** (j - 1) * F).scale(ell + j) - (
            s_poly(2 * ell + 1, j - 1, c + d, n) * zbn ** (j - 1)
        ).scale(d + n - r)
    if bc.tag == "iii":
        F = _child_fischer(n, c, d, r)
        return (s_poly(2 * ell, j - 1, c + d + 1, n) * zn ** (j - 1) * fdn * F).scale(ell + j) - (
            s_poly(2 * ell + 1, j - 1, c + d, n) * zn ** (j - 1) * fdn
        ).scale(c + r)
    if bc.tag == "iv":
        F = _child_fischer(n, c, d, r - 1)
        return (s_poly(2 * ell, j, c + d, n) * zn ** j * fdn).scale((ell + n + c + d - 1) * (d + n - r)) + (
            s_poly(2 * ell - 1, j, c + d + 1, n) * zn ** j * fdn * F
        )
    raise ValueError(f"unknown case tag {bc.tag!r}")


def x_factor(
    n: int, r: int, s: int, a: int, b: int, c: int, d: int, case: Optional[str] = None
) -> OperatorPolynomial:
    """The (unnormalized) embedding factor X^{r,s}_{a,b;c,d} mapping M^s_{c,d}(n-1) into M^r_{a,b}(n)."""
    return factor_for_case(n, r, branch_case(n, r, s, a, b, c, d, case))
