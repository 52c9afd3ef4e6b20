"""Exact Gaussian-rational scalars and polynomials in z_1..z_n, zbar_1..zbar_n.

A monomial is stored as a flat exponent tuple of length 2n: the exponents of
z_1..z_n followed by those of zbar_1..zbar_n.  All 2n variables are treated as
independent commuting indeterminates.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Dict, Iterable, Iterator, NamedTuple, Optional, Tuple, Union

Key = Tuple[int, ...]
Scalar = Union["GaussianRational", Fraction, int]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class GaussianRational:
    """An element re + i*im of Q(i), with exact Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @classmethod
    def _new(cls, re: Fraction, im: Fraction) -> "GaussianRational":
        obj = object.__new__(cls)
        obj.re = re
        obj.im = im
        return obj

    @classmethod
    def parse(cls, re: str, im: str = "0") -> "GaussianRational":
        return cls(Fraction(re), Fraction(im))

    def conj(self) -> "GaussianRational":
        return GaussianRational._new(self.re, -self.im)

    def is_real(self) -> bool:
        return not self.im

    def __add__(self, other):
        other = coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational._new(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational._new(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return GaussianRational._new(-self.re, -self.im)

    def __mul__(self, other):
        other = coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussianRational._new(a * c, _ZERO)
        return GaussianRational._new(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = coerce(other)
        if other is NotImplemented:
            return other
        c, d = other.re, other.im
        den = c * c + d * d
        if not den:
            raise ZeroDivisionError("division by the zero Gaussian rational")
        a, b = self.re, self.im
        return GaussianRational._new((a * c + b * d) / den, (b * c - a * d) / den)

    def __rtruediv__(self, other):
        other = coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        other = coerce(other)
        if other is NotImplemented:
            return False
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        if not self.im:
            return f"GaussianRational({self.re})"
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}i)"


def coerce(x) -> GaussianRational:
    """Convert int/Fraction/GaussianRational to GaussianRational."""
    if type(x) is GaussianRational:
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational._new(Fraction(x), _ZERO)
    return NotImplemented


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I_UNIT = GaussianRational(0, 1)


class Monomial(NamedTuple):
    """Exponent vectors of z_1..z_n and zbar_1..zbar_n."""

    z: Tuple[int, ...]
    zbar: Tuple[int, ...]

    @property
    def key(self) -> Key:
        return tuple(self.z) + tuple(self.zbar)

    @classmethod
    def from_key(cls, key: Key) -> "Monomial":
        n = len(key) // 2
        return cls(tuple(key[:n]), tuple(key[n:]))


def _check_var(kind: str, j: int, n: int) -> int:
    if kind not in ("z", "zbar"):
        raise ValueError(f"unknown variable kind {kind!r}; expected 'z' or 'zbar'")
    if not 1 <= j <= n:
        raise ValueError(f"variable index {j} outside 1..{n}")
    return j - 1 if kind == "z" else n + j - 1


class ScalarPolynomial:
    """Sparse polynomial over Q(i) in the 2n commuting variables z, zbar."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Optional[Dict[Key, Scalar]] = None):
        self.n = n
        clean: Dict[Key, GaussianRational] = {}
        if terms:
            for key, c in terms.items():
                if len(key) != 2 * n:
                    raise ValueError(f"monomial {key} does not have length {2 * n}")
                c = coerce(c)
                if c:
                    clean[tuple(key)] = c
        self.terms = clean

    @classmethod
    def _wrap(cls, n: int, terms: Dict[Key, GaussianRational]) -> "ScalarPolynomial":
        # terms must already be clean (no zeros, right key length)
        obj = object.__new__(cls)
        obj.n = n
        obj.terms = terms
        return obj

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "ScalarPolynomial":
        return cls._wrap(n, {})

    @classmethod
    def const(cls, n: int, c: Scalar = 1) -> "ScalarPolynomial":
        c = coerce(c)
        return cls._wrap(n, {(0,) * (2 * n): c} if c else {})

    @classmethod
    def var(cls, n: int, kind: str, j: int) -> "ScalarPolynomial":
        idx = _check_var(kind, j, n)
        key = [0] * (2 * n)
        key[idx] = 1
        return cls._wrap(n, {tuple(key): ONE})

    @classmethod
    def z(cls, n: int, j: int) -> "ScalarPolynomial":
        return cls.var(n, "z", j)

    @classmethod
    def zbar(cls, n: int, j: int) -> "ScalarPolynomial":
        return cls.var(n, "zbar", j)

    @classmethod
    def monomial(cls, z: Iterable[int], zbar: Iterable[int], c: Scalar = 1) -> "ScalarPolynomial":
        z, zbar = tuple(z), tuple(zbar)
        if len(z) != len(zbar):
            raise ValueError("z and zbar exponent vectors differ in length")
        if any(e < 0 for e in z + zbar):
            raise ValueError("negative exponent")
        return cls(len(z), {z + zbar: c})

    @classmethod
    def norm_sq(cls, n: int, upto: Optional[int] = None) -> "ScalarPolynomial":
        """sum_{j <= upto} z_j zbar_j (upto defaults to n)."""
        upto = n if upto is None else upto
        terms = {}
        for j in range(upto):
            key = [0] * (2 * n)
            key[j] = key[n + j] = 1
            terms[tuple(key)] = ONE
        return cls._wrap(n, terms)

    # -- arithmetic ---------------------------------------------------------

    def _same_n(self, other: "ScalarPolynomial") -> None:
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: n={self.n} vs n={other.n}")

    def _lift(self, other) -> "ScalarPolynomial":
        if isinstance(other, ScalarPolynomial):
            self._same_n(other)
            return other
        c = coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return ScalarPolynomial.const(self.n, c)

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            if s is None:
                out[k] = c
            else:
                s = s + c
                if s:
                    out[k] = s
                else:
                    del out[k]
        return ScalarPolynomial._wrap(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return ScalarPolynomial._wrap(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c: Scalar) -> "ScalarPolynomial":
        c = coerce(c)
        if not c:
            return ScalarPolynomial.zero(self.n)
        return ScalarPolynomial._wrap(self.n, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, ScalarPolynomial):
            c = coerce(other)
            if c is NotImplemented:
                return NotImplemented
            return self.scale(c)
        self._same_n(other)
        out: Dict[Key, GaussianRational] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                prod = c1 * c2
                s = out.get(k)
                out[k] = prod if s is None else s + prod
        return ScalarPolynomial._wrap(self.n, {k: c for k, c in out.items() if c})

    def __rmul__(self, other):
        c = coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return self.scale(c)

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = ScalarPolynomial.const(self.n, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- calculus and structure ---------------------------------------------

    def derive(self, kind: str, j: int) -> "ScalarPolynomial":
        """Formal partial derivative in z_j (kind='z') or zbar_j (kind='zbar')."""
        idx = _check_var(kind, j, self.n)
        out = {}
        for k, c in self.terms.items():
            e = k[idx]
            if e:
                nk = list(k)
                nk[idx] = e - 1
                out[tuple(nk)] = c * e
        return ScalarPolynomial._wrap(self.n, out)

    def bidegree_split(self) -> Dict[Tuple[int, int], "ScalarPolynomial"]:
        n = self.n
        parts: Dict[Tuple[int, int], Dict[Key, GaussianRational]] = {}
        for k, c in self.terms.items():
            bd = (sum(k[:n]), sum(k[n:]))
            parts.setdefault(bd, {})[k] = c
        return {bd: ScalarPolynomial._wrap(n, t) for bd, t in sorted(parts.items())}

    def bidegree(self) -> Optional[Tuple[int, int]]:
        """The common bidegree of all terms, or None if zero or mixed."""
        n = self.n
        seen = {(sum(k[:n]), sum(k[n:])) for k in self.terms}
        return seen.pop() if len(seen) == 1 else None

    def conj(self) -> "ScalarPolynomial":
        """Complex conjugate: swaps z_j <-> zbar_j and conjugates coefficients."""
        n = self.n
        return ScalarPolynomial._wrap(n, {k[n:] + k[:n]: c.conj() for k, c in self.terms.items()})

    def embed(self, n_new: int) -> "ScalarPolynomial":
        """Regard a polynomial in n variables as one in n_new >= n variables."""
        n = self.n
        if n_new < n:
            raise ValueError("cannot embed into a smaller dimension")
        pad = (0,) * (n_new - n)
        return ScalarPolynomial._wrap(
            n_new, {k[:n] + pad + k[n:] + pad: c for k, c in self.terms.items()}
        )

    def evaluate(self, z: Iterable[complex]) -> complex:
        """Floating-point value at the point z (zbar taken as conj(z))."""
        z = list(z)
        vals = z + [v.conjugate() for v in z]
        total = 0j
        for k, c in self.terms.items():
            term = complex(float(c.re), float(c.im))
            for v, e in zip(vals, k):
                if e:
                    term *= v ** e
            total += term
        return total

    def coefficient(self, z: Iterable[int], zbar: Iterable[int]) -> GaussianRational:
        return self.terms.get(tuple(z) + tuple(zbar), ZERO)

    def monomials(self) -> Iterator[Tuple[Monomial, GaussianRational]]:
        for k in sorted(self.terms):
            yield Monomial.from_key(k), self.terms[k]

    def degree(self) -> int:
        return max((sum(k) for k in self.terms), default=-1)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, ScalarPolynomial):
            return self.n == other.n and self.terms == other.terms
        c = coerce(other)
        if c is NotImplemented:
            return False
        return self == ScalarPolynomial.const(self.n, c)

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __repr__(self):
        return f"ScalarPolynomial(n={self.n}, {self!s})"

    def __str__(self):
        if not self.terms:
            return "0"
        n = self.n
        parts = []
        for k in sorted(self.terms, reverse=True):
            c = self.terms[k]
            factors = []
            for j in range(n):
                if k[j]:
                    factors.append(f"z{j + 1}" + (f"^{k[j]}" if k[j] > 1 else ""))
            for j in range(n):
                e = k[n + j]
                if e:
                    factors.append(f"zb{j + 1}" + (f"^{e}" if e > 1 else ""))
            mono = "*".join(factors)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def sphere_moment(p: Tuple[int, ...]) -> Fraction:
    """Normalized integral of |z^p|^2 over the unit sphere S^{2n-1} in C^n.

    Equals (n-1)! p! / (n-1+|p|)! with multi-index factorial p!.
    """
    n = len(p)
    num = factorial(n - 1)
    for e in p:
        num *= factorial(e)
    return Fraction(num, factorial(n - 1 + sum(p)))
