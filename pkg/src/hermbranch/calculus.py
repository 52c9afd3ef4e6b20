"""Spinor-valued polynomials, Hermitian and Euclidean Dirac operators, inner product."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Optional, Tuple, Union

from .exact import (
    ZERO,
    GaussianRational,
    Key,
    Scalar,
    ScalarPolynomial,
    coerce,
    sphere_moment,
)
from .fock import ANNIHILATE, CREATE, FockSubset, Letter, fock_subset, letters_on


@dataclass(frozen=True, order=True)
class SpaceLabel:
    """Names the space M^r_{a,b}(n) of (a,b)-homogeneous h-monogenics with values in S_n^(r)."""

    n: int
    a: int
    b: int
    r: int

    def __post_init__(self):
        if self.n < 1 or self.a < 0 or self.b < 0:
            raise ValueError(f"bad label {self}")
        if not 0 <= self.r <= self.n:
            raise ValueError(f"grade r={self.r} outside 0..{self.n}")

    @property
    def valid(self) -> bool:
        """False when the label names the zero space (r=0 with a>0, or r=n with b>0)."""
        return not (self.r == 0 and self.a > 0) and not (self.r == self.n and self.b > 0)

    def __str__(self):
        return f"M^{self.r}_{{{self.a},{self.b}}}({self.n})"


class SpinorPolynomial:
    """Finite map FockSubset -> ScalarPolynomial, i.e. sum_A p_A(z, zbar) fd_A I."""

    __slots__ = ("n", "comps")

    def __init__(self, n: int, comps: Optional[Dict[Iterable[int], ScalarPolynomial]] = None):
        self.n = n
        clean: Dict[FockSubset, ScalarPolynomial] = {}
        for A, p in (comps or {}).items():
            A = fock_subset(A, n)
            if not isinstance(p, ScalarPolynomial):
                p = ScalarPolynomial.const(n, p)
            if p.n != n:
                raise ValueError(f"component for {A} has n={p.n}, expected {n}")
            if p:
                clean[A] = clean[A] + p if A in clean else p
        self.comps = {A: p for A, p in clean.items() if p}

    @classmethod
    def _wrap(cls, n: int, comps: Dict[FockSubset, ScalarPolynomial]) -> "SpinorPolynomial":
        obj = object.__new__(cls)
        obj.n = n
        obj.comps = comps
        return obj

    @classmethod
    def zero(cls, n: int) -> "SpinorPolynomial":
        return cls._wrap(n, {})

    @classmethod
    def state(cls, n: int, A: Iterable[int] = (), poly: Union[ScalarPolynomial, Scalar, None] = None):
        """poly * fd_A I (poly defaults to 1)."""
        if poly is None:
            poly = ScalarPolynomial.const(n, 1)
        return cls(n, {fock_subset(A, n): poly})

    # -- linear structure ---------------------------------------------------

    def _check(self, other: "SpinorPolynomial") -> None:
        if not isinstance(other, SpinorPolynomial):
            raise TypeError(f"expected SpinorPolynomial, got {type(other).__name__}")
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: n={self.n} vs n={other.n}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.comps)
        for A, p in other.comps.items():
            if A in out:
                s = out[A] + p
                if s:
                    out[A] = s
                else:
                    del out[A]
            else:
                out[A] = p
        return SpinorPolynomial._wrap(self.n, out)

    def __neg__(self):
        return SpinorPolynomial._wrap(self.n, {A: -p for A, p in self.comps.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: Scalar) -> "SpinorPolynomial":
        c = coerce(c)
        if not c:
            return SpinorPolynomial.zero(self.n)
        return SpinorPolynomial._wrap(self.n, {A: p.scale(c) for A, p in self.comps.items()})

    def times(self, p: ScalarPolynomial) -> "SpinorPolynomial":
        """Multiply every component by the scalar polynomial p."""
        if p.n != self.n:
            raise ValueError("dimension mismatch")
        out = {}
        for A, q in self.comps.items():
            r = p * q
            if r:
                out[A] = r
        return SpinorPolynomial._wrap(self.n, out)

    def __mul__(self, other):
        if isinstance(other, ScalarPolynomial):
            return self.times(other)
        c = coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    # -- Clifford action ----------------------------------------------------

    def apply_letters(self, letters: Tuple[Letter, ...], sign: int = 1) -> "SpinorPolynomial":
        """Left multiplication by the Witt word letters[0] letters[1] ... (right-to-left)."""
        for _, j in letters:
            if not 1 <= j <= self.n:
                raise IndexError(f"mode index {j} outside 1..{self.n}")
        out: Dict[FockSubset, ScalarPolynomial] = {}
        for A, p in self.comps.items():
            hit = letters_on(letters, A)
            if hit is None:
                continue
            s, B = hit
            q = p if s * sign == 1 else -p
            _acc(out, B, q)
        return SpinorPolynomial._wrap(self.n, out)

    def fd(self, j: int) -> "SpinorPolynomial":
        return self.apply_letters(((CREATE, j),))

    def f(self, j: int) -> "SpinorPolynomial":
        return self.apply_letters(((ANNIHILATE, j),))

    # -- calculus -----------------------------------------------------------

    def derive(self, kind: str, j: int) -> "SpinorPolynomial":
        out = {}
        for A, p in self.comps.items():
            q = p.derive(kind, j)
            if q:
                out[A] = q
        return SpinorPolynomial._wrap(self.n, out)

    def grade(self, r: int) -> "SpinorPolynomial":
        return SpinorPolynomial._wrap(self.n, {A: p for A, p in self.comps.items() if len(A) == r})

    def grades(self) -> set:
        return {len(A) for A in self.comps}

    def bidegrees(self) -> set:
        out = set()
        for p in self.comps.values():
            out.update(p.bidegree_split())
        return out

    def embed(self, n_new: int) -> "SpinorPolynomial":
        """Same polynomial regarded in dimension n_new (extra variables/modes unused)."""
        return SpinorPolynomial._wrap(n_new, {A: p.embed(n_new) for A, p in self.comps.items()})

    def terms(self) -> Iterator[Tuple[FockSubset, Key, GaussianRational]]:
        for A in sorted(self.comps):
            p = self.comps[A]
            for k in sorted(p.terms):
                yield A, k, p.terms[k]

    def num_terms(self) -> int:
        return sum(len(p.terms) for p in self.comps.values())

    def coordinates(self) -> Dict[Tuple[FockSubset, Key], GaussianRational]:
        return {(A, k): c for A, p in self.comps.items() for k, c in p.terms.items()}

    def __bool__(self):
        return bool(self.comps)

    def is_zero(self) -> bool:
        return not self.comps

    def __eq__(self, other):
        return isinstance(other, SpinorPolynomial) and self.n == other.n and self.comps == other.comps

    def __hash__(self):
        return hash((self.n, frozenset(self.comps.items())))

    def __repr__(self):
        return f"SpinorPolynomial(n={self.n}, {self!s})"

    def __str__(self):
        if not self.comps:
            return "0"
        parts = []
        for A in sorted(self.comps, key=lambda A: (len(A), A)):
            state = "".join(f"fd{j}" for j in A) + "I"
            parts.append(f"({self.comps[A]}) {state}")
        return " + ".join(parts)


def _acc(out: Dict[FockSubset, ScalarPolynomial], A: FockSubset, p: ScalarPolynomial) -> None:
    if A in out:
        s = out[A] + p
        if s:
            out[A] = s
        else:
            del out[A]
    elif p:
        out[A] = p


# -- Dirac operators and vector variables -------------------------------------


def dirac_z(f: SpinorPolynomial) -> SpinorPolynomial:
    """The Hermitian Dirac operator sum_j fd_j d/dz_j."""
    out = SpinorPolynomial.zero(f.n)
    for j in range(1, f.n + 1):
        out = out + f.derive("z", j).fd(j)
    return out


def dirac_zdagger(f: SpinorPolynomial) -> SpinorPolynomial:
    """The Hermitian Dirac operator sum_j f_j d/dzbar_j."""
    out = SpinorPolynomial.zero(f.n)
    for j in range(1, f.n + 1):
        out = out + f.derive("zbar", j).f(j)
    return out


def hermitian_dirac(f: SpinorPolynomial, which: str) -> SpinorPolynomial:
    if which == "z":
        return dirac_z(f)
    if which in ("zdagger", "zd"):
        return dirac_zdagger(f)
    raise ValueError(f"unknown Hermitian Dirac selector {which!r}")


def euclidean_dirac(f: SpinorPolynomial) -> SpinorPolynomial:
    """The Euclidean Dirac operator on R^{2n}, equal to 2(d_zdagger - d_z)."""
    return (dirac_zdagger(f) - dirac_z(f)).scale(2)


def dirac_J(f: SpinorPolynomial) -> SpinorPolynomial:
    """J[Dirac] with J[e_j] = -e_{n+j}, J[e_{n+j}] = e_j; equals -2i(d_zdagger + d_z)."""
    return (dirac_zdagger(f) + dirac_z(f)).scale(GaussianRational(0, -2))


_VECTORS = {
    "z": (ANNIHILATE, "z", False),
    "zdagger": (CREATE, "zbar", False),
    "ztilde": (ANNIHILATE, "z", True),
    "ztilde_dagger": (CREATE, "zbar", True),
}


def mult_vector(f: SpinorPolynomial, which: str) -> SpinorPolynomial:
    """Left multiplication by z = sum f_j z_j, zdagger = sum fd_j zbar_j, or their
    tilde versions (sum over j <= n-1 only)."""
    try:
        kind, var, tilde = _VECTORS[which]
    except KeyError:
        raise ValueError(f"unknown vector variable {which!r}") from None
    upto = f.n - 1 if tilde else f.n
    out = SpinorPolynomial.zero(f.n)
    for j in range(1, upto + 1):
        out = out + f.apply_letters(((kind, j),)).times(ScalarPolynomial.var(f.n, var, j))
    return out


def laplacian(f: SpinorPolynomial) -> SpinorPolynomial:
    """Flat Laplacian on R^{2n}: 4 sum_j d/dz_j d/dzbar_j, componentwise."""
    out = SpinorPolynomial.zero(f.n)
    for j in range(1, f.n + 1):
        out = out + f.derive("z", j).derive("zbar", j)
    return out.scale(4)


@dataclass
class MonogenicCheck:
    ok: bool
    witness: Optional[SpinorPolynomial] = None
    operator: Optional[str] = None

    def __bool__(self):
        return self.ok


def is_hermitian_monogenic(f: SpinorPolynomial) -> MonogenicCheck:
    """True iff d_z f = 0 = d_zdagger f; otherwise the first nonzero residual."""
    r = dirac_z(f)
    if r:
        return MonogenicCheck(False, r, "z")
    r = dirac_zdagger(f)
    if r:
        return MonogenicCheck(False, r, "zdagger")
    return MonogenicCheck(True)


MIXED = "mixed"


def label_of(f: SpinorPolynomial) -> Union[SpaceLabel, str]:
    if not f:
        raise ValueError("the zero polynomial has no label")
    grades = f.grades()
    bds = f.bidegrees()
    if len(grades) != 1 or len(bds) != 1:
        return MIXED
    (a, b), r = bds.pop(), grades.pop()
    return SpaceLabel(f.n, a, b, r)


# -- inner product ------------------------------------------------------------


def _split_terms(p: ScalarPolynomial):
    """Group terms z^alpha zbar^beta by the difference alpha - beta."""
    n = p.n
    groups: Dict[Tuple[int, ...], List[Tuple[Key, Key, GaussianRational]]] = {}
    for k, c in p.terms.items():
        al, be = k[:n], k[n:]
        diff = tuple(x - y for x, y in zip(al, be))
        groups.setdefault(diff, []).append((al, be, c))
    return groups


def scalar_inner(p: ScalarPolynomial, q: ScalarPolynomial, _moments=None) -> GaussianRational:
    """Normalized surface integral of conj(p) q over S^{2n-1}."""
    if p.n != q.n:
        raise ValueError("dimension mismatch")
    moments = {} if _moments is None else _moments
    gp, gq = _split_terms(p), _split_terms(q)
    total = ZERO
    for diff, plist in gp.items():
        qlist = gq.get(diff)
        if not qlist:
            continue
        for al, be, c in plist:
            cc = c.conj()
            for ga, de, d in qlist:
                # conj(z^al zbar^be) z^ga zbar^de = z^{be+ga} zbar^{al+de}; equal since al-be = ga-de
                e = tuple(x + y for x, y in zip(be, ga))
                m = moments.get(e)
                if m is None:
                    m = moments[e] = sphere_moment(e)
                total = total + cc * d * m
    return total


def inner_product(f: SpinorPolynomial, g: SpinorPolynomial) -> GaussianRational:
    """sum_A of the normalized sphere integral of conj(f_A) g_A; Fock states orthonormal."""
    if f.n != g.n:
        raise ValueError(f"dimension mismatch: n={f.n} vs n={g.n}")
    total = ZERO
    moments: Dict[Tuple[int, ...], Fraction] = {}
    for A, p in f.comps.items():
        q = g.comps.get(A)
        if q is not None:
            total = total + scalar_inner(p, q, moments)
    return total


def gram_matrix(fs: List[SpinorPolynomial]) -> List[List[GaussianRational]]:
    if not fs:
        return []
    n = fs[0].n
    if any(f.n != n for f in fs):
        raise ValueError("dimension mismatch in gram_matrix")
    m = len(fs)
    G = [[ZERO] * m for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            v = inner_product(fs[i], fs[j])
            G[i][j] = v
            G[j][i] = v.conj()
    return G


def is_diagonal(G: List[List[GaussianRational]]) -> bool:
    return all(not G[i][j] for i in range(len(G)) for j in range(len(G)) if i != j)


__all__ = [
    "MIXED",
    "MonogenicCheck",
    "SpaceLabel",
    "SpinorPolynomial",
    "dirac_J",
    "dirac_z",
    "dirac_zdagger",
    "euclidean_dirac",
    "gram_matrix",
    "hermitian_dirac",
    "inner_product",
    "is_diagonal",
    "is_hermitian_monogenic",
    "label_of",
    "laplacian",
    "mult_vector",
    "scalar_inner",
]
