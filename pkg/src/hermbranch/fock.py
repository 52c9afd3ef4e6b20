"""Spinor space S_n realized as the fermionic Fock space on n modes.

The basis state for a subset A = {k_1 < ... < k_r} of {1..n} is
fd_{k_1} fd_{k_2} ... fd_{k_r} I, where fd_j is the Witt creation element and
I the primitive idempotent (f_j I = 0).  With this ordering, left
multiplication by fd_j or f_j on A picks up the sign (-1)^{#{k in A : k < j}}.
"""
from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, Optional, Tuple

from .exact import ONE, GaussianRational, Scalar, coerce

FockSubset = Tuple[int, ...]
Letter = Tuple[str, int]  # ("f", j) annihilation, ("fd", j) creation

CREATE = "fd"
ANNIHILATE = "f"


def fock_subset(indices: Iterable[int], n: Optional[int] = None) -> FockSubset:
    """Canonical (sorted, duplicate-free) subset; validates the range when n is given."""
    idx = tuple(sorted(indices))
    if len(set(idx)) != len(idx):
        raise ValueError(f"repeated mode index in {idx}")
    if n is not None and idx and (idx[0] < 1 or idx[-1] > n):
        raise ValueError(f"mode index outside 1..{n} in {idx}")
    return idx


def _check_mode(j: int, n: int) -> None:
    if not 1 <= j <= n:
        raise IndexError(f"mode index {j} outside 1..{n}")


def create_on(j: int, A: FockSubset) -> Optional[Tuple[int, FockSubset]]:
    """fd_j acting on basis state A: (sign, A u {j}), or None when j is in A."""
    pos = bisect_left(A, j)
    if pos < len(A) and A[pos] == j:
        return None
    return (-1 if pos & 1 else 1), A[:pos] + (j,) + A[pos:]


def annihilate_on(j: int, A: FockSubset) -> Optional[Tuple[int, FockSubset]]:
    """f_j acting on basis state A: (sign, A minus {j}), or None when j is not in A."""
    pos = bisect_left(A, j)
    if pos == len(A) or A[pos] != j:
        return None
    return (-1 if pos & 1 else 1), A[:pos] + A[pos + 1:]


def letter_on(letter: Letter, A: FockSubset) -> Optional[Tuple[int, FockSubset]]:
    kind, j = letter
    if kind == CREATE:
        return create_on(j, A)
    if kind == ANNIHILATE:
        return annihilate_on(j, A)
    raise ValueError(f"unknown Witt letter kind {kind!r}")


def letters_on(letters: Tuple[Letter, ...], A: FockSubset) -> Optional[Tuple[int, FockSubset]]:
    """Apply a word right-to-left to a basis state."""
    sign = 1
    for letter in reversed(letters):
        hit = letter_on(letter, A)
        if hit is None:
            return None
        s, A = hit
        sign *= s
    return sign, A


class SpinorElement:
    """A constant spinor: finite map FockSubset -> GaussianRational."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Optional[Dict[FockSubset, Scalar]] = None):
        self.n = n
        clean = {}
        for A, c in (coeffs or {}).items():
            A = fock_subset(A, n)
            c = coerce(c)
            if c:
                clean[A] = c
        self.coeffs = clean

    @classmethod
    def basis(cls, n: int, A: Iterable[int] = ()) -> "SpinorElement":
        return cls(n, {fock_subset(A, n): ONE})

    @classmethod
    def vacuum(cls, n: int) -> "SpinorElement":
        return cls.basis(n, ())

    def _accumulate(self, pairs) -> "SpinorElement":
        out: Dict[FockSubset, GaussianRational] = {}
        for A, c in pairs:
            out[A] = out[A] + c if A in out else c
        return SpinorElement(self.n, out)

    def __add__(self, other: "SpinorElement") -> "SpinorElement":
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        return self._accumulate(list(self.coeffs.items()) + list(other.coeffs.items()))

    def __neg__(self):
        return SpinorElement(self.n, {A: -c for A, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c: Scalar) -> "SpinorElement":
        c = coerce(c)
        return SpinorElement(self.n, {A: v * c for A, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, SpinorElement) and self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return f"SpinorElement(n={self.n}, 0)"
        body = " + ".join(f"{c}*{set(A) if A else 'I'}" for A, c in sorted(self.coeffs.items()))
        return f"SpinorElement(n={self.n}, {body})"


def apply_creation(j: int, s: SpinorElement) -> SpinorElement:
    _check_mode(j, s.n)
    pairs = []
    for A, c in s.coeffs.items():
        hit = create_on(j, A)
        if hit is not None:
            pairs.append((hit[1], c * hit[0]))
    return s._accumulate(pairs)


def apply_annihilation(j: int, s: SpinorElement) -> SpinorElement:
    _check_mode(j, s.n)
    pairs = []
    for A, c in s.coeffs.items():
        hit = annihilate_on(j, A)
        if hit is not None:
            pairs.append((hit[1], c * hit[0]))
    return s._accumulate(pairs)


@dataclass(frozen=True)
class WittWord:
    """scalar * l_1 l_2 ... l_k, each l either f_j or fd_j; acts right-to-left."""

    letters: Tuple[Letter, ...] = ()
    scalar: GaussianRational = ONE

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple((str(k), int(j)) for k, j in self.letters))
        object.__setattr__(self, "scalar", coerce(self.scalar))
        for kind, _ in self.letters:
            if kind not in (CREATE, ANNIHILATE):
                raise ValueError(f"unknown Witt letter kind {kind!r}")

    @classmethod
    def f(cls, j: int) -> "WittWord":
        return cls(((ANNIHILATE, j),))

    @classmethod
    def fd(cls, j: int) -> "WittWord":
        return cls(((CREATE, j),))

    def __mul__(self, other):
        if isinstance(other, WittWord):
            return WittWord(self.letters + other.letters, self.scalar * other.scalar)
        return WittWord(self.letters, self.scalar * coerce(other))

    __rmul__ = __mul__

    def check_range(self, n: int) -> None:
        for _, j in self.letters:
            _check_mode(j, n)


def apply_word(w: WittWord, s: SpinorElement) -> SpinorElement:
    w.check_range(s.n)
    pairs = []
    for A, c in s.coeffs.items():
        hit = letters_on(w.letters, A)
        if hit is not None:
            pairs.append((hit[1], c * w.scalar * hit[0]))
    return s._accumulate(pairs)


def hermitian_adjoint(w: WittWord) -> WittWord:
    """Reverse the letters, swap f_j <-> fd_j, conjugate the scalar."""
    swap = {CREATE: ANNIHILATE, ANNIHILATE: CREATE}
    return WittWord(tuple((swap[k], j) for k, j in reversed(w.letters)), w.scalar.conj())


def grade_projection(s: SpinorElement, r: int) -> SpinorElement:
    if not 0 <= r <= s.n:
        raise ValueError(f"grade {r} outside 0..{s.n}")
    return SpinorElement(s.n, {A: c for A, c in s.coeffs.items() if len(A) == r})


def split_last_mode(s: SpinorElement) -> Tuple[SpinorElement, SpinorElement]:
    """Write s = first + fd_n * second with first, second free of mode n."""
    n = s.n
    if n < 1:
        raise ValueError("split_last_mode needs n >= 1")
    first, second = {}, {}
    for A, c in s.coeffs.items():
        if A and A[-1] == n:
            B = A[:-1]
            # fd_n B = (-1)^{|B|} A, since every index in B is below n
            second[B] = -c if len(B) & 1 else c
        else:
            first[A] = c
    return SpinorElement(n, first), SpinorElement(n, second)


def inner(s: SpinorElement, t: SpinorElement) -> GaussianRational:
    """Sesquilinear form with orthonormal Fock states, antilinear in s."""
    if s.n != t.n:
        raise ValueError("dimension mismatch")
    total = GaussianRational(0)
    for A, c in s.coeffs.items():
        d = t.coeffs.get(A)
        if d is not None:
            total = total + c.conj() * d
    return total


def all_subsets(n: int, r: Optional[int] = None):
    """All Fock subsets of {1..n} (of size r if given), in canonical order."""
    sizes = range(n + 1) if r is None else [r]
    for k in sizes:
        yield from combinations(range(1, n + 1), k)
