"""Brute-force linear-algebra oracles: exact ranks and Dirac kernel dimensions.

The Dirac matrices here are assembled straight from the monomial basis and the
Fock sign rule, without going through SpinorPolynomial, so they give an
independent count to compare the branching constructions against.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import lcm
from typing import Dict, Hashable, List, Sequence, Tuple

from .exact import GaussianRational

Row = Dict[int, int]


def bareiss_rank(rows: List[List[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    M = [list(r) for r in rows if any(r)]
    if not M:
        return 0
    ncols = len(M[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((i for i in range(rank, len(M)) if M[i][col]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        p = M[rank][col]
        for i in range(rank + 1, len(M)):
            row = M[i]
            f = row[col]
            top = M[rank]
            for k in range(col + 1, ncols):
                # exact division is guaranteed by Sylvester's identity
                row[k] = (p * row[k] - f * top[k]) // prev
            row[col] = 0
        prev = p
        rank += 1
        if rank == len(M):
            break
    return rank


def sparse_rank(rows: List[Row]) -> int:
    """Rank of a sparse integer matrix given as {column: value} rows."""
    rows = [r for r in rows if r]
    if not rows:
        return 0
    cols = sorted({c for r in rows for c in r})
    index = {c: i for i, c in enumerate(cols)}
    dense = []
    for r in rows:
        v = [0] * len(cols)
        for c, x in r.items():
            v[index[c]] = x
        dense.append(v)
    return bareiss_rank(dense)


def rational_rank(vectors: Sequence[Dict[Hashable, GaussianRational]]) -> int:
    """Rank over Q(i) of vectors given as sparse coordinate maps.

    Rows are cleared of denominators; complex rows are realified, which doubles
    the rank, so the result is halved in that case.
    """
    keys = sorted({k for v in vectors for k in v}, key=repr)
    index = {k: i for i, k in enumerate(keys)}
    complex_ = any(c.im for v in vectors for c in v.values())
    rows: List[List[int]] = []
    for v in vectors:
        den = 1
        for c in v.values():
            den = lcm(den, c.re.denominator, c.im.denominator)
        re = [0] * len(keys)
        im = [0] * len(keys)
        for k, c in v.items():
            re[index[k]] = int(c.re * den)
            im[index[k]] = int(c.im * den)
        if complex_:
            rows.append(re + [-x for x in im])
            rows.append(im + re)
        else:
            rows.append(re)
    r = bareiss_rank(rows) if rows and keys else 0
    return r // 2 if complex_ else r


# -- monomial bases -----------------------------------------------------------


def exponent_vectors(nvars: int, degree: int) -> List[Tuple[int, ...]]:
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return sorted(out)


def bihomogeneous_monomials(n: int, a: int, b: int) -> List[Tuple[int, ...]]:
    return [za + zb for za in exponent_vectors(n, a) for zb in exponent_vectors(n, b)]


def subsets_of_size(n: int, r: int) -> List[Tuple[int, ...]]:
    return list(combinations(range(1, n + 1), r))


def _fock_sign(A: Tuple[int, ...], j: int) -> int:
    return -1 if sum(1 for k in A if k < j) % 2 else 1


def _hermitian_dirac_rows(n: int, a: int, b: int, r: int) -> Tuple[List[Row], int]:
    """Rows of the stacked (d_z, d_zdagger) map on bidegree (a,b), grade r polynomials."""
    monos = bihomogeneous_monomials(n, a, b)
    subsets = subsets_of_size(n, r)
    unknowns = [(A, m) for A in subsets for m in monos]
    col = {u: i for i, u in enumerate(unknowns)}
    images: Dict[Tuple, Row] = {}
    for (A, m), ci in col.items():
        for j in range(1, n + 1):
            # fd_j d/dz_j: needs j not in A, exponent of z_j positive
            e = m[j - 1]
            if e and j not in A:
                B = tuple(sorted(A + (j,)))
                mm = list(m)
                mm[j - 1] -= 1
                key = ("dz", B, tuple(mm))
                images.setdefault(key, {})[ci] = images.get(key, {}).get(ci, 0) + _fock_sign(A, j) * e
            # f_j d/dzbar_j: needs j in A
            e = m[n + j - 1]
            if e and j in A:
                B = tuple(k for k in A if k != j)
                mm = list(m)
                mm[n + j - 1] -= 1
                key = ("dzd", B, tuple(mm))
                images.setdefault(key, {})[ci] = images.get(key, {}).get(ci, 0) + _fock_sign(A, j) * e
    return list(images.values()), len(unknowns)


@lru_cache(maxsize=None)
def hermitian_kernel_dim(n: int, a: int, b: int, r: int) -> int:
    """dim of {f bihomogeneous (a,b), S_n^(r)-valued : d_z f = 0 = d_zdagger f}, by elimination."""
    if not 0 <= r <= n:
        return 0
    rows, ncols = _hermitian_dirac_rows(n, a, b, r)
    # transpose: rank of the map = rank of its row set (rows index images)
    return ncols - sparse_rank(rows)


@lru_cache(maxsize=None)
def dirac_kernel_dim(n: int, k: int) -> int:
    """dim of the S_n-valued degree-k polynomials killed by the Euclidean Dirac operator 2(d_zd - d_z)."""
    all_subsets = [A for r in range(n + 1) for A in subsets_of_size(n, r)]
    monos = []
    for a in range(k + 1):
        monos.extend(bihomogeneous_monomials(n, a, k - a))
    col = {(A, m): i for i, (A, m) in enumerate((A, m) for A in all_subsets for m in monos)}
    images: Dict[Tuple, Row] = {}
    for (A, m), ci in col.items():
        for j in range(1, n + 1):
            e = m[j - 1]
            if e and j not in A:
                B = tuple(sorted(A + (j,)))
                mm = list(m)
                mm[j - 1] -= 1
                key = (B, tuple(mm))
                row = images.setdefault(key, {})
                row[ci] = row.get(ci, 0) - 2 * _fock_sign(A, j) * e
            e = m[n + j - 1]
            if e and j in A:
                B = tuple(k_ for k_ in A if k_ != j)
                mm = list(m)
                mm[n + j - 1] -= 1
                key = (B, tuple(mm))
                row = images.setdefault(key, {})
                row[ci] = row.get(ci, 0) + 2 * _fock_sign(A, j) * e
    return len(col) - sparse_rank([{c: v for c, v in r.items() if v} for r in images.values()])


def polynomial_rank(polys) -> int:
    """Rank over Q(i) of a list of SpinorPolynomials."""
    return rational_rank([p.coordinates() for p in polys])


__all__ = [
    "bareiss_rank",
    "bihomogeneous_monomials",
    "dirac_kernel_dim",
    "exponent_vectors",
    "hermitian_kernel_dim",
    "polynomial_rank",
    "rational_rank",
    "sparse_rank",
]
