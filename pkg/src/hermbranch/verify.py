"""Verification suites, each returning a Report. `run_suite` is what the CLI calls."""
from __future__ import annotations

import time
from typing import Callable, Dict, Iterable, List, Optional

from .appell import appell_check, corrected_lines, transition_check
from .bases import basis, basis_dim2, compare_dim2, dimension, fischer_basis, theorem2_check
from .calculus import (
    SpaceLabel,
    SpinorPolynomial,
    dirac_z,
    dirac_zdagger,
    euclidean_dirac,
    gram_matrix,
    is_hermitian_monogenic,
    label_of,
    laplacian,
    mult_vector,
)
from .exact import ScalarPolynomial
from .fock import SpinorElement, all_subsets, apply_annihilation, apply_creation
from .golden import golden_check
from .jacobi import check_jacobi_recurrences, check_q_identities
from .oracle import dirac_kernel_dim, exponent_vectors, hermitian_kernel_dim, polynomial_rank
from .report import Report


def _timed(rep: Report, start: float) -> Report:
    rep.elapsed = time.perf_counter() - start
    return rep


def car_check(n_max: int = 4) -> Report:
    """Anticommutation relations of f_j, fd_k on every Fock basis vector, n <= n_max."""
    start = time.perf_counter()
    rep = Report("car", {"n_max": n_max})
    ops = {"f": apply_annihilation, "fd": apply_creation}
    for n in range(1, n_max + 1):
        vecs = [SpinorElement.basis(n, A) for A in all_subsets(n)]
        for x in ("f", "fd"):
            for y in ("f", "fd"):
                for j in range(1, n + 1):
                    for k in range(1, n + 1):
                        ok = True
                        for v in vecs:
                            lhs = ops[x](j, ops[y](k, v)) + ops[y](k, ops[x](j, v))
                            expect = v if (x != y and j == k) else SpinorElement(n)
                            if lhs != expect:
                                ok = False
                                break
                        rep.add(f"n={n} {{{x}_{j}, {y}_{k}}}", ok)
    return _timed(rep, start)


def _monomial_states(n: int, max_degree: int) -> Iterable[SpinorPolynomial]:
    for deg in range(max_degree + 1):
        for e in exponent_vectors(2 * n, deg):
            p = ScalarPolynomial.monomial(e[:n], e[n:])
            for A in all_subsets(n):
                yield SpinorPolynomial.state(n, A, p)


def laplacian_check(ns: Iterable[int] = (1, 2, 3), max_degree: int = 4) -> Report:
    """Factorization of the Laplacian, nilpotency of the Dirac operators, and z z+ + z+ z = |z|^2."""
    start = time.perf_counter()
    rep = Report("laplacian", {"n": list(ns), "max_degree": max_degree})
    for n in ns:
        fails: Dict[str, Optional[str]] = {k: None for k in ("factorization", "dz^2", "dzd^2", "zzd")}
        count = 0
        norm = ScalarPolynomial.norm_sq(n)
        for f in _monomial_states(n, max_degree):
            count += 1
            checks = {
                "factorization": laplacian(f) - (dirac_z(dirac_zdagger(f)) + dirac_zdagger(dirac_z(f))).scale(4),
                "dz^2": dirac_z(dirac_z(f)),
                "dzd^2": dirac_zdagger(dirac_zdagger(f)),
                "zzd": mult_vector(mult_vector(f, "zdagger"), "z") + mult_vector(mult_vector(f, "z"), "zdagger")
                - f.times(norm),
            }
            for name, resid in checks.items():
                if resid and fails[name] is None:
                    fails[name] = f"{f}: residual {resid}"
        for name, w in fails.items():
            rep.add(f"n={n} {name} on {count} monomial states", w is None, witness=w)
    return _timed(rep, start)


def theorem1_check(ns: Iterable[int] = (1, 2, 3), k_max: int = 3) -> Report:
    """Fischer basis: every element monogenic, independent, and as many as the kernel of the Dirac operator."""
    start = time.perf_counter()
    rep = Report("theorem1", {"n": list(ns), "k_max": k_max})
    for n in ns:
        for k in range(k_max + 1):
            B = fischer_basis(n, k)
            bad = next((f for f in B if euclidean_dirac(f)), None)
            rep.add(f"n={n} k={k} monogenic", bad is None, witness=None if bad is None else str(bad))
            target = dirac_kernel_dim(n, k)
            rank = polynomial_rank(B)
            rep.add(f"n={n} k={k} count", len(B) == rank == target, f"elements {len(B)}, rank {rank}, oracle {target}")
    return _timed(rep, start)


def _labels(ns, a_max, b_max):
    for n in ns:
        for a in range(a_max + 1):
            for b in range(b_max + 1):
                for r in range(n + 1):
                    yield n, a, b, r


def monogenic_check(ns=(2, 3), a_max: int = 3, b_max: int = 3) -> Report:
    """Every recursive and closed-form basis element is h-monogenic with the right label."""
    start = time.perf_counter()
    rep = Report("monogenic", {"n": list(ns), "a_max": a_max, "b_max": b_max})
    for n, a, b, r in _labels(ns, a_max, b_max):
        label = SpaceLabel(n, a, b, r)
        elems = basis(n, a, b, r)
        if n == 2:
            elems = elems + [e.element for e in basis_dim2(a, b, r)]
        bad = None
        for f in elems:
            chk = is_hermitian_monogenic(f)
            if not chk or label_of(f) != label:
                bad = f"{f}: {chk.operator} residual {chk.witness}"
                break
        rep.add(f"{label} ({len(elems)} elements)", bad is None, witness=bad)
    return _timed(rep, start)


def _gram_ok(elems: List[SpinorPolynomial]):
    G = gram_matrix(elems)
    for i, row in enumerate(G):
        for j, g in enumerate(row):
            if i != j and g:
                return False, f"entry ({i},{j}) = {g}"
        d = row[i]
        if d.im or d.re <= 0:
            return False, f"diagonal entry {i} = {d}"
    return True, ""


def orthogonality_check(ns=(2, 3), a_max: int = 3, b_max: int = 3, dim2_max: int = 4) -> Report:
    """Gram matrices of all bases are diagonal with positive rational diagonal."""
    start = time.perf_counter()
    rep = Report("orthogonality", {"n": list(ns), "a_max": a_max, "b_max": b_max, "dim2_max": dim2_max})
    for n, a, b, r in _labels(ns, a_max, b_max):
        elems = basis(n, a, b, r)
        if elems:
            ok, why = _gram_ok(elems)
            rep.add(f"{SpaceLabel(n, a, b, r)} recursive ({len(elems)})", ok, why)
    for a in range(dim2_max + 1):
        for b in range(dim2_max + 1):
            for r in range(3):
                elems = [e.element for e in basis_dim2(a, b, r)]
                if elems:
                    ok, why = _gram_ok(elems)
                    rep.add(f"{SpaceLabel(2, a, b, r)} closed form ({len(elems)})", ok, why)
    return _timed(rep, start)


def dims_check(ns=(2, 3), a_max: int = 2, b_max: int = 2, dim2_max: int = 4) -> Report:
    """Recursive dimensions against the elimination oracle, and the closed-form n=2 counts."""
    start = time.perf_counter()
    rep = Report("dims", {"n": list(ns), "a_max": a_max, "b_max": b_max})
    for n, a, b, r in _labels(ns, a_max, b_max):
        d, o = dimension(n, a, b, r), hermitian_kernel_dim(n, a, b, r)
        indep = polynomial_rank(basis(n, a, b, r)) == d if d else True
        rep.add(f"{SpaceLabel(n, a, b, r)}", d == o and indep, f"built {d}, oracle {o}, independent {indep}")
    for a in range(dim2_max + 1):
        for b in range(dim2_max + 1):
            expected = {0: b + 1 if a == 0 else 0, 1: a + b + 2, 2: a + 1 if b == 0 else 0}
            for r, e in expected.items():
                got = len(basis_dim2(a, b, r))
                rep.add(f"closed form M^{r}_{{{a},{b}}}(2)", got == e, f"{got} elements, expected {e}")
    return _timed(rep, start)


def consistency_check(a_max: int = 3, b_max: int = 3) -> Report:
    start = time.perf_counter()
    rep = Report("consistency", {"a_max": a_max, "b_max": b_max})
    for a in range(a_max + 1):
        for b in range(b_max + 1):
            rep.extend(compare_dim2(a, b))
    return _timed(rep, start)


def theorem2_suite(ns=(2, 3), k_max: int = 2) -> Report:
    start = time.perf_counter()
    rep = Report("theorem2", {"n": list(ns), "k_max": k_max})
    for n in ns:
        for k in range(k_max + 1):
            rep.extend(theorem2_check(n, k))
    return _timed(rep, start)


def appell_suite(a_max: int = 4, b_max: int = 4, corrected: bool = False) -> Report:
    start = time.perf_counter()
    rep = Report("appell", {"a_max": a_max, "b_max": b_max, "corrected_signs": corrected})
    rep.extend(appell_check(a_max, b_max, corrected_lines() if corrected else None))
    rep.extend(transition_check(a_max, b_max), prefix="closure: ")
    return _timed(rep, start)


SuiteFn = Callable[..., Report]


def run_suite(name: str, a_max: Optional[int] = None, b_max: Optional[int] = None, n: Optional[int] = None,
              corrected: bool = False) -> Report:
    """Run one named suite (or 'all'); None bounds fall back to each suite's defaults."""

    def ab(da, db):
        return (da if a_max is None else a_max), (db if b_max is None else b_max)

    def ns(default):
        return default if n is None else (n,)

    suites: Dict[str, Callable[[], Report]] = {
        "appell": lambda: appell_suite(*ab(4, 4), corrected=corrected),
        "qprops": lambda: check_q_identities(6, *ab(6, 6)),
        "jacobi": lambda: check_jacobi_recurrences(6, *ab(6, 6)),
        "car": lambda: car_check(n or 4),
        "laplacian": lambda: laplacian_check(ns((1, 2, 3))),
        "theorem1": lambda: theorem1_check(ns((1, 2, 3))),
        "theorem2": lambda: theorem2_suite(ns((2, 3))),
        "orthogonality": lambda: orthogonality_check(ns((2, 3)), *ab(3, 3)),
        "dims": lambda: dims_check(ns((2, 3)), *ab(2, 2)),
        "monogenic": lambda: monogenic_check(ns((2, 3)), *ab(3, 3)),
        "consistency": lambda: consistency_check(*ab(3, 3)),
        "golden": lambda: golden_check(ns((2, 3, 4))),
    }
    if name == "all":
        start = time.perf_counter()
        rep = Report("all", {"a_max": a_max, "b_max": b_max, "n": n})
        for key in sorted(suites):
            sub = suites[key]()
            rep.extend(sub, prefix=f"{key}: ")
            rep.note(sub.summary())
        return _timed(rep, start)
    if name not in suites:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(suites)} or 'all'")
    return suites[name]()


SUITE_NAMES = (
    "appell", "qprops", "jacobi", "car", "laplacian", "theorem1", "theorem2",
    "orthogonality", "dims", "monogenic", "consistency", "golden", "all",
)

__all__ = [
    "SUITE_NAMES",
    "appell_suite",
    "car_check",
    "consistency_check",
    "dims_check",
    "laplacian_check",
    "monogenic_check",
    "orthogonality_check",
    "run_suite",
    "theorem1_check",
    "theorem2_suite",
]
