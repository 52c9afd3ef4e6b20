"""The Appell table for the closed-form n=2 bases.

Each printed line is a row of APPELL_LINES: a source family with its parameter
range, the derivative, and the named target (or zero). Lines are checked
verbatim, so a misprinted sign shows up as a failing item rather than being
silently repaired. `transition_check` derives the same information without the
table, by expanding every derivative in the target basis.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from .bases import basis_dim2, dim2_element, ratio
from .calculus import SpinorPolynomial
from .report import Report

# (kind, a, b, param) of a target, or None for zero
Target = Optional[Tuple[str, int, int, int]]


@dataclass(frozen=True)
class AppellLine:
    regime: str  # i: a<b, ii: a>b, iii: a=b
    var: Tuple[str, int]  # ("z", 2), ("zbar", 1), ...
    source: str
    params: Callable[[int, int], range]
    target: Callable[[int, int, int], Target]
    sign: int = 1
    text: str = ""


def _L(regime, var, source, params, target, sign, text):
    return AppellLine(regime, var, source, params, target, sign, text)


Z1, ZB1, Z2, ZB2 = ("z", 1), ("zbar", 1), ("z", 2), ("zbar", 2)
ZERO = lambda a, b, k: None  # noqa: E731

APPELL_LINES: List[AppellLine] = [
    # regime (i), a < b
    _L("i", Z2, "p", lambda a, b: range(0, a), lambda a, b, c: ("p", a - 1, b, c), 1, "dz2 p_{a,b;c,0} = p_{a-1,b;c,0}"),
    _L("i", Z2, "p", lambda a, b: range(a, a + 1), ZERO, 1, "dz2 p_{a,b;a,0} = 0"),
    _L("i", Z2, "qt", lambda a, b: range(0, b - a), lambda a, b, d: ("qt", a - 1, b, d), 1, "dz2 q~_{a,b;0,d} = q~_{a-1,b;0,d}"),
    _L("i", Z2, "q", lambda a, b: range(b - a, b - a + 1), lambda a, b, d: ("qt", a - 1, b, b - a), 1, "dz2 q_{a,b;0,b-a} = q~_{a-1,b;0,b-a}"),
    _L("i", Z2, "q", lambda a, b: range(b - a + 1, b + 1), lambda a, b, d: ("q", a - 1, b, d), 1, "dz2 q_{a,b;0,d} = q_{a-1,b;0,d}"),
    _L("i", ZB2, "p", lambda a, b: range(0, a + 1), lambda a, b, c: ("p", a, b - 1, c), 1, "dzb2 p_{a,b;c,0} = p_{a,b-1;c,0}"),
    _L("i", ZB2, "qt", lambda a, b: range(0, b - a - 1), lambda a, b, d: ("qt", a, b - 1, d), 1, "dzb2 q~_{a,b;0,d} = q~_{a,b-1;0,d}"),
    _L("i", ZB2, "qt", lambda a, b: range(b - a - 1, b - a), lambda a, b, d: ("q", a, b - 1, b - a - 1), 1, "dzb2 q~_{a,b;0,b-a-1} = q_{a,b-1;0,b-a-1}"),
    _L("i", ZB2, "q", lambda a, b: range(b - a, b), lambda a, b, d: ("q", a, b - 1, d), 1, "dzb2 q_{a,b;0,d} = q_{a,b-1;0,d}"),
    _L("i", ZB2, "q", lambda a, b: range(b, b + 1), ZERO, 1, "dzb2 q_{a,b;0,b} = 0"),
    # regime (ii), a > b
    _L("ii", Z2, "pt", lambda a, b: range(0, a - b - 1), lambda a, b, c: ("pt", a - 1, b, c), 1, "dz2 p~_{a,b;c,0} = p~_{a-1,b;c,0}"),
    _L("ii", Z2, "pt", lambda a, b: range(a - b - 1, a - b), lambda a, b, c: ("p", a - 1, b, a - b - 1), 1, "dz2 p~_{a,b;a-b-1,0} = p_{a-1,b;a-b-1,0}"),
    _L("ii", Z2, "p", lambda a, b: range(a - b, a), lambda a, b, c: ("p", a - 1, b, c), 1, "dz2 p_{a,b;c,0} = p_{a-1,b;c,0}"),
    _L("ii", Z2, "p", lambda a, b: range(a, a + 1), ZERO, 1, "dz2 p_{a,b;a,0} = 0"),
    _L("ii", Z2, "q", lambda a, b: range(0, b + 1), lambda a, b, d: ("q", a - 1, b, d), 1, "dz2 q_{a,b;0,d} = q_{a-1,b;0,d}"),
    _L("ii", ZB2, "pt", lambda a, b: range(0, a - b), lambda a, b, c: ("pt", a, b - 1, c), 1, "dzb2 p~_{a,b;c,0} = p~_{a,b-1;c,0}"),
    _L("ii", ZB2, "p", lambda a, b: range(a - b, a - b + 1), lambda a, b, c: ("pt", a, b - 1, a - b), 1, "dzb2 p_{a,b;a-b,0} = p~_{a,b-1;a-b,0}"),
    _L("ii", ZB2, "p", lambda a, b: range(a - b + 1, a + 1), lambda a, b, c: ("p", a, b - 1, c), 1, "dzb2 p_{a,b;c,0} = p_{a,b-1;c,0}"),
    _L("ii", ZB2, "q", lambda a, b: range(0, b), lambda a, b, d: ("q", a, b - 1, d), 1, "dzb2 q_{a,b;0,d} = q_{a,b-1;0,d}"),
    _L("ii", ZB2, "q", lambda a, b: range(b, b + 1), ZERO, 1, "dzb2 q_{a,b;0,b} = 0"),
    # regime (iii), a = b
    _L("iii", Z2, "p", lambda a, b: range(0, a), lambda a, b, c: ("p", a - 1, a, c), 1, "dz2 p_{a,a;c,0} = p_{a-1,a;c,0}"),
    _L("iii", Z2, "p", lambda a, b: range(a, a + 1), ZERO, 1, "dz2 p_{a,a;a,0} = 0"),
    _L("iii", Z2, "q", lambda a, b: range(0, 1), lambda a, b, d: ("qt", a - 1, a, 0), 1, "dz2 q_{a,a;0,0} = q~_{a-1,a;0,0}"),
    _L("iii", Z2, "q", lambda a, b: range(1, a + 1), lambda a, b, d: ("q", a - 1, a, d), 1, "dz2 q_{a,a;0,d} = q_{a-1,a;0,d}"),
    _L("iii", ZB2, "p", lambda a, b: range(0, 1), lambda a, b, c: ("pt", a, a - 1, 0), 1, "dzb2 p_{a,a;0,0} = p~_{a,a-1;0,0}"),
    _L("iii", ZB2, "p", lambda a, b: range(1, a + 1), lambda a, b, c: ("p", a, a - 1, c), 1, "dzb2 p_{a,a;c,0} = p_{a,a-1;c,0}"),
    _L("iii", ZB2, "q", lambda a, b: range(0, a), lambda a, b, d: ("q", a, a - 1, d), 1, "dzb2 q_{a,a;0,d} = q_{a,a-1;0,d}"),
    _L("iii", ZB2, "q", lambda a, b: range(a, a + 1), ZERO, 1, "dzb2 q_{a,a;0,a} = 0"),
    # z1 / zbar1, regime (i)
    _L("i", Z1, "p", lambda a, b: range(0, 1), lambda a, b, c: ("qt", a - 1, b, 0), -1, "dz1 p_{a,b;0,0} = -q~_{a-1,b;0,0}"),
    _L("i", Z1, "p", lambda a, b: range(1, a + 1), lambda a, b, c: ("p", a - 1, b, c - 1), 1, "dz1 p_{a,b;c,0} = p_{a-1,b;c-1,0}"),
    _L("i", Z1, "qt", lambda a, b: range(0, b - a), lambda a, b, d: ("qt", a - 1, b, d + 1), -1, "dz1 q~_{a,b;0,d} = -q~_{a-1,b;0,d+1}"),
    _L("i", Z1, "q", lambda a, b: range(b - a, b), lambda a, b, d: ("q", a - 1, b, d + 1), -1, "dz1 q_{a,b;0,d} = -q_{a-1,b;0,d+1}"),
    _L("i", Z1, "q", lambda a, b: range(b, b + 1), ZERO, 1, "dz1 q_{a,b;0,b} = 0"),
    _L("i", ZB1, "p", lambda a, b: range(0, a), lambda a, b, c: ("p", a, b - 1, c + 1), -1, "dzb1 p_{a,b;c,0} = -p_{a,b-1;c+1,0}"),
    _L("i", ZB1, "p", lambda a, b: range(a, a + 1), ZERO, 1, "dzb1 p_{a,b;a,0} = 0"),
    _L("i", ZB1, "qt", lambda a, b: range(0, 1), lambda a, b, d: ("p", a, b - 1, 0), 1, "dzb1 q~_{a,b;0,0} = p_{a,b-1;0,0}"),
    _L("i", ZB1, "qt", lambda a, b: range(1, b - a), lambda a, b, d: ("qt", a, b - 1, d - 1), 1, "dzb1 q~_{a,b;0,d} = q~_{a,b-1;0,d-1}"),
    _L("i", ZB1, "q", lambda a, b: range(b - a, b + 1), lambda a, b, d: ("q", a, b - 1, d - 1), 1, "dzb1 q_{a,b;0,d} = q_{a,b-1;0,d-1}"),
    # z1 / zbar1, regime (ii)
    _L("ii", Z1, "pt", lambda a, b: range(0, 1), lambda a, b, c: ("q", a - 1, b, 0), -1, "dz1 p~_{a,b;0,0} = -q_{a-1,b;0,0}"),
    _L("ii", Z1, "pt", lambda a, b: range(1, a - b), lambda a, b, c: ("pt", a - 1, b, c - 1), 1, "dz1 p~_{a,b;c,0} = p~_{a-1,b;c-1,0}"),
    _L("ii", Z1, "p", lambda a, b: range(a - b, a + 1), lambda a, b, c: ("p", a - 1, b, c - 1), 1, "dz1 p_{a,b;c,0} = p_{a-1,b;c-1,0}"),
    _L("ii", Z1, "q", lambda a, b: range(0, b), lambda a, b, d: ("q", a - 1, b, d + 1), 1, "dz1 q_{a,b;0,d} = q_{a-1,b;0,d+1}"),
    _L("ii", Z1, "q", lambda a, b: range(b, b + 1), ZERO, 1, "dz1 q_{a,b;0,b} = 0"),
    _L("ii", ZB1, "pt", lambda a, b: range(0, a - b), lambda a, b, c: ("pt", a, b - 1, c + 1), -1, "dzb1 p~_{a,b;c,0} = -p~_{a,b-1;c+1,0}"),
    _L("ii", ZB1, "p", lambda a, b: range(a - b, a), lambda a, b, c: ("p", a, b - 1, c + 1), 1, "dzb1 p_{a,b;c,0} = p_{a,b-1;c+1,0}"),
    _L("ii", ZB1, "p", lambda a, b: range(a, a + 1), ZERO, 1, "dzb1 p_{a,b;a,0} = 0"),
    _L("ii", ZB1, "q", lambda a, b: range(0, 1), lambda a, b, d: ("pt", a, b - 1, 0), 1, "dzb1 q_{a,b;0,0} = p~_{a,b-1;0,0}"),
    _L("ii", ZB1, "q", lambda a, b: range(1, b + 1), lambda a, b, d: ("q", a, b - 1, d - 1), 1, "dzb1 q_{a,b;0,d} = q_{a,b-1;0,d-1}"),
    # z1 / zbar1, regime (iii)
    _L("iii", Z1, "p", lambda a, b: range(0, 1), lambda a, b, c: ("qt", a - 1, a, 0), 1, "dz1 p_{a,a;0,0} = q~_{a-1,a;0,0}"),
    _L("iii", Z1, "p", lambda a, b: range(1, a + 1), lambda a, b, c: ("p", a - 1, a, c - 1), 1, "dz1 p_{a,a;c,0} = p_{a-1,a;c-1,0}"),
    _L("iii", Z1, "q", lambda a, b: range(0, a), lambda a, b, d: ("q", a - 1, a, d + 1), -1, "dz1 q_{a,a;0,d} = -q_{a-1,a;0,d+1}"),
    _L("iii", Z1, "q", lambda a, b: range(a, a + 1), ZERO, 1, "dz1 q_{a,a;0,a} = 0"),
    _L("iii", ZB1, "p", lambda a, b: range(0, a), lambda a, b, c: ("p", a, a - 1, c + 1), -1, "dzb1 p_{a,a;c,0} = -p_{a,a-1;c+1,0}"),
    _L("iii", ZB1, "p", lambda a, b: range(a, a + 1), ZERO, 1, "dzb1 p_{a,a;a,0} = 0"),
    _L("iii", ZB1, "q", lambda a, b: range(0, 1), lambda a, b, d: ("pt", a, a - 1, 0), 1, "dzb1 q_{a,a;0,0} = p~_{a,a-1;0,0}"),
    _L("iii", ZB1, "q", lambda a, b: range(1, a + 1), lambda a, b, d: ("q", a, a - 1, d - 1), 1, "dzb1 q_{a,a;0,d} = q_{a,a-1;0,d-1}"),
]


def regime(a: int, b: int) -> str:
    return "i" if a < b else ("ii" if a > b else "iii")


def _resolve(target: Target) -> Tuple[Optional[SpinorPolynomial], str]:
    """Target element; None with a reason when the named element is not in the target basis."""
    if target is None:
        return SpinorPolynomial.zero(2), "0"
    kind, a, b, k = target
    if a < 0 or b < 0:
        return SpinorPolynomial.zero(2), "0 (negative degree)"
    if not any(e.kind == kind and e.param == k for e in basis_dim2(a, b, 1)):
        return None, f"{kind}[{k}] not in basis of ({a},{b})"
    return dim2_element(kind, a, b, k), f"{kind}_{{{a},{b}}}[{k}]"


def appell_check(a_max: int, b_max: int, lines: Optional[List[AppellLine]] = None) -> Report:
    """Check every printed Appell line verbatim on a,b <= bounds."""
    start = time.perf_counter()
    rep = Report("appell", {"a_max": a_max, "b_max": b_max})
    lines = APPELL_LINES if lines is None else lines
    for a in range(a_max + 1):
        for b in range(b_max + 1):
            reg = regime(a, b)
            src = {(e.kind, e.param): e.element for e in basis_dim2(a, b, 1)}
            for line in lines:
                if line.regime != reg:
                    continue
                for k in line.params(a, b):
                    f = src.get((line.source, k))
                    name = f"({reg}) {line.text} @ a={a} b={b} k={k}"
                    if f is None:
                        rep.add(name, False, f"source {line.source}[{k}] not in basis")
                        continue
                    g, desc = _resolve(line.target(a, b, k))
                    if g is None:
                        rep.add(name, False, desc)
                        continue
                    lhs = f.derive(*line.var)
                    resid = lhs - g.scale(line.sign)
                    detail = ""
                    if resid and g:
                        c = ratio(lhs, g)
                        detail = f"actual coefficient {c}" if c is not None else "not proportional"
                    rep.add(name, not resid, detail, None if not resid else str(resid))
    rep.elapsed = time.perf_counter() - start
    return rep


def transition_matrix(var: Tuple[str, int], a: int, b: int, r: int = 1) -> Dict[Tuple[str, int], Dict[Tuple[str, int], object]]:
    """Column-wise expansion of the derivative of each basis element in the target basis."""
    kind, j = var
    ta, tb = (a - 1, b) if kind == "z" else (a, b - 1)
    targets = basis_dim2(ta, tb, r) if ta >= 0 and tb >= 0 else ()
    cols = {}
    for e in basis_dim2(a, b, r):
        d = e.element.derive(kind, j)
        col = {}
        if d:
            for t in targets:
                c = ratio(d, t.element)
                if c is not None:
                    col[(t.kind, t.param)] = c
            if not col:
                col[("?", -1)] = None  # not a multiple of a single basis element
        cols[(e.kind, e.param)] = col
    return cols


def transition_check(a_max: int, b_max: int) -> Report:
    """Appell closure: every derivative column has at most one entry; for r=1 that entry is +-1."""
    start = time.perf_counter()
    rep = Report("appell-closure", {"a_max": a_max, "b_max": b_max})
    for r in range(3):
        for a in range(a_max + 1):
            for b in range(b_max + 1):
                for var in (Z1, ZB1, Z2, ZB2):
                    for src, col in transition_matrix(var, a, b, r).items():
                        vals = list(col.values())
                        ok = len(vals) <= 1 and all(v is not None for v in vals)
                        if ok and r == 1 and vals:
                            ok = vals[0] in (1, -1)
                        rep.add(
                            f"r={r} d{var[0]}{var[1]} {src[0]}[{src[1]}] @ a={a} b={b}",
                            ok,
                            ", ".join(f"{k[0]}[{k[1]}]: {v}" for k, v in col.items()) or "0",
                        )
    rep.elapsed = time.perf_counter() - start
    return rep


# Printed lines whose sign disagrees with the exact computation, and the sign
# the computation gives. The sibling lines in the other regimes carry the
# corrected sign, so these read as misprints.
SIGN_CORRECTIONS: Dict[str, int] = {
    "dz1 p_{a,a;0,0} = q~_{a-1,a;0,0}": -1,
    "dz1 q_{a,b;0,d} = q_{a-1,b;0,d+1}": -1,
    "dzb1 p_{a,b;c,0} = p_{a,b-1;c+1,0}": -1,
}


def corrected_lines() -> List[AppellLine]:
    out = []
    for line in APPELL_LINES:
        if line.text in SIGN_CORRECTIONS:
            line = AppellLine(
                line.regime, line.var, line.source, line.params, line.target,
                SIGN_CORRECTIONS[line.text], line.text + " [sign corrected]",
            )
        out.append(line)
    return out
