"""Canonical JSON serialization and LaTeX emission."""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Union

from .calculus import SpinorPolynomial
from .exact import GaussianRational, ScalarPolynomial
from .factors import OperatorPolynomial


def _q(x: Fraction) -> str:
    return str(x)  # Fraction prints as "p/q" or "p", never a decimal


def to_dict(f: SpinorPolynomial) -> dict:
    n = f.n
    terms = [
        {"z": list(k[:n]), "zbar": list(k[n:]), "fock": list(A), "re": _q(c.re), "im": _q(c.im)}
        for A, k, c in f.terms()
    ]
    terms.sort(key=lambda t: (t["fock"], t["z"], t["zbar"]))
    return {"n": n, "terms": terms}


def serialize(f: SpinorPolynomial) -> str:
    """Compact canonical JSON; equal polynomials give byte-identical text."""
    return json.dumps(to_dict(f), separators=(",", ":"))


def from_dict(d: dict) -> SpinorPolynomial:
    n = int(d["n"])
    out = SpinorPolynomial.zero(n)
    for t in d["terms"]:
        if len(t["z"]) != n or len(t["zbar"]) != n:
            raise ValueError(f"term {t} does not match n={n}")
        c = GaussianRational(Fraction(t["re"]), Fraction(t.get("im", "0")))
        out = out + SpinorPolynomial.state(n, t["fock"], ScalarPolynomial.monomial(t["z"], t["zbar"], c))
    return out


def deserialize(text: str) -> SpinorPolynomial:
    return from_dict(json.loads(text))


# -- LaTeX --------------------------------------------------------------------


def _latex_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    sign = "-" if x < 0 else ""
    return f"{sign}\\frac{{{abs(x.numerator)}}}{{{x.denominator}}}"


def latex_scalar(c: GaussianRational) -> str:
    if not c.im:
        return _latex_rational(c.re)
    if not c.re:
        return "i" if c.im == 1 else ("-i" if c.im == -1 else f"{_latex_rational(c.im)}i")
    im = _latex_rational(abs(c.im))
    return f"\\left({_latex_rational(c.re)} {'+' if c.im > 0 else '-'} {im}i\\right)"


def _latex_monomial(n: int, key) -> str:
    out = []
    for j in range(n):
        e = key[j]
        if e:
            out.append(f"z_{{{j + 1}}}" + (f"^{{{e}}}" if e > 1 else ""))
    for j in range(n):
        e = key[n + j]
        if e:
            out.append(f"\\bar{{z}}_{{{j + 1}}}" + (f"^{{{e}}}" if e > 1 else ""))
    return " ".join(out)


def latex_poly(p: ScalarPolynomial) -> str:
    if not p:
        return "0"
    parts = []
    for k in sorted(p.terms, reverse=True):
        c = p.terms[k]
        mono = _latex_monomial(p.n, k)
        if not mono:
            parts.append(latex_scalar(c))
        elif c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"{latex_scalar(c)}\\, {mono}")
    return " + ".join(parts).replace("+ -", "- ")


def _wrap_coeff(p: ScalarPolynomial) -> str:
    s = latex_poly(p)
    return s if len(p.terms) == 1 else f"\\left({s}\\right)"


def _term(coeff: str, body: str) -> str:
    if coeff == "1":
        return body
    if coeff == "-1":
        return "-" + body
    return f"{coeff}\\, {body}"


def _latex_state(A) -> str:
    return " ".join(f"f^{{\\dagger}}_{{{j}}}" for j in A) + (" I" if A else "I")


def _latex_word(w) -> str:
    return " ".join(("f^{\\dagger}" if kind == "fd" else "f") + f"_{{{j}}}" for kind, j in w)


def emit_latex(x: Union[SpinorPolynomial, OperatorPolynomial, ScalarPolynomial]) -> str:
    """Deterministic math-mode LaTeX for a spinor polynomial, operator or scalar polynomial."""
    if isinstance(x, ScalarPolynomial):
        return latex_poly(x)
    if isinstance(x, SpinorPolynomial):
        if not x:
            return "0"
        parts = []
        for A in sorted(x.comps, key=lambda A: (len(A), A)):
            p = x.comps[A]
            coeff = _wrap_coeff(p)
            parts.append(_term(coeff, _latex_state(A)))
        return " + ".join(parts).replace("+ -", "- ")
    if isinstance(x, OperatorPolynomial):
        if not x:
            return "0"
        c = x.proportionality(OperatorPolynomial.identity(x.n))
        if c is not None:
            return "\\mathrm{id}" if c == 1 else f"{latex_scalar(c)}\\,\\mathrm{{id}}"
        x = x.normal_ordered()
        parts = []
        for w in sorted(x.terms, key=lambda w: (len(w), w)):
            p = x.terms[w]
            coeff = _wrap_coeff(p)
            word = _latex_word(w) if w else "\\mathrm{id}"
            parts.append(_term(coeff, word))
        return " + ".join(parts).replace("+ -", "- ")
    raise TypeError(f"cannot emit LaTeX for {type(x).__name__}")
