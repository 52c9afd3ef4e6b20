"""Command-line front end: basis, branch, verify, dims."""
from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .bases import basis_dim2, branch_children, build_basis, dimension, fischer_basis
from .calculus import SpaceLabel
from .oracle import dirac_kernel_dim
from .serialize import emit_latex, serialize
from .verify import SUITE_NAMES, run_suite


class UsageError(Exception):
    pass


def _label(args) -> SpaceLabel:
    try:
        return SpaceLabel(args.n, args.a, args.b, args.r)
    except ValueError as e:
        raise UsageError(str(e)) from None


def cmd_basis(args) -> tuple:
    label = _label(args)
    if args.closed_form:
        if args.n != 2:
            raise UsageError("--closed-form is only available for n=2")
        elems = [e.element for e in basis_dim2(args.a, args.b, args.r)]
    else:
        elems = [node.element for node in build_basis(args.n, args.a, args.b, args.r)]
    emit = serialize if args.format == "json" else emit_latex
    lines = [emit(f) for f in elems]
    if args.format == "latex" and not lines:
        lines = [f"% {label} is the zero space"]
    return 0, "\n".join(lines)


def cmd_branch(args) -> tuple:
    label = _label(args)
    if args.n < 2:
        raise UsageError("branch needs n >= 2")
    lines = [f"{label}: {dimension(args.n, args.a, args.b, args.r)} basis elements"]
    for bc, X in branch_children(args.n, args.a, args.b, args.r):
        child = SpaceLabel(args.n - 1, bc.c, bc.d, bc.s)
        k = dimension(child.n, child.a, child.b, child.r)
        lines.append(f"  {bc.describe()}  <- {child} (dim {k})")
        lines.append(f"      X = {emit_latex(X)}")
    return 0, "\n".join(lines)


def cmd_verify(args) -> tuple:
    try:
        rep = run_suite(args.suite, args.a_max, args.b_max, args.n, corrected=args.corrected_signs)
    except (KeyError, ValueError) as e:
        raise UsageError(str(e)) from None
    text = json.dumps(rep.to_dict(), indent=2, default=str) if args.json else rep.render(args.verbose)
    return (0 if rep.ok else 1), text


def cmd_dims(args) -> tuple:
    n, k = args.n, args.k
    if n < 1 or k < 0:
        raise UsageError("need n >= 1 and k >= 0")
    rows = [f"degree-{k} monogenics in dimension {n}"]
    total = 0
    for a in range(k, -1, -1):
        for r in range(n + 1):
            d = dimension(n, a, k - a, r)
            if d:
                rows.append(f"  M^{r}_{{{a},{k - a}}}({n}): {d}")
                total += d
    for a in range(k - 1, -1, -1):
        for r in range(1, n):
            d = dimension(n, a, k - 1 - a, r)
            if d:
                rows.append(f"  Fischer image of M^{r}_{{{a},{k - 1 - a}}}({n}): {d}")
                total += d
    oracle = dirac_kernel_dim(n, k)
    built = len(fischer_basis(n, k))
    rows.append(f"  total {total} (basis {built}), Dirac kernel oracle {oracle}")
    return (0 if total == built == oracle else 1), "\n".join(rows)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hermbranch", description="Exact branching of Hermitian monogenic polynomials.")
    p.add_argument("--out", metavar="FILE", help="write output to FILE instead of standard output")
    # --out is accepted after the subcommand too
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", metavar="FILE", default=argparse.SUPPRESS, help=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True)

    def label_args(sp):
        for name in ("n", "a", "b", "r"):
            sp.add_argument(f"--{name}", type=int, required=True)

    sp = sub.add_parser("basis", parents=[common], help="basis of M^r_{a,b}(n)")
    label_args(sp)
    sp.add_argument("--closed-form", action="store_true", help="closed-form n=2 basis instead of the recursion")
    sp.add_argument("--format", choices=("json", "latex"), default="json")
    sp.set_defaults(func=cmd_basis)

    sp = sub.add_parser("branch", parents=[common], help="children and embedding factors of M^r_{a,b}(n)")
    label_args(sp)
    sp.set_defaults(func=cmd_branch)

    sp = sub.add_parser("verify", parents=[common], help="run a verification suite")
    sp.add_argument("--suite", choices=SUITE_NAMES, required=True)
    sp.add_argument("--a-max", type=int)
    sp.add_argument("--b-max", type=int)
    sp.add_argument("--n", type=int)
    sp.add_argument("--corrected-signs", action="store_true", help="appell: use the sign-corrected table")
    sp.add_argument("--json", action="store_true", help="machine-readable report")
    sp.add_argument("-v", "--verbose", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("dims", parents=[common], help="dimension table of degree-k monogenics")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.set_defaults(func=cmd_dims)
    return p


def run_command(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:  # argparse already printed usage
        return int(e.code or 0)
    try:
        status, text = args.func(args)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"hermbranch: error: {e}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return status


def main() -> None:
    sys.exit(run_command())
