"""Command line driver: ``cycbrauer {omega,decomp,saturation,singular}``.

Output is JSON (schema 1) or CSV.  Rationals are written as "p/q" strings.
Exit codes: 0 ok, 2 bad input, 3 over budget, 4 verification failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction
from typing import Sequence

from . import combinat as cb
from .brauer import BrauerAlgebra, admissible_omega, expected_dimension
from .linalg import as_fraction, fraction_str
from .repanalysis import decomposition_matrix
from .weights import AssumptionError, RootDatum, compute_u_params, saturation_check

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_VERIFY = 0, 2, 3, 4


class InputError(ValueError):
    pass


class BudgetError(RuntimeError):
    pass


def _rationals(text: str) -> list[Fraction]:
    try:
        return [as_fraction(x) for x in text.split(",") if x.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"cannot parse rationals from {text!r}") from exc


def _ints(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise InputError(f"cannot parse integers from {text!r}") from exc


def _q(x) -> str:
    return fraction_str(as_fraction(x))


def _label(f: int, lam) -> dict:
    return {"f": f, "lambda": [list(part) for part in lam]}


def _datum(args) -> RootDatum:
    if args.type is None or args.n is None or args.p is None or args.i is None:
        raise InputError("the Lie-side style needs --type, --n, --p and --i")
    try:
        return RootDatum(args.type, args.n, _ints(args.p), args.i)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _c(args, datum: RootDatum) -> list[Fraction]:
    if args.c is None:
        raise InputError("--c is required with a Lie-side datum")
    c = _rationals(args.c)
    if len(c) != datum.k:
        raise InputError(f"expected {datum.k} values of c, got {len(c)}")
    return c


def _algebra_params(args) -> tuple[int, list[Fraction], dict]:
    """(a, u, extra) from exactly one parameter style."""
    direct = args.u is not None or args.a is not None
    lie = args.type is not None
    if direct == lie:
        raise InputError("give either --a/--u or --type/--n/--p/--i/--c, not both or neither")
    if direct:
        if args.u is None:
            raise InputError("--u is required with --a")
        u = _rationals(args.u)
        a = args.a if args.a is not None else len(u)
        if len(u) != a:
            raise InputError(f"--a {a} but {len(u)} parameters in --u")
        return a, u, {}
    datum = _datum(args)
    c = _c(args, datum)
    try:
        u = compute_u_params(datum, c)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    return datum.a, u, {"datum": {"type": datum.phi, "n": datum.n, "p": list(datum.p), "i": datum.i},
                        "c": [_q(x) for x in c]}


def _budget(a: int, r: int, budget: int) -> None:
    dim = expected_dimension(a, r)
    if dim > budget:
        raise BudgetError(f"a^r(2r-1)!! = {dim} exceeds the budget {budget}")


# ---------------------------------------------------------------- commands

def cmd_omega(args) -> tuple[dict, int]:
    a, u, extra = _algebra_params(args)
    K = args.K if args.K is not None else a
    if K < 0:
        raise InputError("K must be nonnegative")
    omega = admissible_omega(u, K)
    out = {"schema": 1, "command": "omega", **extra, "u": [_q(x) for x in u],
           "omega": [_q(x) for x in omega]}
    return out, EXIT_OK


def cmd_decomp(args) -> tuple[dict, int]:
    a, u, extra = _algebra_params(args)
    r = _require_r(args)
    _budget(a, r, args.budget)
    B = BrauerAlgebra(a, r, u)
    D = decomposition_matrix(B.weakly_cellular_basis())
    out = {"schema": 1, "command": "decomp", **extra, "a": a, "r": r,
           "u": [_q(x) for x in u], "omega": [_q(x) for x in B.omega[:a]],
           "dimension": B.dimension,
           "rows": [_label(*lab) for lab in D.rows],
           "cols": [_label(*lab) for lab in D.cols],
           "matrix": D.entries,
           "cell_dims": [D.cell_dims[lab] for lab in D.rows],
           "simple_dims": [D.simple_dims[lab] for lab in D.cols],
           "unitriangular": D.is_unitriangular(cb.cell_ge),
           "reconciles": D.reconciles(),
           "warnings": []}
    if not B.classification_supported:
        out["warnings"].append("classification_unsupported: omega_0 = 0")
    ok = out["unitriangular"] and out["reconciles"] and B.is_full_dimension
    return out, EXIT_OK if ok else EXIT_VERIFY


def _require_r(args) -> int:
    if args.r is None or args.r < 1:
        raise InputError("--r must be a positive integer")
    return args.r


def cmd_saturation(args) -> tuple[dict, int]:
    datum = _datum(args)
    c = _c(args, datum)
    r = _require_r(args)
    rep = saturation_check(datum, c, r)
    out = {"schema": 1, "command": "saturation",
           "datum": {"type": datum.phi, "n": datum.n, "p": list(datum.p), "i": datum.i},
           "c": [_q(x) for x in c], "r": r,
           "saturated": rep.passed, "checked": rep.checked,
           "witnesses": [{"layer": j, "mu": [_q(x) for x in mu], "nu": [_q(x) for x in nu]}
                         for j, mu, nu in rep.witnesses],
           "warnings": []}
    if not rep.simple11:
        out["warnings"].append("simplicity assumption fails for roots "
                               + "; ".join(",".join(_q(x) for x in b) for b in rep.violations))
        return out, EXIT_OK
    return out, EXIT_OK if rep.passed else EXIT_VERIFY


def cmd_singular(args) -> tuple[dict, int]:
    from .tensor_o import TensorModule, verify_singular

    datum = _datum(args)
    c = _c(args, datum)
    r = args.r if args.r is not None else 2
    if r < 1:
        raise InputError("--r must be a positive integer")
    if not args.force and (datum.k != 1 or r > 2):
        raise BudgetError("singular vector checks run at k = 1, r <= 2 unless --force is given")
    _budget(datum.a, r, args.budget)
    try:
        M = TensorModule(datum, c, r)
        labels = cb.cell_labels(datum.a, r)
        reports = [verify_singular(M, f, lam) for f, lam in labels]
    except AssumptionError as exc:
        raise InputError(str(exc)) from exc
    rows = []
    for rep in reports:
        rows.append({**_label(rep.f, rep.lam), "weight": [_q(x) for x in rep.weight],
                     "expected": rep.expected, "independent": rep.independent,
                     "annihilated": rep.annihilated, "singular_dimension": rep.singular_dimension,
                     "passed": rep.passed})
    out = {"schema": 1, "command": "singular",
           "datum": {"type": datum.phi, "n": datum.n, "p": list(datum.p), "i": datum.i},
           "c": [_q(x) for x in c], "r": r, "u": [_q(x) for x in M.u],
           "results": rows, "passed": all(rep.passed for rep in reports)}
    return out, EXIT_OK if out["passed"] else EXIT_VERIFY


COMMANDS = {"omega": cmd_omega, "decomp": cmd_decomp,
            "saturation": cmd_saturation, "singular": cmd_singular}


# ---------------------------------------------------------------- output

def to_csv(out: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    cmd = out["command"]
    if cmd == "omega":
        w.writerow(["k", "omega"])
        for k, x in enumerate(out["omega"]):
            w.writerow([k, x])
    elif cmd == "decomp":
        w.writerow(["row"] + [json.dumps(c, separators=(",", ":")) for c in out["cols"]])
        for lab, row in zip(out["rows"], out["matrix"]):
            w.writerow([json.dumps(lab, separators=(",", ":"))] + row)
    elif cmd == "saturation":
        w.writerow(["saturated", "checked", "witnesses"])
        w.writerow([out["saturated"], out["checked"], len(out["witnesses"])])
    else:
        w.writerow(["f", "lambda", "expected", "independent", "annihilated", "singular_dimension", "passed"])
        for row in out["results"]:
            w.writerow([row["f"], json.dumps(row["lambda"]), row["expected"], row["independent"],
                        row["annihilated"], row["singular_dimension"], row["passed"]])
    return buf.getvalue()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cycbrauer", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--a", type=int)
        p.add_argument("--r", type=int)
        p.add_argument("--u", help="comma separated rationals")
        p.add_argument("--type", choices=["B", "C", "D"])
        p.add_argument("--n", type=int)
        p.add_argument("--p", help="comma separated cut points")
        p.add_argument("--i", type=int, choices=[1, 2])
        p.add_argument("--c", help="comma separated rationals")
        p.add_argument("--budget", type=int, default=5000)
        p.add_argument("--out")
        p.add_argument("--format", choices=["json", "csv"], default="json")
        if name == "omega":
            p.add_argument("--K", type=int)
        if name == "singular":
            p.add_argument("--force", action="store_true")
    return parser


def _glue_negative_values(argv: Sequence[str]) -> list[str]:
    """``--c -7/3`` -> ``--c=-7/3``; argparse reads ``-7/3`` as an option."""
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in ("--u", "--c"):
            nxt = next(it, None)
            if nxt is not None and re.match(r"-[\d.]", nxt):
                out.append(f"{tok}={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
            continue
        out.append(tok)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    argv = _glue_negative_values(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        out, code = COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    text = to_csv(out) if args.format == "csv" else json.dumps(out, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
