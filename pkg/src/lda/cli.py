"""Command line driver.

Subcommands mirror the library workflows: basis computation, master-term
enumeration, reduction of a target to masters, difference-scheme generation,
and oracle cross-checks.  Results go to stdout, diagnostics to stderr; exit
status 0 on success, 1 for usage and input errors, 2 for mathematical
failures such as an inconsistent system.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import render
from .difference import DiffPoly
from .errors import LdaError, ParseError, ValidationError
from .janet import (check_janet_basis, groebner_normal_form, janet_basis,
                    reduced_groebner_basis)
from .oracle import default_bound, oracle_normal_form
from .parsing import parse_target
from .reduction import reduce_to_masters, residue_class_basis
from .schemes import discretize, elimination_ranking, generate_scheme
from .systems import load_scheme, load_system

_MATH_ERRORS = ("InconsistentSystem", "InfiniteResidueBasis", "DivisionByZero",
                "CompletionLimitExceeded", "ParityError", "NoLeadingTerm")


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="lda", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("basis", help="compute the involutive basis of a system")
    p.add_argument("file")
    p.add_argument("--reduced", action="store_true",
                   help="print the reduced Groebner basis instead")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("masters", help="enumerate the master terms")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("reduce", help="reduce a target term to master terms")
    p.add_argument("file")
    p.add_argument("--target", required=True)
    p.add_argument("--factor", action="store_true",
                   help="factor the output coefficients")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("scheme", help="generate a difference scheme")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="run oracle cross-checks on a system")
    p.add_argument("file")
    p.add_argument("--degree", type=int, default=None,
                   help="degree bound for the prolongation matrix")
    return parser


def _cmd_basis(args) -> int:
    spec = load_system(args.file)
    basis = janet_basis(spec.equations, spec.ranking)
    polys = reduced_groebner_basis(basis) if args.reduced else basis.polynomials()
    if args.json:
        payload = {"elements": [render.diffpoly_json(p, spec.ranking, spec.functions)
                                for p in polys]}
        print(json.dumps(payload, indent=2))
    else:
        for p in polys:
            print(render.diffpoly_str(p, spec.ranking, spec.functions), "= 0")
    return 0


def _cmd_masters(args) -> int:
    spec = load_system(args.file)
    basis = janet_basis(spec.equations, spec.ranking)
    masters = residue_class_basis(basis, spec.patterns,
                                  nfuncs=len(spec.functions))
    if args.json:
        print(json.dumps({"masters": [render.term_json(t, spec.functions)
                                      for t in masters]}, indent=2))
    else:
        print(render.masters_str(masters, spec.table.variables, spec.functions))
    return 0


def _cmd_reduce(args) -> int:
    spec = load_system(args.file)
    target = parse_target(args.target, spec.table, spec.functions)
    basis = janet_basis(spec.equations, spec.ranking)
    report = reduce_to_masters(target, basis, spec.patterns,
                               factor=args.factor)
    if args.json:
        print(json.dumps(render.report_json(report, spec.ranking,
                                            spec.table.variables,
                                            spec.functions), indent=2))
    else:
        print(render.report_str(report, spec.table.variables, spec.functions))
    return 0


def _cmd_scheme(args) -> int:
    spec = load_scheme(args.file)
    system = discretize(spec.pde, spec.grid, spec.contour, spec.plan,
                        names=spec.derivative_names, unknown=spec.unknown)
    ranking = elimination_ranking(system, spec.unknown)
    keep = system.function_index(spec.unknown)
    scheme = generate_scheme(system.equations, keep, ranking)
    if args.json:
        payload = {
            "system": [render.diffpoly_json(p, ranking, system.function_names)
                       for p in system.equations],
            "scheme": [render.diffpoly_json(p, ranking, system.function_names)
                       for p in scheme],
        }
        print(json.dumps(payload, indent=2))
    else:
        if not scheme:
            print("no equation in the kept unknown alone", file=sys.stderr)
            return 2
        for p in scheme:
            print(render.diffpoly_str(p, ranking, system.function_names), "= 0")
    return 0


def _cmd_verify(args) -> int:
    spec = load_system(args.file)
    basis = janet_basis(spec.equations, spec.ranking)
    bound = args.degree if args.degree is not None \
        else default_bound(spec.equations)
    failures = []

    if check_janet_basis(basis):
        print("ok: every nonmultiplicative prolongation reduces to zero")
    else:
        failures.append("completeness check failed")
    for i, eq in enumerate(spec.equations):
        if eq.is_zero():
            continue
        if groebner_normal_form(eq, basis).is_zero():
            print(f"ok: input equation {i} reduces to zero modulo the basis")
        else:
            failures.append(f"input equation {i} does not reduce to zero")
    for i, eq in enumerate(spec.equations):
        if eq.is_zero():
            continue
        if oracle_normal_form(eq, basis.polynomials(), spec.ranking,
                              bound=bound).is_zero():
            print(f"ok: oracle confirms input equation {i} at degree {bound}")
        else:
            failures.append(
                f"oracle rejects input equation {i} at degree {bound}")
    nvars = spec.table.nvars
    for e in basis:
        for pos in e.nonmult:
            beta = tuple(1 if i == pos else 0 for i in range(nvars))
            prolonged = e.poly.apply_shift(beta)
            engine = groebner_normal_form(prolonged, basis)
            oracle = oracle_normal_form(prolonged, spec.equations, spec.ranking,
                                        bound=bound)
            if engine == oracle:
                print("ok: oracle agrees on a prolongation of "
                      f"{render.term_str(e.lt, spec.table.variables, spec.functions)}")
            else:
                failures.append(
                    "oracle disagrees on a prolongation of "
                    + render.term_str(e.lt, spec.table.variables, spec.functions))
    if failures:
        for f in failures:
            print(f"FAIL: {f}", file=sys.stderr)
        return 2
    print(f"verified: {len(basis)} basis elements, degree bound {bound}")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    handlers = {
        "basis": _cmd_basis,
        "masters": _cmd_masters,
        "reduce": _cmd_reduce,
        "scheme": _cmd_scheme,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except (ParseError, ValidationError, FileNotFoundError, ValueError) as exc:
        print(f"lda: error: {exc}", file=sys.stderr)
        return 1
    except LdaError as exc:
        print(f"lda: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
