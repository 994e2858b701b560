"""Command line driver.

Subcommands: validate, betti, pair, massey, orient, verify.  The FILE
argument is a model file path or the builtin name `heisenberg`.  Exit codes:
0 success, 1 domain error (NotExact, CupObstruction, DegenerateBasis,
NotACocycle, ...), 2 parse or validation error, 3 verification
counterexample found.  All rationals are printed in lowest terms with `/`;
no floating point appears anywhere.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .cohomology import CohomologyRing
from .dga import format_element
from .errors import DegenerateBasis, DomainError, InputError
from .orientation import (
    massey_triple,
    pairing,
    positive_generator,
    run_all_suites,
)
from .parsing import load_model, parse_element

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_INPUT = 2
EXIT_COUNTEREXAMPLE = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="extcohom",
        description=(
            "Exact cohomology of exterior differential graded algebras, with the "
            "canonical-orientation pairing on 3-generator models."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("model", help="model file path, or the builtin name 'heisenberg'")
        return p

    add("validate", "parse a model file and check the differential")
    add("betti", "print the Betti numbers b_0 .. b_n")

    p = add("pair", "orientation pairing of two degree-1 classes")
    p.add_argument("--x", required=True, metavar="EXPR", help="first degree-1 cocycle expression")
    p.add_argument("--y", required=True, metavar="EXPR", help="second degree-1 cocycle expression")

    p = add("massey", "Massey triple product of three degree-1 classes")
    p.add_argument("--a", required=True, metavar="EXPR")
    p.add_argument("--b", required=True, metavar="EXPR")
    p.add_argument("--c", required=True, metavar="EXPR")

    p = add("orient", "positive generator determined by an independent pair")
    p.add_argument("--x", required=True, metavar="EXPR")
    p.add_argument("--y", required=True, metavar="EXPR")

    p = add("verify", "run the seeded exact verification suites")
    p.add_argument("--trials", type=int, default=1000, help="trials per suite (default 1000)")
    p.add_argument("--seed", type=int, default=42, help="PRNG seed (default 42)")

    return parser


def _cmd_validate(args) -> int:
    dga = load_model(args.model)
    names = ", ".join(dga.names) if dga.ngens else "none"
    print(f"ok: {dga.ngens} generators ({names}), d^2 = 0")
    return EXIT_OK


def _cmd_betti(args) -> int:
    ring = CohomologyRing(load_model(args.model))
    print(" ".join(str(b) for b in ring.betti_numbers()))
    return EXIT_OK


def _cmd_pair(args) -> int:
    ring = CohomologyRing(load_model(args.model))
    x0 = ring.class_of(parse_element(ring.dga, args.x))
    y0 = ring.class_of(parse_element(ring.dga, args.y))
    result = pairing(ring, x0, y0)
    print(f"r = {result.r}")
    print(f"class = [{format_element(ring.dga, result.h3_class.representative)}]")
    print(f"primitive = {format_element(ring.dga, result.primitive_used)}")
    return EXIT_OK


def _cmd_massey(args) -> int:
    ring = CohomologyRing(load_model(args.model))
    a = ring.class_of(parse_element(ring.dga, args.a))
    b = ring.class_of(parse_element(ring.dga, args.b))
    c = ring.class_of(parse_element(ring.dga, args.c))
    triple = massey_triple(ring, a, b, c)
    rep = format_element(ring.dga, triple.representative.representative)
    print(f"representative = [{rep}]")
    print(f"indeterminacy dimension = {triple.indeterminacy.dim}")
    return EXIT_OK


def _cmd_orient(args) -> int:
    ring = CohomologyRing(load_model(args.model))
    x0 = ring.class_of(parse_element(ring.dga, args.x))
    y0 = ring.class_of(parse_element(ring.dga, args.y))
    generator = positive_generator(ring, x0, y0)
    result = pairing(ring, x0, y0)
    print(f"positive generator = [{format_element(ring.dga, generator.representative)}]")
    print(f"r = {result.r}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    ring = CohomologyRing(load_model(args.model))
    reports = run_all_suites(ring, args.trials, args.seed)
    failed = False
    for report in reports:
        print(f"{report.name}: {report.passes}/{report.trials} passed")
        for failure in report.failures:
            failed = True
            print(f"  counterexample: {failure}")
        if report.passes < report.trials and not report.failures:
            failed = True
    if failed:
        print(f"seed {args.seed}: counterexamples found")
        return EXIT_COUNTEREXAMPLE
    print(f"seed {args.seed}: all suites passed")
    return EXIT_OK


_COMMANDS = {
    "validate": _cmd_validate,
    "betti": _cmd_betti,
    "pair": _cmd_pair,
    "massey": _cmd_massey,
    "orient": _cmd_orient,
    "verify": _cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    command = args.command
    try:
        return _COMMANDS[command](args)
    except InputError as exc:
        print(f"{command}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"{command}: cannot read model: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except DomainError as exc:
        print(f"{command}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
