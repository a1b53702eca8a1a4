"""Command line front end.

Exit codes: 0 success (including checks with only "reported" cases),
2 input error, 3 capacity error, 4 ring form error, 5 theorem-check
failure, 6 not slidable.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time

from . import verify
from .errors import (
    CapacityError,
    ContainmentError,
    DivisibilityError,
    FormError,
    NotSlidable,
    SeltError,
)
from .jdt import count_d, rectify
from .report import RunReport
from .render import render_tableau
from .ring import frak_D, frak_d
from .eyd import frakd_localization
from .shapes import StrictPartition, skew
from .slide_calc import Shading, shading_to_tableau, tableau_to_shading
from .tableaux import EdgeTableau, enumerate_selt, validate

log = logging.getLogger("selt")

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CAPACITY = 3
EXIT_RING = 4
EXIT_THEOREM = 5
EXIT_NOT_SLIDABLE = 6


class InputError(Exception):
    pass


def parse_partition(text: str) -> StrictPartition:
    """Comma-separated descending integers; `-` is the empty partition."""
    if text.strip() == "-":
        return StrictPartition(())
    try:
        parts = tuple(int(p) for p in text.split(","))
        return StrictPartition(parts)
    except ValueError as e:
        raise InputError(f"bad partition {text!r}: {e}") from e


def _load_json_arg(text: str):
    """JSON literal, `@file` to read a file, or `-` for stdin."""
    if text == "-":
        return json.load(sys.stdin)
    if text.startswith("@"):
        with open(text[1:]) as f:
            return json.load(f)
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"bad JSON argument: {e}") from e


def cmd_enumerate(args) -> int:
    outer = parse_partition(args.outer)
    inner = parse_partition(args.inner)
    try:
        shape = skew(outer, inner)
        tableaux = list(enumerate_selt(shape, args.labels))
    except ContainmentError as e:
        raise InputError(str(e)) from e
    if args.format == "ascii":
        for i, t in enumerate(tableaux):
            print(f"# tableau {i + 1}")
            print(render_tableau(t))
    else:
        json.dump({"count": len(tableaux), "tableaux": [t.to_json() for t in tableaux]},
                  sys.stdout, indent=2)
        print()
    log.info("enumerated %d tableaux", len(tableaux))
    return EXIT_OK


def cmd_rectify(args) -> int:
    data = _load_json_arg(args.tableau)
    try:
        t = EdgeTableau.from_json(data)
    except (KeyError, TypeError, ValueError) as e:
        raise InputError(f"bad tableau JSON: {e}") from e
    violations = validate(t)
    if violations:
        for v in violations:
            log.error("axiom (%s) at %s: %s", v.axiom, v.location, v.message)
        raise InputError("input tableau is not valid")
    trace = rectify(t)
    if args.format == "ascii":
        for i, state in enumerate(trace.states):
            print(f"# state {i}")
            print(render_tableau(state))
    else:
        json.dump(trace.to_json(), sys.stdout, indent=2)
        print()
    return EXIT_OK


def cmd_coeff(args) -> int:
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu)
    nu = parse_partition(args.nu) if args.nu is not None else None
    kind = args.kind
    if kind in ("d", "frakd-ring", "frakD") and nu is None:
        raise InputError(f"coeff {kind} requires --nu")
    if kind == "d":
        value = count_d(lam, mu, nu)
        out = {"kind": kind, "lambda": lam.parts, "mu": mu.parts, "nu": nu.parts,
               "value": value}
    elif kind == "frakd-ring":
        value = frak_d(lam, mu, nu)
        out = {"kind": kind, "lambda": lam.parts, "mu": mu.parts, "nu": nu.parts,
               "value": value}
    elif kind == "frakd-eyd":
        value = frakd_localization(lam, mu)
        out = {"kind": kind, "lambda": lam.parts, "mu": mu.parts, "value": value}
    else:  # frakD
        poly = frak_D(lam, mu, nu)
        value = {str(k): v for k, v in sorted(poly.items())}
        out = {"kind": kind, "lambda": lam.parts, "mu": mu.parts, "nu": nu.parts,
               "z_polynomial": value}
    if args.format == "ascii":
        if kind == "frakD":
            terms = " + ".join(f"{c}*z^{e}" for e, c in sorted(poly.items())) or "0"
            print(terms)
        else:
            print(value)
    else:
        json.dump(out, sys.stdout)
        print()
    return EXIT_OK


CHECK_SUITES = {
    "pieri": lambda a: verify.pieri_cases(a.max_n),
    "staircase": lambda a: verify.staircase_cases(a.max_n),
    "vanishing": lambda a: verify.vanishing_cases(a.max_n),
    "equivalence": lambda a: verify.equivalence_cases(a.max_n),
    "lemma-loc": lambda a: verify.lemma_localization_cases(a.max_weight),
    "conjecture": lambda a: verify.conjecture_cases(a.max_weight),
    "decomposition": lambda a: verify.decomposition_roundtrip_cases(a.max_n),
    "bijection": lambda a: verify.bijection_cases(a.max_n),
    "shift-sync": lambda a: verify.same_jdt_cases(a.max_n),
    "absorption": lambda a: verify.absorption_cases(a.max_n),
}


def cmd_check(args) -> int:
    if args.jobs != 1:
        log.info("sweeps run sequentially; --jobs %d is accepted but unused", args.jobs)
    t0 = time.time()
    cases = CHECK_SUITES[args.suite](args)
    report = RunReport(
        command=f"check {args.suite}",
        parameters={"max_n": args.max_n, "max_weight": args.max_weight},
        cases=cases,
        elapsed=time.time() - t0,
    )
    counts = report.counts()
    if args.report_dir:
        for path in report.write(args.report_dir):
            log.info("wrote %s", path)
    if args.format == "ascii":
        for c in cases:
            print(f"{c['status']:8s} {c['case']} expected={c['expected']} actual={c['actual']}")
        print(f"total={len(cases)} pass={counts['pass']} fail={counts['fail']} "
              f"reported={counts['reported']}")
    else:
        json.dump(report.to_json(), sys.stdout, indent=2)
        print()
    if counts["fail"]:
        log.error("%d theorem-backed case(s) failed", counts["fail"])
        return EXIT_THEOREM
    return EXIT_OK


def cmd_bijection(args) -> int:
    if (args.shading is None) == (args.tableau is None):
        raise InputError("provide exactly one of --shading or --tableau")
    if args.shading is not None:
        data = _load_json_arg(args.shading)
        try:
            s = Shading.from_json(data)
        except (KeyError, TypeError, ValueError) as e:
            raise InputError(f"bad shading JSON: {e}") from e
        t = shading_to_tableau(s)
        if args.format == "ascii":
            print(render_tableau(t))
        else:
            json.dump(t.to_json(), sys.stdout, indent=2)
            print()
    else:
        data = _load_json_arg(args.tableau)
        try:
            t = EdgeTableau.from_json(data)
        except (KeyError, TypeError, ValueError) as e:
            raise InputError(f"bad tableau JSON: {e}") from e
        s = tableau_to_shading(t)
        json.dump(s.to_json(), sys.stdout)
        print()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="selt",
        description="Shifted edge labeled tableaux, excited diagrams and the "
                    "Pfaffian ring: enumeration, rectification, coefficients "
                    "and verification sweeps.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "ascii"], default="json")
    common.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common],
                       help="list all valid tableaux of a skew shape")
    p.add_argument("--outer", required=True)
    p.add_argument("--inner", default="-")
    p.add_argument("--labels", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("rectify", parents=[common], help="rectify a tableau, printing the full trace")
    p.add_argument("--tableau", required=True,
                   help="tableau JSON, @file, or - for stdin")
    p.set_defaults(func=cmd_rectify)

    p = sub.add_parser("coeff", parents=[common], help="compute a structure coefficient")
    p.add_argument("kind", choices=["d", "frakd-ring", "frakd-eyd", "frakD"])
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--nu")
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("check", parents=[common], help="run a verification sweep")
    p.add_argument("suite", choices=sorted(CHECK_SUITES))
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--max-weight", type=int, default=6)
    p.add_argument("--jobs", type=int,
                   default=int(os.environ.get("SSL_JOBS", "1")))
    p.add_argument("--report-dir",
                   help="write cases.csv, report.json and summary.png here")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bijection", parents=[common],
                       help="convert between shadings and staircase tableaux")
    p.add_argument("--shading", help="shading JSON, @file, or - for stdin")
    p.add_argument("--tableau", help="tableau JSON, @file, or - for stdin")
    p.set_defaults(func=cmd_bijection)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(levelname)s %(message)s",
    )
    try:
        return args.func(args)
    except InputError as e:
        log.error("%s", e)
        return EXIT_INPUT
    except CapacityError as e:
        log.error("%s", e)
        return EXIT_CAPACITY
    except (FormError, DivisibilityError) as e:
        log.error("%s", e)
        return EXIT_RING
    except NotSlidable as e:
        log.error("%s", e)
        return EXIT_NOT_SLIDABLE
    except SeltError as e:
        log.error("%s", e)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
