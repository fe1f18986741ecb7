"""Command-line entry point.

Exit codes: 0 success, 1 a mathematical negative (invalid window, NONISO,
FAIL), 2 malformed input or usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebra import AlgebraError, make_algebra, skew_preset
from .cayley import OracleGuardError, cross_check_b, verify_cayley
from .dot import window_to_dot
from .linalg import as_rat
from .parser import ParseError, parse_expression
from .window import (
    WindowError,
    canonical_degrees,
    iso_test_mod_c0,
    make_example,
    mod_c0_reduce,
    nonforced_roots,
    validate_window,
)
from .windowio import WindowFormatError, dumps_window, load_window, witness_to_dict

EXIT_OK, EXIT_NEGATIVE, EXIT_MALFORMED = 0, 1, 2


class _UsageError(Exception):
    pass


def _add_spec_options(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--skew", type=int, metavar="M", help="skew-symmetric preset: d = M, lambda_j = 2j")
    g.add_argument("--d", type=int, metavar="D", help="degree of f for a custom algebra (needs --lambdas)")
    p.add_argument("--lambdas", nargs="+", metavar="L", help="lambda_0 .. lambda_{d-1} as num/den")


def _spec_from_args(args):
    try:
        if args.skew is not None:
            if args.lambdas:
                raise _UsageError("--lambdas cannot be combined with --skew")
            return skew_preset(args.skew)
        if not args.lambdas:
            raise _UsageError("--d needs --lambdas")
        return make_algebra(args.d, [as_rat(x) for x in args.lambdas])
    except (AlgebraError, ValueError, ZeroDivisionError) as exc:
        raise _UsageError(str(exc)) from exc


def _load(path):
    try:
        return load_window(path)
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _write(text: str, out) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _require_valid(w, path) -> bool:
    report = validate_window(w)
    if not report.ok:
        print(f"{path}: invalid window", file=sys.stderr)
        print(str(report), file=sys.stderr)
    return report.ok


# --------------------------------------------------------------------------
# subcommands


def cmd_algebra(args) -> int:
    spec = _spec_from_args(args)
    print(f"d: {spec.d}")
    print("lambdas: " + " ".join(str(x) for x in spec.lambdas))
    print(f"fD: {spec.b0.format()}")
    print(f"Df: {spec.b1.format()}")
    print("degrees: " + " ".join(str(p) for p in canonical_degrees(spec)))
    print("nonforced: " + " ".join(str(p) for p in nonforced_roots(spec)))
    return EXIT_OK


def cmd_normalize(args) -> int:
    spec = _spec_from_args(args)
    try:
        element = parse_expression(spec, args.expr)
    except ParseError as exc:
        raise _UsageError(f"{exc.code} error: {exc}") from exc
    print(element)
    return EXIT_OK


def cmd_verify_cayley(args) -> int:
    try:
        if args.table is not None:
            spec = skew_preset(args.m)
            if args.lambdas:
                spec = make_algebra(args.m, [as_rat(x) for x in args.lambdas])
            report = cross_check_b(spec, args.m, args.table)
            print(report.format())
            return EXIT_OK if report.passed else EXIT_NEGATIVE
        if args.k is None:
            raise _UsageError("verify-cayley needs -k K or --table KMAX")
        verdict = verify_cayley(args.m, args.k)
    except (OracleGuardError, AlgebraError, ValueError) as exc:
        raise _UsageError(str(exc)) from exc
    print(verdict)
    return EXIT_OK if verdict.holds else EXIT_NEGATIVE


def cmd_window_validate(args) -> int:
    w = _load(args.file)
    report = validate_window(w)
    print(str(report))
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def cmd_window_reduce(args) -> int:
    w = _load(args.file)
    if not _require_valid(w, args.file):
        return EXIT_NEGATIVE
    _write(dumps_window(mod_c0_reduce(w)), args.output)
    return EXIT_OK


def cmd_window_iso(args) -> int:
    w1, w2 = _load(args.file1), _load(args.file2)
    if not (_require_valid(w1, args.file1) and _require_valid(w2, args.file2)):
        return EXIT_NEGATIVE
    try:
        verdict = iso_test_mod_c0(w1, w2)
    except WindowError as exc:
        raise _UsageError(str(exc)) from exc
    if not verdict.isomorphic:
        print(f"NONISO: {verdict.reason}")
        return EXIT_NEGATIVE
    print(f"ISO: {verdict.reason}")
    if args.witness:
        doc = witness_to_dict(verdict.degrees, verdict.witness)
        Path(args.witness).write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")
    return EXIT_OK


def cmd_window_example(args) -> int:
    spec = _spec_from_args(args)
    try:
        w = make_example(spec, args.kind)
    except WindowError as exc:
        raise _UsageError(str(exc)) from exc
    _write(dumps_window(w), args.output)
    return EXIT_OK


def cmd_dot(args) -> int:
    _write(window_to_dot(_load(args.file)), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="capelli-quiver", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("algebra", help="print b-polynomials, canonical degrees and non-forced edges")
    _add_spec_options(p)
    p.set_defaults(func=cmd_algebra)

    p = sub.add_parser("normalize", help="normal form of an operator expression")
    _add_spec_options(p)
    p.add_argument("-e", "--expr", required=True, help="expression in f, D, t, e.g. 'D*f - f*D'")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("verify-cayley", help="brute-force pfaffian check of the Df relation")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-k", type=int)
    p.add_argument("--table", type=int, metavar="KMAX", help="cross-check k = 1..KMAX against an algebra")
    p.add_argument("--lambdas", nargs="+", metavar="L", help="lambdas to cross-check (default: skew preset)")
    p.set_defaults(func=cmd_verify_cayley)

    p = sub.add_parser("window-validate", help="check a window file against all relations")
    p.add_argument("file")
    p.set_defaults(func=cmd_window_validate)

    p = sub.add_parser("window-reduce", help="quotient a window by its f-torsion")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_window_reduce)

    p = sub.add_parser("window-iso", help="isomorphism test after removing f-torsion")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("-w", "--witness", help="write the intertwiner to this JSON file")
    p.set_defaults(func=cmd_window_iso)

    p = sub.add_parser("window-example", help="write a standard example window")
    _add_spec_options(p)
    p.add_argument("--kind", required=True, choices=("structure", "delta", "localized"))
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_window_example)

    p = sub.add_parser("dot", help="Graphviz rendering of a window file")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_dot)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (_UsageError, WindowFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
