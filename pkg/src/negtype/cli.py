"""Command-line front end.

Every command prints a JSON report on stdout and obeys a fixed exit-code
contract: 0 when the queried property holds (or the command simply
succeeded), 1 when the property fails, 2 on usage or input errors.
Diagnostics go to stderr only.  ``--json`` (or NEGTYPE_VERBOSE=1) adds the
audit fields (bisection trace, input echo) to the report.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from .affine import affine_independence
from .engine import DEFAULT_CAP, generalized_roundness, negative_type_check
from .errors import NegTypeError, ParameterError
from .generators import GeneratorSpec, build
from .serialization import (
    dumps_canonical,
    format_rational,
    load_distance_matrix_csv,
    load_function_set,
    load_simplex,
    save_distance_matrix_csv,
    save_function_set,
    simplex_to_dict,
)
from .simplexes import alpha_beta_gap_identity, simplex_gap, two_valued_gap_identity
from .spaces import DistanceMatrix, FunctionSet, powered_distance_matrix, translate_to_zero_beta

EXIT_HOLDS = 0
EXIT_FAILS = 1
EXIT_USAGE = 2

_GEN_FAMILIES = {
    "cube": "hamming_cube",
    "cube-subset": "cube_subset",
    "walsh": "walsh",
    "remark-z": "remark_Z",
    "midpoint": "midpoint_line",
    "uniform": "uniform_space",
}


def _verbose(args) -> bool:
    if getattr(args, "json", False):
        return True
    return os.environ.get("NEGTYPE_VERBOSE", "").strip().lower() in {"1", "true", "yes"}


def _emit(report: dict) -> None:
    print(json.dumps(report, indent=2, sort_keys=True))


def _scalar(value) -> str | float:
    return format_rational(value) if isinstance(value, Fraction) else float(value)


def _load_check_input(path: str, p) -> DistanceMatrix:
    if path.endswith(".csv"):
        matrix = load_distance_matrix_csv(path)
        if p is not None and float(p) != matrix.p:
            if matrix.p_independent:
                return dataclasses.replace(matrix, p=float(p))
            raise ParameterError(
                f"matrix file carries exponent {matrix.p} and cannot be "
                f"re-powered to {float(p)}")
        return matrix
    if p is None:
        raise ParameterError("--p is required for point-set input")
    return powered_distance_matrix(load_function_set(path), p)


def _cmd_check(args) -> int:
    matrix = _load_check_input(args.input, args.p)
    verdict = negative_type_check(matrix, strictness_requested=args.strict)
    report = {
        "command": "check",
        "p": matrix.p,
        "strict_requested": args.strict,
        "verdict": verdict.to_dict(),
    }
    if _verbose(args):
        report["input"] = args.input
    _emit(report)
    outcome = verdict.strict if args.strict else verdict.holds
    return EXIT_HOLDS if outcome else EXIT_FAILS


def _cmd_roundness(args) -> int:
    if args.input.endswith(".csv"):
        source: FunctionSet | DistanceMatrix = load_distance_matrix_csv(args.input)
    else:
        source = load_function_set(args.input)
    result = generalized_roundness(source, tolerance=args.tol, cap=args.cap,
                                   metric_p=args.metric_p)
    body = result.to_dict()
    if not _verbose(args):
        body.pop("trace")
    report = {
        "command": "roundness",
        "metric_p": float(args.metric_p),
        "tolerance": args.tol,
        "roundness": body,
    }
    if _verbose(args):
        report["input"] = args.input
    _emit(report)
    return EXIT_HOLDS


def _cmd_gap(args) -> int:
    simplex = load_simplex(args.simplex)
    family = simplex.point_set
    report: dict = {"command": "gap", "p": float(args.p)}
    exit_code = EXIT_HOLDS
    if args.exact:
        working = translate_to_zero_beta(family) if family.value_class.is_alpha_beta \
            else family
        if working is not family:
            # Translation preserves every powered distance, so the simplex
            # transfers index for index.
            simplex = dataclasses.replace(simplex, point_set=working)
        if working.value_class.is_two_valued:
            identity = two_valued_gap_identity(simplex, args.p)
        else:
            identity = alpha_beta_gap_identity(simplex, args.p)
        report["gap"] = _scalar(identity.gap)
        report["rhs"] = _scalar(identity.rhs)
        report["equal"] = identity.equal
        report["exact_comparison"] = identity.exact
        exit_code = EXIT_HOLDS if identity.equal else EXIT_FAILS
    else:
        gap = simplex_gap(simplex, args.p,
                          powered_distance_matrix(family, args.p))
        report["gap"] = _scalar(gap)
    if _verbose(args):
        report["input"] = args.simplex
    _emit(report)
    return exit_code


def _cmd_affine(args) -> int:
    family = load_function_set(args.input)
    certificate = affine_independence(family)
    report: dict = {
        "command": "affine",
        "verdict": certificate.verdict,
    }
    if certificate.dependency is not None:
        report["dependency"] = {
            label: format_rational(c)
            for label, c in zip(family.labels, certificate.dependency)
        }
    if certificate.witness_simplex is not None:
        report["witness_simplex"] = simplex_to_dict(certificate.witness_simplex)
    if _verbose(args):
        report["input"] = args.input
    _emit(report)
    return EXIT_HOLDS if certificate.independent else EXIT_FAILS


def _cmd_gen(args) -> int:
    family_name = _GEN_FAMILIES[args.family]
    parameters: dict = {}
    if family_name == "hamming_cube":
        parameters["n"] = _require(args, "n")
    elif family_name == "cube_subset":
        parameters["n"] = _require(args, "n")
        parameters["size"] = _require(args, "size")
    elif family_name == "walsh":
        parameters["m"] = _require(args, "m")
    elif family_name == "uniform_space":
        parameters["k"] = _require(args, "k")
    result = build(GeneratorSpec(family_name, parameters, seed=args.seed))
    out = Path(args.out)
    if isinstance(result, DistanceMatrix):
        save_distance_matrix_csv(result, out)
    else:
        save_function_set(result, out)
    report = {
        "command": "gen",
        "family": args.family,
        "out": str(out),
        "points": result.order if isinstance(result, DistanceMatrix) else len(result),
    }
    _emit(report)
    return EXIT_HOLDS


def _require(args, name: str) -> int:
    value = getattr(args, name, None)
    if value is None:
        raise ParameterError(f"family {args.family!r} needs --{name}")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="negtype",
        description="Negative type, simplex gaps, and generalized roundness "
                    "for finite subsets of weighted atomic Lp spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="certify (strict) p-negative type")
    check.add_argument("--input", required=True,
                       help="point-set JSON, or powered-matrix CSV with sidecar")
    check.add_argument("--p", type=float, default=None, help="exponent to test at")
    check.add_argument("--strict", action="store_true",
                       help="require strict negative type")
    check.add_argument("--json", action="store_true", help="verbose report")
    check.set_defaults(handler=_cmd_check)

    roundness = sub.add_parser("roundness",
                               help="bracket the generalized roundness by bisection")
    roundness.add_argument("--input", required=True,
                           help="point-set JSON (or p-independent matrix CSV)")
    roundness.add_argument("--metric-p", dest="metric_p", type=float, default=1.0,
                           help="construction exponent of the fixed metric "
                                "(default 1)")
    roundness.add_argument("--tol", type=float, default=1e-6,
                           help="bracket width (default 1e-6)")
    roundness.add_argument("--cap", type=float, default=DEFAULT_CAP,
                           help=f"largest probed exponent (default {DEFAULT_CAP:g})")
    roundness.add_argument("--json", action="store_true", help="include the trace")
    roundness.set_defaults(handler=_cmd_roundness)

    gap = sub.add_parser("gap", help="evaluate a simplex gap")
    gap.add_argument("--simplex", required=True, help="simplex JSON file")
    gap.add_argument("--p", type=float, required=True)
    gap.add_argument("--exact", action="store_true",
                     help="also evaluate the exact identity (two-valued / "
                          "alpha-beta families); exit 0 iff both sides match")
    gap.add_argument("--json", action="store_true", help="verbose report")
    gap.set_defaults(handler=_cmd_gap)

    affine = sub.add_parser("affine", help="affine-independence certificate")
    affine.add_argument("--input", required=True, help="point-set JSON")
    affine.add_argument("--json", action="store_true", help="verbose report")
    affine.set_defaults(handler=_cmd_affine)

    gen = sub.add_parser("gen", help="emit a generated example family")
    gen.add_argument("family", choices=sorted(_GEN_FAMILIES))
    gen.add_argument("--n", type=int, default=None, help="cube dimension")
    gen.add_argument("--m", type=int, default=None, help="walsh level")
    gen.add_argument("--k", type=int, default=None, help="uniform-space size")
    gen.add_argument("--size", type=int, default=None, help="subset size")
    gen.add_argument("--seed", type=int, default=None, help="seed for subsets")
    gen.add_argument("--out", required=True, help="output path")
    gen.set_defaults(handler=_cmd_gen)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_HOLDS if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.handler(args)
    except NegTypeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
