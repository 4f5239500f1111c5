"""Command-line front end.

    indexlab invariants <poly> [--format json|tsv] [--primes 2,3,5]
    indexlab verify <family> --range A..B [--jobs N] [--out FILE]
    indexlab search-t1 --degree n --prime p [--seed S] [--budget N]
    indexlab compare <poly1> <poly2> --prime p

Polynomials are accepted as "[c0,c1,...,cn]" (ascending coefficients) or
symbolically like "x^3 - 13*x + 4".  Output is byte-deterministic for a
fixed input and format: JSON keys are sorted and big integers are printed
as decimal strings.  Exit codes: 0 success/verified, 2 usage or parse
error, 3 invalid field, 4 search budget exhausted.  The environment
variable INDEXLAB_CAP overrides the refinement level cap; --cap takes
precedence over it.
"""

from __future__ import annotations

import argparse
import json
import sys

from .arith import primes_upto
from .errors import (
    DegreeOutOfScope,
    IndexLabError,
    InvalidDegree,
    InvalidInput,
    NotAField,
    ParseError,
    ReduciblePolynomial,
    SearchBudgetExhausted,
    UnknownFamily,
)
from .families import FAMILY_NAMES, verify_family
from .intpoly import parse_poly
from .invariants import InvariantReport, full_report, vp_iK, vp_IK
from .numberfield import build_field, split_prime
from .search import DEFAULT_BUDGET, search_prime_divisor_field

USAGE_ERROR = 2
FIELD_ERROR = 3
BUDGET_ERROR = 4


def _parse_range(text: str) -> list[int]:
    """Parse "A..B" (inclusive) or a comma list "1,2,16"."""
    text = text.strip()
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
        if hi < lo:
            raise ValueError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return [int(tok) for tok in text.split(",") if tok.strip()]


def _parse_primes(text: str) -> list[int]:
    return sorted({int(tok) for tok in text.split(",") if tok.strip()})


def _report_to_json(report: InvariantReport, primes: list[int]) -> dict:
    return {
        "field": {
            "poly": list(report.poly.coeffs),
            "disc": str(report.field_disc),
            "degree": report.degree,
        },
        "splitting": {
            str(p): [[e, f] for e, f in report.splittings[p]]
            for p in primes
            if p in report.splittings
        },
        "invariants": {
            "i_K": str(report.i_K),
            "I_K": str(report.I_K),
            "valuations": {
                str(p): list(report.valuations[p])
                for p in primes
                if p in report.valuations
            },
        },
        "witness": {
            "coords": list(report.witness.coords),
            "char_poly": list(report.witness_char_poly.coeffs),
        },
    }


def _report_to_tsv(report: InvariantReport, primes: list[int]) -> str:
    rows = [
        ("degree", str(report.degree)),
        ("disc", str(report.field_disc)),
        ("i_K", str(report.i_K)),
        ("I_K", str(report.I_K)),
        ("poly", str(report.poly)),
    ]
    for p in primes:
        if p in report.splittings:
            rows.append((f"splitting.{p}", str(report.splittings[p])))
    for p in primes:
        if p in report.valuations:
            vi, vI = report.valuations[p]
            rows.append((f"valuations.{p}", f"{vi},{vI}"))
    rows.append(("witness.char_poly", str(report.witness_char_poly)))
    rows.append(("witness.coords", ",".join(str(c) for c in report.witness.coords)))
    return "\n".join(f"{k}\t{v}" for k, v in rows) + "\n"


def _dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def cmd_invariants(args) -> int:
    field = build_field(parse_poly(args.poly))
    report = full_report(field, args.cap)
    primes = _parse_primes(args.primes) if args.primes else primes_upto(field.degree)
    if args.format == "json":
        sys.stdout.write(_dump_json(_report_to_json(report, primes)))
    else:
        sys.stdout.write(_report_to_tsv(report, primes))
    return 0


def cmd_verify(args) -> int:
    if args.family not in FAMILY_NAMES:
        sys.stderr.write(f"unknown family {args.family!r}; known: {', '.join(FAMILY_NAMES)}\n")
        return USAGE_ERROR
    params = _parse_range(args.range)
    report = verify_family(args.family, params, jobs=args.jobs, cap=args.cap)
    if args.format == "json":
        text = _dump_json(report.to_json_dict())
    else:
        text = report.to_tsv()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    alpha = report.alpha_table()
    if alpha and args.format != "json":
        sys.stdout.write("# measured v2(i) per parameter:\n")
        for m, a in alpha:
            sys.stdout.write(f"# m={m}\talpha={a}\n")
    summary = (
        f"{report.family}: {report.checked} checked, {report.skipped} skipped, "
        f"{len(report.discrepancies)} discrepancies\n"
    )
    sys.stderr.write(summary)
    return 0 if report.ok else 1


def cmd_search_t1(args) -> int:
    result = search_prime_divisor_field(
        args.degree, args.prime, seed=args.seed, budget=args.budget, cap=args.cap
    )
    if args.format == "json":
        payload = {
            "degree": args.degree,
            "prime": args.prime,
            "poly": list(result.poly.coeffs),
            "poly_text": str(result.poly),
            "i_K": str(result.report.i_K),
            "I_K": str(result.report.I_K),
            "candidates_tried": result.candidates_tried,
        }
        sys.stdout.write(_dump_json(payload))
    else:
        sys.stdout.write(f"{result.poly}\n")
        sys.stdout.write(
            f"# i_K={result.report.i_K} I_K={result.report.I_K} "
            f"candidates={result.candidates_tried}\n"
        )
    return 0


def cmd_compare(args) -> int:
    f1 = parse_poly(args.poly1)
    f2 = parse_poly(args.poly2)
    if f1.degree != f2.degree:
        sys.stderr.write("polynomials must have the same degree\n")
        return USAGE_ERROR
    p = args.prime
    k1 = build_field(f1)
    k2 = build_field(f2)
    s1 = split_prime(k1, p)
    s2 = split_prime(k2, p)
    v1 = (vp_iK(k1, p, args.cap), vp_IK(k1, p, args.cap))
    v2 = (vp_iK(k2, p, args.cap), vp_IK(k2, p, args.cap))
    same = s1 == s2
    # a pair with equal splitting types but different v_p(I) shows the
    # splitting type alone cannot determine the index valuation
    witness = same and v1[1] != v2[1]
    payload = {
        "prime": p,
        "fields": [
            {"poly": list(f1.coeffs), "disc": str(k1.disc), "splitting": [[e, f] for e, f in s1]},
            {"poly": list(f2.coeffs), "disc": str(k2.disc), "splitting": [[e, f] for e, f in s2]},
        ],
        "same_splitting": same,
        "valuations": {"field1": list(v1), "field2": list(v2)},
        "splitting_blind_spot": witness,
    }
    if args.format == "json":
        sys.stdout.write(_dump_json(payload))
    else:
        sys.stdout.write(f"splitting.1\t{s1}\n")
        sys.stdout.write(f"splitting.2\t{s2}\n")
        sys.stdout.write(f"same_splitting\t{int(same)}\n")
        sys.stdout.write(f"valuations.1\t{v1[0]},{v1[1]}\n")
        sys.stdout.write(f"valuations.2\t{v2[0]},{v2[1]}\n")
        sys.stdout.write(f"splitting_blind_spot\t{int(witness)}\n")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="indexlab",
        description="Exact index invariants i(K) and I(K) of number fields of degree <= 7.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser("invariants", help="full invariant report for one field")
    p_inv.add_argument("poly")
    p_inv.add_argument("--format", choices=("json", "tsv"), default="json")
    p_inv.add_argument("--primes", default="", help="comma list, e.g. 2,3,5")
    p_inv.add_argument("--cap", type=int, default=None, help="refinement level cap override")
    p_inv.set_defaults(func=cmd_invariants)

    p_ver = sub.add_parser("verify", help="sweep a family formula against the engine")
    p_ver.add_argument("family")
    p_ver.add_argument(
        "--range",
        required=True,
        help="A..B inclusive or comma list; use --range=-10..10 for negatives",
    )
    p_ver.add_argument("--jobs", type=int, default=1)
    p_ver.add_argument("--format", choices=("json", "tsv"), default="tsv")
    p_ver.add_argument("--out", default=None, help="write the report to this file")
    p_ver.add_argument("--cap", type=int, default=None)
    p_ver.set_defaults(func=cmd_verify)

    p_t1 = sub.add_parser("search-t1", help="find a degree-n field with p | i(K)")
    p_t1.add_argument("--degree", type=int, required=True)
    p_t1.add_argument("--prime", type=int, required=True)
    p_t1.add_argument("--seed", type=int, default=0)
    p_t1.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p_t1.add_argument("--format", choices=("json", "tsv"), default="json")
    p_t1.add_argument("--cap", type=int, default=None)
    p_t1.set_defaults(func=cmd_search_t1)

    p_cmp = sub.add_parser("compare", help="splitting-type comparator for two fields")
    p_cmp.add_argument("poly1")
    p_cmp.add_argument("poly2")
    p_cmp.add_argument("--prime", type=int, required=True)
    p_cmp.add_argument("--format", choices=("json", "tsv"), default="json")
    p_cmp.add_argument("--cap", type=int, default=None)
    p_cmp.set_defaults(func=cmd_compare)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        sys.stderr.write(f"parse error: {exc}\n")
        return USAGE_ERROR
    except UnknownFamily as exc:
        sys.stderr.write(f"{exc}\n")
        return USAGE_ERROR
    except (ReduciblePolynomial, NotAField, DegreeOutOfScope, InvalidDegree, InvalidInput) as exc:
        sys.stderr.write(f"invalid field: {exc}\n")
        return FIELD_ERROR
    except SearchBudgetExhausted as exc:
        sys.stderr.write(f"search failed: {exc}\n")
        return BUDGET_ERROR
    except IndexLabError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
