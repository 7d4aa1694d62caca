"""Command-line front end.

Exit codes: 0 on success or a passed verification, 1 on a failed
verification, 2 on usage or input errors.  All results go to stdout,
diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys

from .angular import NineJArray, SurdSum, combinant_9j_array, wigner9j
from .combinant import Pencil, combinant_sequence, random_pencil
from .errors import AlgebraError, FormulaViolationError
from .forms import LinearSymbol
from .omega import omega_chain
from .parsing import format_form, parse_form
from .serialize import form_from_dict, form_to_dict, table_to_dict
from .syzygy import (
    evaluate_syzygy,
    gamma,
    positivity_certificate,
    recover_combinant,
    syzygy_space_dim,
    syzygy_table,
    theta,
)
from .transvectant import transvectant


def _add_format_flags(parser):
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--json", action="store_true", help="shorthand for --format json")


def _fmt(args) -> str:
    return "json" if getattr(args, "json", False) or args.format == "json" else "text"


def _add_form_inputs(parser):
    parser.add_argument("paths", nargs="*", metavar="FILE", help="form files (JSON or expression text)")
    parser.add_argument(
        "--expr", action="append", default=[], help="inline form expression (repeatable)"
    )


def _load_forms(args, parser, count):
    forms = []
    for path in args.paths:
        try:
            with open(path, "r", encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            parser.error(f"cannot read {path}: {exc}")
        text = text.strip()
        if text.startswith("{"):
            forms.append(form_from_dict(json.loads(text)))
        else:
            forms.append(parse_form(text))
    forms.extend(parse_form(expr) for expr in args.expr)
    if len(forms) != count:
        parser.error(f"expected {count} input forms, got {len(forms)}")
    return forms


def _print_form(form, args):
    if _fmt(args) == "json":
        print(json.dumps(form_to_dict(form)))
    else:
        print(format_form(form))


def _cmd_transvect(args, parser):
    f, g = _load_forms(args, parser, 2)
    _print_form(transvectant(f, g, args.q), args)
    return 0


def _cmd_combinants(args, parser):
    a, b = _load_forms(args, parser, 2)
    seq = combinant_sequence(Pencil(a, b))
    if _fmt(args) == "json":
        print(json.dumps([form_to_dict(c) for c in seq]))
    else:
        for r, c in enumerate(seq, start=1):
            print(f"C{2 * r - 1} = {format_form(c)}")
    return 0


def _cmd_syzygy_table(args, parser):
    table = syzygy_table(args.d, args.r)
    if _fmt(args) == "json":
        print(json.dumps(table_to_dict(table)))
    else:
        for (i, j), value in table.items():
            print(f"alpha[{i},{j}] = {value}")
    return 0


def _cmd_verify(args, parser):
    d = args.d
    if args.r is not None:
        r_values = [args.r]
    else:
        r_values = list(range(3, (d + 1) // 2 + 1))
        if not r_values:
            parser.error(f"no valid weight indices for d={d}")
    failures = 0
    for r in r_values:
        good = 0
        for trial in range(args.trials):
            pencil = random_pencil(d, args.seed + trial, args.bound)
            if evaluate_syzygy(pencil, r).is_zero():
                good += 1
        line = f"{good}/{args.trials} syzygies vanish"
        if len(r_values) > 1:
            line = f"r={r}: " + line
        print(line)
        failures += args.trials - good
    return 0 if failures == 0 else 1


def _cmd_recover(args, parser):
    pencil = random_pencil(args.d, args.seed, args.bound)
    recovered = recover_combinant(pencil, args.r)
    direct = transvectant(pencil.a, pencil.b, 2 * args.r - 1)
    label = f"C{2 * args.r - 1}"
    if recovered == direct:
        print(f"recovered {label} matches direct transvectant")
        print("VERIFIED")
        return 0
    print(f"recovered {label} differs from direct transvectant")
    print("FAILED")
    return 1


def _cmd_oracle_theta(args, parser):
    f = LinearSymbol.parse(args.f)
    result = omega_chain(args.d, args.r, args.i, args.j, f)
    formula = theta(args.d, args.r, args.i, args.j)
    print(f"oracle ratio:  {result.ratio}")
    print(f"formula theta: {formula}")
    if result.ratio == formula:
        print("MATCH")
        return 0
    print("MISMATCH")
    return 1


def _cmd_gamma(args, parser):
    cert = positivity_certificate(args.r, args.d)
    if _fmt(args) == "json":
        print(
            json.dumps(
                {
                    "r": cert.r,
                    "d": cert.d,
                    "gamma": str(cert.gamma),
                    "boundary_gamma": str(cert.boundary_value),
                    "dn_difference": str(cert.dn_difference),
                    "dn_factored": str(cert.dn_factored),
                }
            )
        )
    else:
        print(f"gamma({cert.r},{cert.d}) = {cert.gamma}")
        print(f"gamma({cert.r},{2 * cert.r - 1}) = {cert.boundary_value}")
        print(f"D - N = {cert.dn_difference} = (r-1)(r-2)(2r-1)(d-2r+3)")
    return 0


def _cmd_dim_syzygy(args, parser):
    print(syzygy_space_dim(args.d, args.r))
    return 0


def _parse_twice_j(text, parser):
    parts = text.split(",")
    if len(parts) != 9:
        parser.error("--twice-j needs nine comma-separated integers")
    try:
        values = [int(p) for p in parts]
    except ValueError:
        parser.error("--twice-j entries must be integers")
    return NineJArray.from_twice([values[0:3], values[3:6], values[6:9]])


def _cmd_ninej(args, parser):
    array = _parse_twice_j(args.twice_j, parser)
    value = wigner9j(array)
    if _fmt(args) == "json":
        print(json.dumps({str(rad): str(c) for rad, c in sorted(value.terms.items())}))
    else:
        print(value)
    return 0


def _cmd_ninej_combinant(args, parser):
    base, permuted = combinant_9j_array(args.d, args.r, args.i, args.j)
    value = wigner9j(base)
    value_p = wigner9j(permuted)
    print(f"B  = [{base}]")
    print(f"B' = [{permuted}]")
    print(f"ninej(B)  = {value}")
    print(f"ninej(B') = {value_p}")
    equivalent = value == value_p
    print(f"equivalent: {'yes' if equivalent else 'NO'}")
    th = theta(args.d, args.r, args.i, args.j)
    print(f"theta = {th}")
    if not value.is_zero() and value.single_term() is not None:
        print(f"theta/ninej = {SurdSum.from_rational(th) / value}")
    else:
        print("theta/ninej = (unavailable: value is zero or not a single surd)")
    return 0 if equivalent else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pencils",
        description="Exact algebra of binary-form pencils: transvectants, "
        "combinants, quadratic syzygies, and recoupling cross-checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transvect", help="transvectant of two forms")
    _add_form_inputs(p)
    p.add_argument("--q", type=int, required=True, help="transvectant index")
    _add_format_flags(p)
    p.set_defaults(handler=_cmd_transvect)

    p = sub.add_parser("combinants", help="combinant sequence of a pencil")
    _add_form_inputs(p)
    _add_format_flags(p)
    p.set_defaults(handler=_cmd_combinants)

    p = sub.add_parser("syzygy-table", help="syzygy coefficient table")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    _add_format_flags(p)
    p.set_defaults(handler=_cmd_syzygy_table)

    p = sub.add_parser("verify", help="check syzygy vanishing on random pencils")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--bound", type=int, default=10)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("recover", help="recover a combinant and compare to the direct value")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--bound", type=int, default=10)
    p.set_defaults(handler=_cmd_recover)

    p = sub.add_parser("oracle-theta", help="differential-operator check of a coefficient")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--f", default="1,2", help="linear symbol components 'a,b'")
    p.set_defaults(handler=_cmd_oracle_theta)

    p = sub.add_parser("gamma", help="positivity ratio and its certificate")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    _add_format_flags(p)
    p.set_defaults(handler=_cmd_gamma)

    p = sub.add_parser("dim-syzygy", help="dimension of the weight-2r syzygy space")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(handler=_cmd_dim_syzygy)

    p = sub.add_parser("ninej", help="exact 9j symbol from doubled momenta")
    p.add_argument("--twice-j", required=True, dest="twice_j", metavar="a,b,c,d,e,f,g,h,i")
    _add_format_flags(p)
    p.set_defaults(handler=_cmd_ninej)

    p = sub.add_parser("ninej-combinant", help="recoupling arrays for a coefficient")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.set_defaults(handler=_cmd_ninej_combinant)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args, parser)
    except FormulaViolationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (AlgebraError, ValueError, ZeroDivisionError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
