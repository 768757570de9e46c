"""Command line surface: construct, analyze, dualize, verify, catalog.

Codes are specified either with the -r -s -b -l -a flags or with a JSON
spec file holding the fields r, s, b, ell, a; polynomial strings accept
both the algebraic and the bitstring grammar, and all output uses the
canonical algebraic form.

Exit codes: 0 success, 1 internal inconsistency, 2 validation or input
error, 3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import catalog, duality, oracle
from .codes import (
    Codeword,
    CodeParams,
    DoubleCyclicCode,
    GeneratorTriple,
    InternalConsistencyError,
    ValidationError,
    encode,
    generator_matrix,
    is_separable,
    project_left,
    project_right,
    spanning_set,
    standard_form,
    subcode_cardinalities,
    validate,
)
from .gf2poly import ZERO, Gf2PolyParseError, NotInvertibleError, gcd, parse, x_to
from .oracle import CapExceededError

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INVALID = 2
EXIT_CAP = 3


def _add_spec_arguments(sub):
    sub.add_argument("--spec", help="JSON file with fields r, s, b, ell, a")
    sub.add_argument("-r", type=int, help="left block length")
    sub.add_argument("-s", type=int, help="right block length")
    sub.add_argument("-b", help="left generator polynomial")
    sub.add_argument("-l", "--ell", dest="ell", help="cross generator polynomial")
    sub.add_argument("-a", help="right generator polynomial")


def _load_code(args) -> DoubleCyclicCode:
    if args.spec:
        with open(args.spec, encoding="utf-8") as handle:
            data = json.load(handle)
        try:
            r, s = int(data["r"]), int(data["s"])
            b, ell, a = data["b"], data["ell"], data["a"]
        except KeyError as missing:
            raise ValueError(f"spec file is missing field {missing}") from None
    else:
        if None in (args.r, args.s, args.b, args.ell, args.a):
            raise ValueError("need either --spec or all of -r -s -b -l -a")
        r, s, b, ell, a = args.r, args.s, args.b, args.ell, args.a
    params = CodeParams(r, s)
    triple = GeneratorTriple(params, parse(b), parse(ell), parse(a))
    return validate(triple)


def _print_kv(lines):
    for key, value in lines:
        print(f"{key} = {value}")


def cmd_info(args) -> int:
    code = _load_code(args)
    cards = subcode_cardinalities(code)
    distance = None
    if args.distance:
        distance = oracle.min_distance(oracle.enumerate_codewords(code))
    if args.json:
        report = {
            "schema": SCHEMA_VERSION,
            "r": code.params.r,
            "s": code.params.s,
            "n": code.params.n,
            "k": code.dimension,
            "kappa": code.kappa,
            "separable": is_separable(code),
            "b": str(code.b),
            "ell": str(code.ell),
            "a": str(code.a),
            "left_projection": str(project_left(code)),
            "right_projection": str(project_right(code)),
            "cardinalities": {
                "C_r": cards.left_projection,
                "C_s": cards.right_projection,
                "C_r_perp": cards.left_projection_dual,
                "C_s_perp": cards.right_projection_dual,
                "dual_C_r": cards.dual_left_projection,
                "dual_C_s": cards.dual_right_projection,
            },
        }
        if args.distance:
            report["d"] = distance
        print(json.dumps(report, indent=2, sort_keys=True))
        return EXIT_OK
    lines = [
        ("r", code.params.r),
        ("s", code.params.s),
        ("n", code.params.n),
        ("k", code.dimension),
        ("kappa", code.kappa),
        ("separable", str(is_separable(code)).lower()),
        ("b", code.b),
        ("ell", code.ell),
        ("a", code.a),
        ("left projection", project_left(code)),
        ("right projection", project_right(code)),
        ("|C_r|", cards.left_projection),
        ("|C_s|", cards.right_projection),
        ("|(C_r)^perp|", cards.left_projection_dual),
        ("|(C_s)^perp|", cards.right_projection_dual),
        ("|(C^perp)_r|", cards.dual_left_projection),
        ("|(C^perp)_s|", cards.dual_right_projection),
    ]
    if args.distance:
        lines.append(("d", "none" if distance is None else distance))
    _print_kv(lines)
    return EXIT_OK


def cmd_dual(args) -> int:
    code = _load_code(args)
    dual = duality.dual_triple(code)
    checked = None
    if args.check:
        dual_as_code = duality.dual_code(code)
        checked = oracle.codes_equal(
            oracle.enumerate_codewords(dual_as_code), oracle.nullspace_dual(code)
        )
        if not checked:
            raise InternalConsistencyError("closed-form dual disagrees with nullspace")
    if args.json:
        report = {
            "schema": SCHEMA_VERSION,
            "r": dual.params.r,
            "s": dual.params.s,
            "b": str(dual.b),
            "ell": str(dual.ell),
            "a": str(dual.a),
            "rho": None if dual.rho is None else str(dual.rho),
            "lambda": None if dual.lam is None else str(dual.lam),
        }
        if checked is not None:
            report["check"] = "verified"
        print(json.dumps(report, indent=2, sort_keys=True))
        return EXIT_OK
    lines = [
        ("r", dual.params.r),
        ("s", dual.params.s),
        ("b", dual.b),
        ("ell", dual.ell),
        ("a", dual.a),
    ]
    if dual.rho is not None:
        lines.append(("rho", dual.rho))
        lines.append(("lambda", dual.lam))
    if checked is not None:
        lines.append(("check", "verified"))
    _print_kv(lines)
    return EXIT_OK


def _matrix_lines(matrix):
    r = matrix.params.r
    for row in matrix.rows:
        left = "".join(map(str, row[:r]))
        right = "".join(map(str, row[r:]))
        yield f"{left}|{right}"


def cmd_matrix(args) -> int:
    code = _load_code(args)
    matrix = standard_form(code) if args.standard else generator_matrix(code)
    for line in _matrix_lines(matrix):
        print(line)
    if args.standard:
        print("columns = " + " ".join(map(str, matrix.col_perm)))
    return EXIT_OK


def _catalog_rows(entries):
    for e in entries:
        yield {
            "r": e.params.r,
            "s": e.params.s,
            "b": str(e.triple.b),
            "ell": str(e.triple.ell),
            "a": str(e.triple.a),
            "k": e.k,
            "d": e.d,
            "separable": e.separable,
            "selfdual": e.selfdual,
        }


def cmd_enumerate(args) -> int:
    entries = catalog.enumerate_codes(
        args.r, args.s, max_len=args.max_len, distance_dim_cap=args.max_dim
    )
    if args.format == "json":
        payload = {
            "schema": SCHEMA_VERSION,
            "r": args.r,
            "s": args.s,
            "entries": list(_catalog_rows(entries)),
        }
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        buffer = io.StringIO()
        writer = csv.DictWriter(
            buffer,
            fieldnames=["r", "s", "b", "ell", "a", "k", "d", "separable", "selfdual"],
            lineterminator="\n",
        )
        writer.writeheader()
        for row in _catalog_rows(entries):
            row["d"] = "" if row["d"] is None else row["d"]
            row["separable"] = str(row["separable"]).lower()
            row["selfdual"] = str(row["selfdual"]).lower()
            writer.writerow(row)
        text = buffer.getvalue()
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        print(f"wrote {len(entries)} entries to {args.output}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _tamper(cwset):
    """Negative-control corruption: flip the last coordinate of the
    lexicographically largest word."""
    words = set(cwset.words)
    top = max(words)
    words.discard(top)
    words.add(top ^ 1)
    return oracle.CodewordSet(cwset.params, tuple(sorted(words)))


def _verify_checks(code: DoubleCyclicCode, corrupt: bool):
    params = code.params
    words = oracle.enumerate_codewords(code)
    nullspace = oracle.nullspace_dual(code)
    if corrupt:
        words = _tamper(words)
        nullspace = _tamper(nullspace)
    dual_enum = oracle.enumerate_codewords(duality.dual_code(code))
    closure = oracle.closure_under_shift_and_add(
        params,
        [
            Codeword.from_polys(params, code.b, ZERO),
            Codeword.from_polys(params, code.ell, code.a),
        ],
    )
    cards = subcode_cardinalities(code)
    left_of = lambda ws: {w >> params.s for w in ws}
    right_of = lambda ws: {w & ((1 << params.s) - 1) for w in ws}
    observed = (
        len(left_of(words.words)),
        len(right_of(words.words)),
        (1 << params.r) // len(left_of(words.words)),
        (1 << params.s) // len(right_of(words.words)),
        len(left_of(nullspace.words)),
        len(right_of(nullspace.words)),
    )
    dual = duality.dual_triple(code)
    g = gcd(code.b, code.ell)
    degrees_ok = int(dual.b.degree) == params.r - int(g.degree) and int(
        dual.a.degree
    ) == params.s - int(code.a.degree) - int(code.b.degree) + int(g.degree)
    if is_separable(code):
        congruence_ok = True
    else:
        modulus = code.b.reciprocal() // g.reciprocal()
        lhs = dual.lam * x_to(params.m - int(code.ell.degree) - 1)
        lhs = lhs * dual.rho.reciprocal() + x_to(params.m - int(code.a.degree) - 1)
        congruence_ok = not lhs % modulus and int(dual.lam.degree) < code.kappa
    return [
        ("shift closure (code)", oracle.verify_double_cyclic(words)),
        ("shift closure (dual)", oracle.verify_double_cyclic(nullspace)),
        ("spanning set spans code", closure.words == words.words),
        ("dual triple matches nullspace dual", dual_enum.words == nullspace.words),
        ("subcode cardinalities", observed == tuple(cards)),
        ("dual degree relations", degrees_ok),
        ("cross-term congruence", congruence_ok),
    ]


def cmd_verify(args) -> int:
    code = _load_code(args)
    checks = _verify_checks(code, args.corrupt)
    all_ok = True
    for name, ok in checks:
        print(f"{name}: {'PASS' if ok else 'FAIL'}")
        all_ok = all_ok and ok
    return EXIT_OK if all_ok else EXIT_INTERNAL


def cmd_mindist(args) -> int:
    code = _load_code(args)
    d = oracle.min_distance(oracle.enumerate_codewords(code))
    print(f"d = {'none' if d is None else d}")
    return EXIT_OK


def cmd_encode(args) -> int:
    code = _load_code(args)
    if not all(c in "01" for c in args.message):
        raise ValueError("message must be a string of 0s and 1s")
    word = encode(code, [int(c) for c in args.message])
    print(word)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="doublecyclic",
        description="construct and analyze binary two-block cyclic codes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="dimensions, projections, cardinalities")
    _add_spec_arguments(p)
    p.add_argument("--distance", action="store_true", help="also enumerate d")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("dual", help="closed-form dual generator triple")
    _add_spec_arguments(p)
    p.add_argument("--check", action="store_true", help="verify against nullspace")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("matrix", help="generator matrix rows")
    _add_spec_arguments(p)
    p.add_argument("--standard", action="store_true", help="permuted block form")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("enumerate", help="catalog all codes for (r, s)")
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-s", type=int, required=True)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("-o", "--output", help="write to file instead of stdout")
    p.add_argument("--max-len", type=int, default=catalog.DEFAULT_MAX_LEN)
    p.add_argument(
        "--max-dim",
        type=int,
        default=16,
        help="skip distance enumeration above this dimension",
    )
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run the invariant suite on one code")
    _add_spec_arguments(p)
    p.add_argument(
        "--corrupt",
        action="store_true",
        help="negative control: tamper with the enumerated sets first",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("mindist", help="exhaustive minimum distance")
    _add_spec_arguments(p)
    p.set_defaults(func=cmd_mindist)

    p = sub.add_parser("encode", help="encode a message with the spanning rows")
    _add_spec_arguments(p)
    p.add_argument("-m", "--message", required=True, help="bit string of length k")
    p.set_defaults(func=cmd_encode)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceededError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_CAP
    except (InternalConsistencyError, NotInvertibleError) as err:
        print(f"internal error: {err}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ValidationError, Gf2PolyParseError, ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INVALID


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
