"""Command-line entry point.

Exit codes: 0 affirmative result, 1 definitive negative, 2 cap reached
without a verdict, 3 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from radoreg.algebra import (
    Equation,
    at_family,
    forbidden_ratios,
    fraction_str,
    normalize,
    parse_coeffs,
    zero_sum_subset,
)
from radoreg.certificate import (
    CertificateSchemaError,
    coloring_obj,
    ints,
    make_certificate,
    ratio_strs,
    verify_certificate,
)
from radoreg.coloring import Coloring, Radius, rado_radius, search_coloring, verify_coloring
from radoreg.errors import RadoError
from radoreg.linkage import build_matrix, linkage_search, max_linkage, theorem3_walk
from radoreg.strong import InequalitySystem, distinct_rows, strong_solve

EXIT_OK, EXIT_NEGATIVE, EXIT_UNKNOWN, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _fmt(xs) -> str:
    return ",".join(str(x) for x in xs)


def _equation(args) -> Equation:
    return normalize(parse_coeffs(args.coeffs))


def _row(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in "".join(text.split()).split(","))
    except ValueError:
        raise UsageError(f"malformed inequality row {text!r}") from None


def _system(eq: Equation, args) -> InequalitySystem:
    rows = [_row(t) for t in getattr(args, "ineq", None) or []]
    if getattr(args, "distinct", False):
        rows += [r for r in distinct_rows(eq.n) if r not in rows]
    return InequalitySystem.for_equation(eq, rows)


def _rows_obj(system: InequalitySystem) -> list:
    return [ints(r) for r in system.rows]


def cmd_check_regular(args):
    eq = _equation(args)
    subset = zero_sum_subset(eq)
    payload = {"regular": subset is not None, "subset": ints(subset) if subset else None}
    if subset:
        text = f"regular (subset indices {{{','.join(map(str, subset))}}})"
    else:
        text = "not regular"
    return (EXIT_OK if subset else EXIT_NEGATIVE), text, eq, "regularity", payload


def cmd_ratios(args):
    eq = _equation(args)
    ratios = forbidden_ratios(eq)
    text = "\n".join(f"S_{l} = {fraction_str(q)}" for l, q in enumerate(ratios, start=1))
    return EXIT_OK, text, eq, "ratios", {"ratios": ratio_strs(ratios)}


def cmd_at_family(args):
    eq = at_family(args.n)
    return EXIT_OK, str(eq), eq, "ratios", {"ratios": ratio_strs(forbidden_ratios(eq))}


def cmd_linkage(args):
    eq = _equation(args)
    m = max_linkage(eq, args.max_m)
    payload = {"m_cap": str(args.max_m), "m": str(m), "first_row": [], "ratio_index": []}
    if m == 0:
        return EXIT_NEGATIVE, "no linkage matrix (m = 0)", eq, "linkage", payload
    mat = linkage_search(eq, m)
    payload["first_row"] = ratio_strs(mat.first_row)
    payload["ratio_index"] = [[None if v is None else str(v) for v in row] for row in mat.ratio_index]
    idx = "\n".join(" ".join("-" if v is None else str(v) for v in row) for row in mat.ratio_index)
    text = f"m = {m} (cap {args.max_m}); lower bound on the degree of regularity\n{mat}\nratio indices:\n{idx}"
    return EXIT_OK, text, eq, "linkage", payload


def cmd_radius(args):
    eq = _equation(args)
    system = _system(eq, args)
    result = rado_radius(eq, args.r, args.cap, system.rows)
    payload = {"r": str(args.r), "cap": str(args.cap), "ineqs": _rows_obj(system)}
    if isinstance(result, Radius):
        payload.update(outcome="radius", R=str(result.R))
        payload["witness"] = coloring_obj(result.witness) if result.witness else None
        text = f"Radius({result.R})"
        if result.witness:
            text += f"\nwitness on [1, {result.R - 1}]: {' '.join(map(str, result.witness.colors))}"
        return EXIT_OK, text, eq, "radius", payload
    payload.update(outcome="unknown", R=None, witness=coloring_obj(result.witness))
    text = f"Unknown(cap={result.cap})\nwitness on [1, {result.cap}]: {' '.join(map(str, result.witness.colors))}"
    return EXIT_UNKNOWN, text, eq, "radius", payload


def cmd_find_coloring(args):
    eq = _equation(args)
    system = _system(eq, args)
    col = search_coloring(eq, args.r, args.n, system.rows)
    payload = {
        "mode": "search",
        "r": str(args.r),
        "N": str(args.n),
        "ineqs": _rows_obj(system),
        "coloring": coloring_obj(col) if col else None,
    }
    if col is None:
        return EXIT_NEGATIVE, f"none (no solution-free {args.r}-coloring of [1, {args.n}])", eq, "coloring", payload
    return EXIT_OK, col.dumps().rstrip("\n"), eq, "coloring", payload


def _load_coloring(path) -> Coloring:
    try:
        return Coloring.load(path)
    except OSError as exc:
        raise UsageError(f"cannot read coloring file: {exc}") from None


def cmd_verify_coloring(args):
    eq = _equation(args)
    system = _system(eq, args)
    col = _load_coloring(args.file)
    outcome = verify_coloring(eq, col, system.rows)
    payload = {
        "mode": "verify",
        "ineqs": _rows_obj(system),
        "coloring": coloring_obj(col),
        "valid": outcome.valid,
        "counterexample": ints(outcome.counterexample) if not outcome.valid else None,
        "color": str(outcome.color) if not outcome.valid else None,
    }
    if outcome.valid:
        return EXIT_OK, "valid (no monochromatic solution)", eq, "coloring", payload
    text = f"counterexample ({_fmt(outcome.counterexample)}) color {outcome.color}"
    return EXIT_NEGATIVE, text, eq, "coloring", payload


def cmd_solve(args):
    eq = _equation(args)
    system = _system(eq, args)
    col = _load_coloring(args.coloring)
    xs = strong_solve(eq, system, col)
    payload = {
        "ineqs": _rows_obj(system),
        "coloring": coloring_obj(col),
        "solution": ints(xs) if xs else None,
        "colors": ints(col(x) for x in xs) if xs else None,
    }
    if xs is None:
        return EXIT_NEGATIVE, "none", eq, "solution", payload
    return EXIT_OK, f"{_fmt(xs)} (color {col(xs[0])})", eq, "solution", payload


def cmd_walk(args):
    eq = _equation(args)
    row = [Fraction(q) for q in parse_coeffs(args.row)]
    mat = build_matrix(eq, row)
    col = _load_coloring(args.coloring)
    res = theorem3_walk(eq, mat, col.as_mapping(), args.x)
    payload = {
        "first_row": ratio_strs(mat.first_row),
        "ratio_index": [[None if v is None else str(v) for v in r] for r in mat.ratio_index],
        "x": str(args.x),
        "values": ints(res.values),
        "colors": ints(col(v) for v in res.values),
        "pair": ints(res.pair),
        "position": ints(res.ratio_position),
        "l": str(res.ratio_index),
        "solution": ints(res.solution),
        "color": str(res.color),
    }
    i, j = res.ratio_position
    text = (
        f"pair ({res.pair[0]}, {res.pair[1]}) color {res.color} via c_{i},{j} = S_{res.ratio_index}\n"
        f"solution {_fmt(res.solution)}"
    )
    return EXIT_OK, text, eq, "walk", payload


def cmd_verify_certificate(args):
    try:
        with open(args.file) as fh:
            cert = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read certificate: {exc}") from None
    ok = verify_certificate(cert, verify_cap=args.verify_cap)
    return (EXIT_OK if ok else EXIT_NEGATIVE), ("verified" if ok else "verification failed"), None, None, None


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON certificate")
    common.add_argument("--seedless", action="store_true", help="deterministic output (always the case)")
    common.add_argument("--threads", type=_positive, default=1, help="accepted for compatibility; results never depend on it")

    parser = argparse.ArgumentParser(prog="radoreg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, coeffs=True):
        p = sub.add_parser(name, parents=[common], help=help_text)
        if coeffs:
            p.add_argument("--coeffs", required=True, help='e.g. "1,1,-1" or "-7/3,2,4/3"')
        p.set_defaults(func=func)
        return p

    def add_ineqs(p):
        p.add_argument("--ineq", action="append", metavar="ROW", help="inequality row c1,...,cn (repeatable)")
        p.add_argument("--distinct", action="store_true", help="require pairwise distinct unknowns")

    add("check-regular", cmd_check_regular, "Rado's criterion")
    add("ratios", cmd_ratios, "forbidden ratios S_l")
    p = add("linkage", cmd_linkage, "largest linkage matrix up to a cap")
    p.add_argument("--max-m", type=_positive, required=True)
    p = add("radius", cmd_radius, "least N with no solution-free r-coloring of [1, N]")
    p.add_argument("-r", type=_positive, required=True)
    p.add_argument("--cap", type=_positive, required=True)
    add_ineqs(p)
    p = add("find-coloring", cmd_find_coloring, "least solution-free coloring of [1, N]")
    p.add_argument("-r", type=_positive, required=True)
    p.add_argument("-n", type=_positive, required=True)
    add_ineqs(p)
    p = add("verify-coloring", cmd_verify_coloring, "check a coloring file")
    p.add_argument("--file", required=True)
    add_ineqs(p)
    p = add("at-family", cmd_at_family, "equation with degree of regularity n - 1", coeffs=False)
    p.add_argument("-n", type=int, required=True)
    p = add("solve", cmd_solve, "monochromatic solution satisfying inequalities")
    p.add_argument("--coloring", required=True)
    add_ineqs(p)
    p = add("walk", cmd_walk, "pigeonhole walk along a linkage matrix")
    p.add_argument("--row", required=True, help="first row of ratios, e.g. 1/2,1/4")
    p.add_argument("--coloring", required=True)
    p.add_argument("--x", type=_positive, required=True)
    p = add("verify-certificate", cmd_verify_certificate, "re-check a JSON certificate", coeffs=False)
    p.add_argument("--file", required=True)
    p.add_argument("--verify-cap", type=_positive, default=64)
    return parser


_VALUE_FLAGS = ("--coeffs", "--ineq", "--row")


def _attach_values(argv: list[str]) -> list[str]:
    """Glue ``--coeffs -7/3,2`` into ``--coeffs=-7/3,2`` so argparse keeps it."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_attach_values(argv))
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        code, text, eq, kind, payload = args.func(args)
    except CertificateSchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (RadoError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json and kind is not None:
        cert = make_certificate(eq, kind, payload, ["radoreg", *argv])
        print(json.dumps(cert, indent=2, sort_keys=True))
    else:
        print(text)
    return code


def run(argv: Sequence[str]) -> int:
    return main(argv)


if __name__ == "__main__":
    sys.exit(main())
