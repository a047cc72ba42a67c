"""JSON certificates: build them from results, and re-check them cheaply.

Every number is written as an exact decimal or ``p/q`` string.  Checking
a certificate never repeats a search except for a single "none exists"
claim at one length, and only when that length is at most ``verify_cap``.
"""

from __future__ import annotations

import datetime as _dt
from fractions import Fraction
from typing import Any, Optional, Sequence

import jsonschema

from radoreg.algebra import (
    Equation,
    check_solution,
    forbidden_ratio_solution,
    forbidden_ratios,
    fraction_str,
    rado_regular,
)
from radoreg.coloring import Coloring, search_coloring, satisfies_rows, verify_coloring
from radoreg.errors import CertificateSchemaError, RadoError
from radoreg.linkage import build_matrix, integrality_base, walk_values

SCHEMA_ID = "radoreg.certificate/1"
KINDS = ("regularity", "ratios", "linkage", "radius", "coloring", "solution", "walk")
DEFAULT_VERIFY_CAP = 64

_int = {"type": "string", "pattern": r"^-?[0-9]+$"}
_rat = {"type": "string", "pattern": r"^-?[0-9]+(/[0-9]+)?$"}
_ints = {"type": "array", "items": _int}
_rows = {"type": "array", "items": _ints}


def _maybe(schema: dict) -> dict:
    return {"anyOf": [schema, {"type": "null"}]}


_coloring = {
    "type": "object",
    "required": ["N", "r", "colors"],
    "properties": {"N": _int, "r": _int, "colors": _ints},
}


def _payload(required: Sequence[str], **props) -> dict:
    return {"type": "object", "required": list(required), "properties": props}


_PAYLOADS = {
    "regularity": _payload(["regular", "subset"], regular={"type": "boolean"}, subset=_maybe(_ints)),
    "ratios": _payload(["ratios"], ratios={"type": "array", "items": _rat}),
    "linkage": _payload(
        ["m_cap", "m", "first_row", "ratio_index"],
        m_cap=_int,
        m=_int,
        first_row={"type": "array", "items": _rat},
        ratio_index={"type": "array", "items": {"type": "array", "items": _maybe(_int)}},
    ),
    "radius": _payload(
        ["r", "cap", "outcome", "R", "ineqs", "witness"],
        r=_int,
        cap=_int,
        outcome={"enum": ["radius", "unknown"]},
        R=_maybe(_int),
        ineqs=_rows,
        witness=_maybe(_coloring),
    ),
    "coloring": _payload(
        ["mode", "ineqs", "coloring"],
        mode={"enum": ["search", "verify"]},
        ineqs=_rows,
        coloring=_maybe(_coloring),
        r=_int,
        N=_int,
        valid={"type": "boolean"},
        counterexample=_maybe(_ints),
        color=_maybe(_int),
    ),
    "solution": _payload(
        ["ineqs", "coloring", "solution", "colors"],
        ineqs=_rows,
        coloring=_coloring,
        solution=_maybe(_ints),
        colors=_maybe(_ints),
    ),
    "walk": _payload(
        ["first_row", "ratio_index", "x", "values", "colors", "pair", "position", "l", "solution", "color"],
        first_row={"type": "array", "items": _rat},
        ratio_index={"type": "array", "items": {"type": "array", "items": _maybe(_int)}},
        x=_int,
        values=_ints,
        colors=_ints,
        pair=_ints,
        position=_ints,
        l=_int,
        solution=_ints,
        color=_int,
    ),
}

SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["schema", "kind", "equation", "payload"],
    "properties": {
        "schema": {"const": SCHEMA_ID},
        "kind": {"enum": list(KINDS)},
        "equation": {"type": "array", "items": _int, "minItems": 2},
        "payload": {"type": "object"},
        "meta": {"type": "object"},
    },
    "allOf": [
        {"if": {"properties": {"kind": {"const": k}}}, "then": {"properties": {"payload": p}}}
        for k, p in _PAYLOADS.items()
    ],
}


def ints(xs) -> list[str]:
    return [str(int(x)) for x in xs]


def coloring_obj(col: Coloring) -> dict:
    return {"N": str(col.N), "r": str(col.r), "colors": ints(col.colors)}


def coloring_from(obj: dict) -> Coloring:
    colors = tuple(int(c) for c in obj["colors"])
    if len(colors) != int(obj["N"]):
        raise ValueError("coloring length does not match N")
    return Coloring(colors, int(obj["r"]))


def make_certificate(eq: Equation, kind: str, payload: dict, argv: Optional[Sequence[str]] = None) -> dict:
    from radoreg import __version__

    return {
        "schema": SCHEMA_ID,
        "kind": kind,
        "equation": ints(eq.coeffs),
        "payload": payload,
        "meta": {
            "tool": "radoreg",
            "version": __version__,
            "argv": list(argv or []),
            "timestamp": _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds"),
        },
    }


def validate_schema(cert: Any) -> None:
    try:
        jsonschema.validate(cert, SCHEMA)
    except jsonschema.ValidationError as exc:
        raise CertificateSchemaError(f"certificate does not match {SCHEMA_ID}: {exc.message}") from None


def verify_certificate(cert: dict, verify_cap: int = DEFAULT_VERIFY_CAP) -> bool:
    """True iff the embedded witnesses confirm the claim.

    Raises :class:`CertificateSchemaError` for malformed input, which is
    distinct from a well-formed certificate that fails to verify.
    """
    validate_schema(cert)
    try:
        eq = Equation(tuple(int(a) for a in cert["equation"]))
        return bool(_CHECKS[cert["kind"]](eq, cert["payload"], verify_cap))
    except (RadoError, ValueError, IndexError, KeyError, ZeroDivisionError):
        return False


def _check_regularity(eq, p, cap):
    if not p["regular"]:
        return p["subset"] is None and not rado_regular(eq)
    subset = [int(i) for i in p["subset"] or []]
    if not subset or len(set(subset)) != len(subset) or not all(1 <= i <= eq.n for i in subset):
        return False
    return sum(eq.coeffs[i - 1] for i in subset) == 0


def _check_ratios(eq, p, cap):
    return [Fraction(q) for q in p["ratios"]] == forbidden_ratios(eq)


def _index_table(mat) -> list:
    return [[None if v is None else str(v) for v in row] for row in mat.ratio_index]


def _check_matrix(eq, first_row, ratio_index):
    row = [Fraction(q) for q in first_row]
    mat = build_matrix(eq, row)
    if _index_table(mat) != ratio_index:
        # any l with S_l equal to the entry is acceptable
        ratios = forbidden_ratios(eq)
        if len(ratio_index) != mat.m:
            return None
        for i, j in mat.positions():
            l = ratio_index[i - 1][j - 1]
            if l is None or not 1 <= int(l) <= eq.n or ratios[int(l) - 1] != mat.entry(i, j):
                return None
    return mat


def _check_linkage(eq, p, cap):
    m, m_cap = int(p["m"]), int(p["m_cap"])
    if m != len(p["first_row"]) or m > m_cap:
        return False
    if m == 0:
        return p["ratio_index"] == []
    return _check_matrix(eq, p["first_row"], p["ratio_index"]) is not None


def _check_radius(eq, p, cap):
    r, limit = int(p["r"]), int(p["cap"])
    rows = [tuple(int(c) for c in row) for row in p["ineqs"]]
    witness = coloring_from(p["witness"]) if p["witness"] is not None else None
    if witness is not None and (witness.r != r or not verify_coloring(eq, witness, rows).valid):
        return False
    if p["outcome"] == "unknown":
        return p["R"] is None and witness is not None and witness.N == limit
    R = int(p["R"])
    if not 1 <= R <= limit:
        return False
    if R == 1:
        if witness is not None:
            return False
    elif witness is None or witness.N != R - 1:
        return False
    if R > cap:
        return False
    return search_coloring(eq, r, R, rows) is None


def _check_coloring(eq, p, cap):
    rows = [tuple(int(c) for c in row) for row in p["ineqs"]]
    if p["mode"] == "verify":
        col = coloring_from(p["coloring"])
        outcome = verify_coloring(eq, col, rows)
        if p.get("valid") is None or outcome.valid != p["valid"]:
            return False
        if outcome.valid:
            return p.get("counterexample") is None
        return ints(outcome.counterexample) == p.get("counterexample") and str(outcome.color) == p.get("color")
    r, N = int(p["r"]), int(p["N"])
    if p["coloring"] is None:
        return N <= cap and search_coloring(eq, r, N, rows) is None
    col = coloring_from(p["coloring"])
    return col.r == r and col.N == N and col.colors[0] == 1 and verify_coloring(eq, col, rows).valid


def _check_solution(eq, p, cap):
    rows = [tuple(int(c) for c in row) for row in p["ineqs"]]
    col = coloring_from(p["coloring"])
    if p["solution"] is None:
        return p["colors"] is None and verify_coloring(eq, col, rows).valid
    xs = tuple(int(x) for x in p["solution"])
    if not check_solution(eq, xs) or not satisfies_rows(xs, rows):
        return False
    if not all(x in col for x in xs):
        return False
    colors = [col(x) for x in xs]
    return len(set(colors)) == 1 and ints(colors) == p["colors"]


def _check_walk(eq, p, cap):
    mat = _check_matrix(eq, p["first_row"], p["ratio_index"])
    if mat is None:
        return False
    x = int(p["x"])
    if x < 1 or x % integrality_base(mat):
        return False
    values = walk_values(mat, x)
    if ints(values) != p["values"] or len(p["colors"]) != len(values):
        return False
    colors = dict(zip(values, (int(c) for c in p["colors"])))
    if len(set(colors.values())) > mat.m:
        return False
    u, v = (int(t) for t in p["pair"])
    i, j = (int(t) for t in p["position"])
    if not 1 <= i <= j <= mat.m or u not in colors or v not in colors:
        return False
    if Fraction(v, u) != mat.entry(i, j) or colors[u] != colors[v] or str(colors[u]) != p["color"]:
        return False
    l = int(p["l"])
    solution = tuple(int(t) for t in p["solution"])
    if forbidden_ratios(eq)[l - 1] != mat.entry(i, j) or solution != forbidden_ratio_solution(eq, l, u):
        return False
    return check_solution(eq, solution) and all(colors.get(t) == colors[u] for t in solution)


_CHECKS = {
    "regularity": _check_regularity,
    "ratios": _check_ratios,
    "linkage": _check_linkage,
    "radius": _check_radius,
    "coloring": _check_coloring,
    "solution": _check_solution,
    "walk": _check_walk,
}


def ratio_strs(qs) -> list[str]:
    return [fraction_str(q) for q in qs]
