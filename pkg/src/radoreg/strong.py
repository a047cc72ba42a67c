"""Monochromatic solutions that also avoid finitely many hyperplanes.

Given a coloring and a family of progressions ``x_i + t*d`` (``|t| <= H``)
that all share one color, with ``(x_1, ..., x_n)`` a solution, any integer
vector ``lam`` with ``sum a_i lam_i = 0`` and ``|lam_i| <= H`` moves the base
to another monochromatic solution ``x_i + lam_i d``.  Choosing ``lam`` off
the hyperplanes cut out by the inequality rows gives a solution of the
whole system.  :func:`strong_solve` chains these steps and falls back to
plain enumeration when no family fits in the colored interval.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Iterator, Optional, Sequence, Tuple, Union

from radoreg.algebra import Equation, check_solution, is_multiple_of
from radoreg.coloring import Coloring, enumerate_solutions, satisfies_rows
from radoreg.errors import ArityError, InfeasibleError, MultipleRowError, NonpositiveEntryError


@dataclass(frozen=True)
class InequalitySystem:
    """Rows ``A_j`` of the constraints ``A_j . x != 0``."""

    rows: Tuple[Tuple[int, ...], ...] = ()

    @classmethod
    def for_equation(cls, eq: Equation, rows: Iterable[Sequence[int]] = ()) -> "InequalitySystem":
        """Validate arity and reject rows proportional to ``eq``."""
        checked = []
        for row in rows:
            row = tuple(int(c) for c in row)
            if len(row) != eq.n:
                raise ArityError(f"inequality row {list(row)} has length {len(row)}, expected {eq.n}")
            if is_multiple_of(row, eq):
                raise MultipleRowError(row)
            checked.append(row)
        return cls(tuple(checked))

    @classmethod
    def distinct(cls, eq: Equation) -> "InequalitySystem":
        """``x_i != x_j`` for every pair ``i < j``."""
        return cls.for_equation(eq, distinct_rows(eq.n))

    def __iter__(self):
        return iter(self.rows)

    def __len__(self):
        return len(self.rows)

    @property
    def k(self) -> int:
        return len(self.rows)

    def satisfied_by(self, xs: Sequence[int]) -> bool:
        return satisfies_rows(xs, self.rows)

    def __add__(self, other: "InequalitySystem") -> "InequalitySystem":
        return InequalitySystem(self.rows + tuple(r for r in other.rows if r not in self.rows))


def distinct_rows(n: int) -> list[Tuple[int, ...]]:
    rows = []
    for i, j in itertools.combinations(range(n), 2):
        row = [0] * n
        row[i], row[j] = 1, -1
        rows.append(tuple(row))
    return rows


def _as_system(eq: Equation, ineqs) -> InequalitySystem:
    if ineqs is None:
        return InequalitySystem()
    if isinstance(ineqs, InequalitySystem):
        return InequalitySystem.for_equation(eq, ineqs.rows)
    return InequalitySystem.for_equation(eq, ineqs)


@dataclass(frozen=True)
class ProgressionFamily:
    base: Tuple[int, ...]
    step: int
    half_length: int

    def members(self) -> Iterator[int]:
        for x in self.base:
            for t in range(-self.half_length, self.half_length + 1):
                yield x + t * self.step


def family_is_valid(eq: Equation, col: Coloring, fam: ProgressionFamily) -> bool:
    """Base solves ``eq`` and every member lies in ``[1, N]`` with one color."""
    if fam.step < 1 or not check_solution(eq, fam.base):
        return False
    members = list(fam.members())
    if any(v not in col for v in members):
        return False
    return len({col(v) for v in members}) == 1


def progression_halflength(eq: Equation, k: int) -> int:
    """Bound ``H`` on every ``|lam_i|`` that :func:`find_lambda` may return.

    ``H = 2 * ceil((k + 1) * sum|a_i| / 2)``.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    total = (k + 1) * sum(abs(a) for a in eq.coeffs)
    return 2 * -(-total // 2)


def _lambda_ok(eq, rows, base, d, lam, bound) -> bool:
    if abs(lam[-1]) > bound:
        return False
    for row in rows:
        lhs = sum(c * t for c, t in zip(row, lam))
        rhs = Fraction(-sum(c * x for c, x in zip(row, base)), d)
        if lhs == rhs:
            return False
    return True


def _solve_last(eq: Equation, head: Sequence[int]) -> Optional[int]:
    s = sum(a * t for a, t in zip(eq.coeffs, head))
    last = eq.coeffs[-1]
    if s % last:
        return None
    return -s // last


def find_lambda(
    eq: Equation,
    ineqs: Union[InequalitySystem, Iterable[Sequence[int]], None],
    base: Sequence[int],
    d: int,
    bound: int,
) -> Tuple[int, ...]:
    """Integer shift vector keeping the equation and breaking every row.

    The first ``n - 1`` coordinates are drawn from ``{|a_n|, 2|a_n|, ...,
    (k+1)|a_n|}`` first; only if that grid is exhausted is the whole box
    ``[-bound, bound]^(n-1)`` scanned.  The last coordinate is always
    solved exactly.
    """
    system = _as_system(eq, ineqs)
    if not check_solution(eq, base):
        raise ValueError(f"base {tuple(base)} does not solve {eq}")
    if d < 1:
        raise ValueError("step must be positive")
    rows = system.rows
    k = system.k
    an = abs(eq.coeffs[-1])
    grid = [m * an for m in range(1, k + 2)]
    box = range(-bound, bound + 1)
    for choices in (grid, box):
        for head in itertools.product(choices, repeat=eq.n - 1):
            if any(abs(t) > bound for t in head):
                continue
            last = _solve_last(eq, head)
            if last is None:
                continue
            lam = head + (last,)
            if _lambda_ok(eq, rows, base, d, lam, bound):
                return lam
    raise InfeasibleError(f"no admissible shift within |lambda| <= {bound}")


def apply_lambda(base: Sequence[int], d: int, lam: Sequence[int]) -> Tuple[int, ...]:
    if len(base) != len(lam):
        raise ArityError("base and shift differ in length")
    out = tuple(x + t * d for x, t in zip(base, lam))
    if any(v < 1 for v in out):
        raise NonpositiveEntryError(f"shifted tuple {out} has a nonpositive entry")
    return out


def _solutions_in_box(eq: Equation, lo: int, hi: int) -> Iterator[Tuple[int, ...]]:
    *head, last = eq.coeffs
    for prefix in itertools.product(range(lo, hi + 1), repeat=len(head)):
        s = sum(a * x for a, x in zip(head, prefix))
        if s % last:
            continue
        xn = -s // last
        if lo <= xn <= hi:
            yield prefix + (xn,)


def lemma1_direct(eq: Equation, col: Coloring, C: int) -> Optional[ProgressionFamily]:
    """First monochromatic progression family with half-length ``C`` in ``[1, N]``.

    Steps ``d = 1, 2, ...`` are tried in order, and for each step the bases
    in lexicographic order.
    """
    if C < 0:
        raise ValueError("C must be non-negative")
    N = col.N
    steps = range(1, 2) if C == 0 else range(1, (N - 1) // (2 * C) + 1)
    for d in steps:
        lo, hi = 1 + C * d, N - C * d
        if lo > hi:
            break
        # color of the whole progression around v, or 0 when it is not one color
        around = {}
        for v in range(lo, hi + 1):
            c = col(v)
            around[v] = c if all(col(v + t * d) == c for t in range(-C, C + 1)) else 0
        for xs in _solutions_in_box(eq, lo, hi):
            c = around[xs[0]]
            if c and all(around[x] == c for x in xs):
                return ProgressionFamily(xs, d, C)
    return None


@dataclass(frozen=True)
class ProductColoring:
    """Class of ``alpha`` is ``(col(alpha), col(2 alpha), ..., col(R alpha))``."""

    R: int
    classes: Tuple[Tuple[int, ...], ...]

    @property
    def N(self) -> int:
        return len(self.classes)

    def __call__(self, alpha: int) -> Tuple[int, ...]:
        if not 1 <= alpha <= self.N:
            raise IndexError(f"{alpha} outside [1, {self.N}]")
        return self.classes[alpha - 1]

    def __contains__(self, alpha) -> bool:
        return 1 <= alpha <= self.N


def product_coloring(col: Coloring, R: int) -> ProductColoring:
    if R < 1:
        raise ValueError("window must be positive")
    size = col.N // R
    return ProductColoring(R, tuple(tuple(col(a * i) for i in range(1, R + 1)) for a in range(1, size + 1)))


def find_monochromatic_ap(classes: Union[Coloring, ProductColoring], length: int) -> Optional[Tuple[int, int]]:
    """Least ``(a, d)`` with ``a, a+d, ..., a+(length-1)d`` in one class."""
    if length < 1:
        raise ValueError("length must be positive")
    N = classes.N
    if N < 1:
        return None
    if length == 1:
        return (1, 1)
    for a in range(1, N + 1):
        c = classes(a)
        for d in range(1, (N - a) // (length - 1) + 1):
            if all(classes(a + t * d) == c for t in range(1, length)):
                return (a, d)
    return None


def lemma1_pipeline(eq: Equation, col: Coloring, C: int, R: int) -> Optional[ProgressionFamily]:
    """Progression family built the long way, for toy-sized inputs.

    ``R`` must be a length such that every coloring of ``[1, R]`` by the
    palette of ``col`` has a monochromatic solution.  A monochromatic
    progression of length ``2K + 1``, ``K = C * R^(n-1)``, in the window
    coloring yields the family; returns None when the interval is too short.
    """
    K = C * R ** (eq.n - 1)
    windows = product_coloring(col, R)
    ap = find_monochromatic_ap(windows, 2 * K + 1)
    if ap is None:
        return None
    start, d = ap
    a = start + K * d
    # dilate the window: alpha -> col(a * alpha) on [1, R]
    for ys in enumerate_solutions(eq, R):
        c = col(a * ys[0])
        if all(col(a * y) == c for y in ys):
            break
    else:
        raise ValueError(f"coloring of [1, {R}] dilated by {a} has no monochromatic solution; R is too small")
    step = d * reduce(math.lcm, ys)
    return ProgressionFamily(tuple(a * y for y in ys), step, C)


@dataclass(frozen=True)
class StrongSolution:
    solution: Tuple[int, ...]
    path: str  # "progression" or "fallback"
    family: Optional[ProgressionFamily] = None
    shift: Optional[Tuple[int, ...]] = None
    bound: Optional[int] = None


def strong_solve_detailed(eq: Equation, ineqs, col: Coloring) -> Optional[StrongSolution]:
    system = _as_system(eq, ineqs)
    H = progression_halflength(eq, system.k)
    fam = lemma1_direct(eq, col, H)
    if fam is not None:
        lam = find_lambda(eq, system, fam.base, fam.step, H)
        xs = apply_lambda(fam.base, fam.step, lam)
        return StrongSolution(xs, "progression", fam, lam, H)
    for xs in enumerate_solutions(eq, col.N, system.rows):
        c = col(xs[0])
        if all(col(x) == c for x in xs):
            return StrongSolution(xs, "fallback", bound=H)
    return None


def strong_solve(eq: Equation, ineqs, col: Coloring) -> Optional[Tuple[int, ...]]:
    """Monochromatic solution of ``eq`` satisfying every inequality row, or None."""
    found = strong_solve_detailed(eq, ineqs, col)
    return found.solution if found else None
