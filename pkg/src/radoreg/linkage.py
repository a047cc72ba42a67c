"""Linkage-property matrices over forbidden ratios.

An upper-triangular m x m matrix ``c`` has the linkage property when
``c[1][i] * c[i+1][j] == c[1][j]`` for every ``i < j``.  Rows below the
first are therefore quotients of first-row entries, so everything here is
parameterized by the first row alone.  If every entry is a positive
forbidden ratio of an equation, no m-coloring of the positive integers
avoids monochromatic solutions; :func:`theorem3_walk` makes that
pigeonhole argument concrete on a finite set of values.

Matrix positions and ratio indices are 1-based, matching the usual
``c_{i,j}`` and ``S_l`` notation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Collection, Mapping, Optional, Sequence, Tuple

from radoreg.algebra import Equation, forbidden_ratio_solution, forbidden_ratios, fraction_str
from radoreg.errors import (
    IncompleteColoringError,
    NotARatioError,
    NotIntegralError,
    NotLinkedError,
    PaletteError,
)


def implied_entry(first_row: Sequence[Fraction], i: int, j: int) -> Fraction:
    """Entry ``c_{i,j}`` (1-based, ``i <= j``) determined by the first row."""
    if i == 1:
        return Fraction(first_row[j - 1])
    return Fraction(first_row[j - 1]) / Fraction(first_row[i - 2])


def linkage_check(m: int, first_row: Sequence[Fraction], ratio_set: Collection[Fraction]) -> bool:
    if len(first_row) != m:
        return False
    ratios = {Fraction(q) for q in ratio_set}
    row = [Fraction(q) for q in first_row]
    if any(q <= 0 or q not in ratios for q in row):
        return False
    for i in range(1, m):
        for j in range(i + 1, m + 1):
            q = row[j - 1] / row[i - 1]
            if q <= 0 or q not in ratios:
                return False
    return True


@dataclass(frozen=True)
class LinkageMatrix:
    """Full linkage matrix with the ratio index behind every entry.

    ``entries[i][j]`` and ``ratio_index[i][j]`` use 0-based storage with
    ``None`` below the diagonal.
    """

    equation: Equation
    first_row: Tuple[Fraction, ...]
    entries: Tuple[Tuple[Optional[Fraction], ...], ...]
    ratio_index: Tuple[Tuple[Optional[int], ...], ...]

    @property
    def m(self) -> int:
        return len(self.first_row)

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i - 1][j - 1]

    def index(self, i: int, j: int) -> int:
        return self.ratio_index[i - 1][j - 1]

    def positions(self):
        for i in range(1, self.m + 1):
            for j in range(i, self.m + 1):
                yield i, j

    def __str__(self):
        width = max(len(fraction_str(self.entry(i, j))) for i, j in self.positions())
        lines = []
        for i in range(1, self.m + 1):
            cells = [
                fraction_str(self.entry(i, j)).rjust(width) if j >= i else "-".rjust(width)
                for j in range(1, self.m + 1)
            ]
            lines.append("  ".join(cells))
        return "\n".join(lines)


def positive_ratios(eq: Equation) -> list[Fraction]:
    return [q for q in forbidden_ratios(eq) if q > 0]


def build_matrix(eq: Equation, first_row: Sequence[Fraction]) -> LinkageMatrix:
    row = tuple(Fraction(q) for q in first_row)
    ratios = forbidden_ratios(eq)
    lookup: dict[Fraction, int] = {}
    for l, q in enumerate(ratios, start=1):
        if q > 0:
            lookup.setdefault(q, l)
    for q in row:
        if q not in lookup:
            raise NotARatioError(f"{fraction_str(q)} is not a positive forbidden ratio of {eq}")
    m = len(row)
    if m < 1:
        raise NotLinkedError("empty first row")
    if not linkage_check(m, row, lookup):
        raise NotLinkedError(
            f"row ({', '.join(fraction_str(q) for q in row)}) implies entries outside the ratio set"
        )
    entries = [[None] * m for _ in range(m)]
    index = [[None] * m for _ in range(m)]
    for i in range(1, m + 1):
        for j in range(i, m + 1):
            q = implied_entry(row, i, j)
            entries[i - 1][j - 1] = q
            index[i - 1][j - 1] = lookup[q]
    return LinkageMatrix(
        equation=eq,
        first_row=row,
        entries=tuple(map(tuple, entries)),
        ratio_index=tuple(map(tuple, index)),
    )


def linkage_search(eq: Equation, m: int) -> Optional[LinkageMatrix]:
    """Lexicographically least valid first row of length ``m``, as a matrix.

    Candidates are the distinct positive forbidden ratios other than 1,
    tried in increasing order with repetition.  A prefix of a valid row
    is valid, so branches are cut as soon as a prefix fails.
    """
    if m < 1:
        raise ValueError("m must be positive")
    ratio_set = set(positive_ratios(eq))
    candidates = sorted(q for q in ratio_set if q != 1)
    row: list[Fraction] = []

    def extend() -> bool:
        if len(row) == m:
            return True
        for q in candidates:
            if all(q / prev in ratio_set for prev in row):
                row.append(q)
                if extend():
                    return True
                row.pop()
        return False

    if not extend():
        return None
    return build_matrix(eq, row)


def max_linkage(eq: Equation, m_cap: int) -> int:
    """Largest ``m <= m_cap`` admitting a linkage matrix, 0 if none.

    This is a lower bound on the degree of regularity of ``eq``.
    """
    best = 0
    for m in range(1, m_cap + 1):
        if linkage_search(eq, m) is None:
            break
        best = m
    return best


def integrality_base(mat: LinkageMatrix) -> int:
    """Least ``x`` making every matrix entry times ``x`` an integer."""
    return reduce(math.lcm, (mat.entry(i, j).denominator for i, j in mat.positions()), 1)


@dataclass(frozen=True)
class WalkResult:
    pair: Tuple[int, int]
    ratio_position: Tuple[int, int]
    ratio_index: int
    solution: Tuple[int, ...]
    color: int
    values: Tuple[int, ...]


def walk_values(mat: LinkageMatrix, x: int) -> Tuple[int, ...]:
    """``x`` followed by ``c_{1,j} * x`` for ``j = 1..m``."""
    return (x,) + tuple(int(q * x) for q in mat.first_row)


def theorem3_walk(eq: Equation, mat: LinkageMatrix, coloring: Mapping[int, int], x: int) -> WalkResult:
    """Find the forced same-colored pair among ``x, c_{1,1} x, ..., c_{1,m} x``.

    Any two of these ``m + 1`` values differ by a factor that is a matrix
    entry, hence a forbidden ratio, so an m-coloring must repeat a color
    on some pair and that pair extends to a monochromatic solution.
    ``coloring`` maps each value to its color.
    """
    if x < 1 or x % integrality_base(mat):
        raise NotIntegralError(f"x = {x} is not a positive multiple of {integrality_base(mat)}")
    values = walk_values(mat, x)
    try:
        colors = [coloring[v] for v in values]
    except KeyError as exc:
        raise IncompleteColoringError(f"no color given for {exc.args[0]}") from None
    if len(set(colors)) > mat.m:
        raise PaletteError(f"{len(set(colors))} colors on {len(values)} walk values, at most {mat.m} allowed")

    for j in range(1, len(values)):
        for i in range(j):
            if colors[i] != colors[j]:
                continue
            # values[j] / values[i] is c_{1,j} when i == 0, else c_{i+1,j}
            position = (i + 1, j)
            l = mat.index(*position)
            solution = forbidden_ratio_solution(eq, l, values[i])
            return WalkResult(
                pair=(values[i], values[j]),
                ratio_position=position,
                ratio_index=l,
                solution=solution,
                color=colors[i],
                values=values,
            )
    raise AssertionError("pigeonhole failed; matrix does not have the linkage property")
