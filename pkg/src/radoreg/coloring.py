"""Finite colorings of ``[1, N]`` and search for solution-free ones.

The search is a depth-first backtracker over positions ``1..N`` with
colors tried in increasing order.  A position is rejected as soon as it
completes a monochromatic solution whose largest entry it is.  Colors are
used in first-appearance order (position 1 gets color 1, a new color is
always the next unused one); every coloring can be relabeled into that
form without becoming lexicographically larger, so the least witness and
the "none exists" verdict are unaffected.

A single search tree serves every interval length at once: the first
node reached at depth ``N`` is the least solution-free coloring of
``[1, N]``.  :func:`rado_radius` uses this to answer all lengths up to a
cap in one pass.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Tuple, Union

from radoreg.algebra import Equation, forbidden_ratios
from radoreg.errors import InvalidColoringError

Row = Sequence[int]


@dataclass(frozen=True)
class Coloring:
    """Colors of ``1..N``; ``colors[i - 1]`` is the color of ``i``."""

    colors: Tuple[int, ...]
    r: int

    def __post_init__(self):
        colors = tuple(self.colors)
        if self.r < 1:
            raise InvalidColoringError(f"palette size must be positive, got {self.r}")
        bad = [c for c in colors if not 1 <= c <= self.r]
        if bad:
            raise InvalidColoringError(f"colors {bad} outside palette 1..{self.r}")
        object.__setattr__(self, "colors", colors)

    @property
    def N(self) -> int:
        return len(self.colors)

    def __call__(self, x: int) -> int:
        if not 1 <= x <= self.N:
            raise IndexError(f"{x} outside [1, {self.N}]")
        return self.colors[x - 1]

    def __contains__(self, x) -> bool:
        return isinstance(x, int) and 1 <= x <= self.N

    def as_mapping(self) -> dict[int, int]:
        return {i: c for i, c in enumerate(self.colors, start=1)}

    def dumps(self) -> str:
        return f"{self.N} {self.r}\n{' '.join(map(str, self.colors))}\n"

    @classmethod
    def loads(cls, text: str) -> "Coloring":
        lines = [ln.strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln and not ln.startswith("#")]
        if not lines:
            raise InvalidColoringError("empty coloring file")
        try:
            header = [int(t) for t in lines[0].split()]
            body = [int(t) for ln in lines[1:] for t in ln.split()]
        except ValueError as exc:
            raise InvalidColoringError(f"non-integer token in coloring file: {exc}") from None
        if len(header) != 2:
            raise InvalidColoringError("first line must be 'N r'")
        n, r = header
        if len(body) != n:
            raise InvalidColoringError(f"header says N = {n} but {len(body)} colors follow")
        return cls(tuple(body), r)

    @classmethod
    def load(cls, path: Union[str, Path]) -> "Coloring":
        return cls.loads(Path(path).read_text())


def parity_coloring(n: int) -> Coloring:
    """Odd numbers color 1, even numbers color 2."""
    return Coloring(tuple(1 if x % 2 else 2 for x in range(1, n + 1)), 2)


def satisfies_rows(xs: Sequence[int], rows: Iterable[Row]) -> bool:
    return all(sum(c * x for c, x in zip(row, xs)) != 0 for row in rows)


def enumerate_solutions(eq: Equation, N: int, ineqs: Iterable[Row] = ()) -> Iterator[Tuple[int, ...]]:
    """Solutions in ``[1, N]^n`` satisfying every inequality row, in lex order.

    The first ``n - 1`` unknowns are looped over; the last is solved exactly.
    """
    rows = [tuple(r) for r in ineqs]
    *head, last = eq.coeffs
    for prefix in itertools.product(range(1, N + 1), repeat=len(head)):
        s = sum(a * x for a, x in zip(head, prefix))
        if s % last:
            continue
        xn = -s // last
        if 1 <= xn <= N:
            xs = prefix + (xn,)
            if satisfies_rows(xs, rows):
                yield xs


@dataclass(frozen=True)
class VerifyOutcome:
    counterexample: Optional[Tuple[int, ...]] = None
    color: Optional[int] = None

    @property
    def valid(self) -> bool:
        return self.counterexample is None


def verify_coloring(eq: Equation, col: Coloring, ineqs: Iterable[Row] = ()) -> VerifyOutcome:
    """Valid, or the lexicographically first monochromatic solution."""
    for xs in enumerate_solutions(eq, col.N, ineqs):
        c = col(xs[0])
        if all(col(x) == c for x in xs):
            return VerifyOutcome(xs, c)
    return VerifyOutcome()


def permute_colors(col: Coloring, perm: Union[Mapping[int, int], Sequence[int]]) -> Coloring:
    """Relabel colors; ``perm`` maps old color to new (a sequence is 1-based)."""
    if not isinstance(perm, Mapping):
        perm = {i: p for i, p in enumerate(perm, start=1)}
    palette = set(range(1, col.r + 1))
    if set(perm) != palette or set(perm.values()) != palette:
        raise InvalidColoringError(f"{dict(perm)} is not a permutation of 1..{col.r}")
    return Coloring(tuple(perm[c] for c in col.colors), col.r)


@dataclass(frozen=True)
class Radius:
    """No solution-free coloring of ``[1, R]``; ``witness`` colors ``[1, R - 1]``."""

    R: int
    witness: Optional[Coloring]


@dataclass(frozen=True)
class Unknown:
    """A solution-free coloring exists for every length up to ``cap``."""

    cap: int
    witness: Coloring


def solution_sets_by_max(eq: Equation, cap: int, ineqs: Iterable[Row] = ()) -> list[list[Tuple[int, ...]]]:
    """For each ``p <= cap``: value sets of solutions with maximum ``p``, minus ``p``.

    Only the set of values matters for monochromaticity.  An empty tuple
    means ``(p, ..., p)`` is itself a solution.
    """
    by_max: list[set] = [set() for _ in range(cap + 1)]
    for xs in enumerate_solutions(eq, cap, ineqs):
        top = max(xs)
        by_max[top].add(tuple(sorted(set(xs) - {top})))
    return [sorted(s, key=lambda t: (len(t), t)) for s in by_max]


def ratio_partners(eq: Equation, cap: int) -> list[list[int]]:
    """``partners[y]``: values ``q > y`` with ``q / y`` or ``y / q`` a forbidden ratio."""
    ratios = {q for q in forbidden_ratios(eq) if q > 0 and q != 1}
    ratios |= {1 / q for q in ratios}
    partners: list[list[int]] = [[] for _ in range(cap + 1)]
    for y in range(1, cap + 1):
        for q in sorted(ratios):
            if q > 1:
                z = q * y
                if z.denominator == 1 and z <= cap:
                    partners[y].append(int(z))
    return [sorted(set(p)) for p in partners]


class _ColoringSearch:
    """Lexicographic DFS recording the first node reached at each depth.

    Once depth ``best`` has been reached, only subtrees able to reach
    ``best + 1`` are explored.  With pruning on, each assignment forbids its
    color at forbidden-ratio partners; if a partner ``q`` runs out of
    colors, the subtree cannot reach depth ``q`` and is bounded accordingly.
    """

    def __init__(self, eq: Equation, r: int, cap: int, ineqs: Iterable[Row] = (), prune: bool = True):
        rows = [tuple(row) for row in ineqs]
        self.r = r
        self.cap = cap
        self.others = solution_sets_by_max(eq, cap, rows)
        # the degenerate pair solution only exists when no inequality can exclude it
        self.partners = ratio_partners(eq, cap) if prune and not rows else None

    def run(self) -> dict[int, Tuple[int, ...]]:
        r, cap, others, partners = self.r, self.cap, self.others, self.partners
        col = [0] * (cap + 2)
        forb = [[0] * (r + 1) for _ in range(cap + 2)]
        used = [0] * (cap + 2)  # highest color used on 1..p
        bound = [cap] * (cap + 2)  # deepest level reachable below the node at p
        tried = [0] * (cap + 2)
        witnesses: dict[int, Tuple[int, ...]] = {}
        best = 0

        def conflicts(p: int, c: int) -> bool:
            for rest in others[p]:
                if all(col[v] == c for v in rest):
                    return True
            return False

        def release(p: int):
            c = col[p]
            if partners is not None:
                for q in partners[p]:
                    forb[q][c] -= 1
            col[p] = 0

        p = 1
        if cap == 0:
            return witnesses
        tried[1] = 0
        while p >= 1:
            if col[p]:
                release(p)
            parent_bound = bound[p - 1] if p > 1 else cap
            chosen = 0
            if parent_bound > best or p > best:
                top = min(r, used[p - 1] + 1)
                for c in range(tried[p] + 1, top + 1):
                    if partners is not None and forb[p][c]:
                        continue
                    if conflicts(p, c):
                        continue
                    chosen = c
                    break
            if not chosen:
                tried[p] = 0
                p -= 1
                continue
            tried[p] = chosen
            col[p] = chosen
            used[p] = max(used[p - 1], chosen)
            limit = parent_bound
            if partners is not None:
                for q in partners[p]:
                    row = forb[q]
                    row[chosen] += 1
                    if q - 1 < limit and all(row[k] for k in range(1, r + 1)):
                        limit = q - 1
            bound[p] = limit
            if p > best:
                best = p
                witnesses[p] = tuple(col[1 : p + 1])
                if best == cap:
                    return witnesses
            if limit > best and p < cap:
                p += 1
                tried[p] = 0
        return witnesses


def search_coloring(
    eq: Equation, r: int, N: int, ineqs: Iterable[Row] = (), prune: bool = True
) -> Optional[Coloring]:
    """Least solution-free r-coloring of ``[1, N]`` with color 1 at position 1."""
    if r < 1 or N < 1:
        raise ValueError("r and N must be positive")
    witnesses = _ColoringSearch(eq, r, N, ineqs, prune).run()
    found = witnesses.get(N)
    return Coloring(found, r) if found is not None else None


def rado_radius(
    eq: Equation, r: int, cap: int, ineqs: Iterable[Row] = (), prune: bool = True
) -> Union[Radius, Unknown]:
    """Least ``R <= cap`` with no solution-free r-coloring of ``[1, R]``."""
    if r < 1 or cap < 1:
        raise ValueError("r and cap must be positive")
    witnesses = _ColoringSearch(eq, r, cap, ineqs, prune).run()
    best = max(witnesses, default=0)
    if best == cap:
        return Unknown(cap, Coloring(witnesses[cap], r))
    witness = Coloring(witnesses[best], r) if best else None
    return Radius(best + 1, witness)
