"""Brute-force reference implementations used only by the tests.

Nothing here calls into the search code it is checking.
"""

import itertools
from fractions import Fraction


def subset_zero_sum(coeffs):
    return any(
        sum(sub) == 0
        for k in range(1, len(coeffs) + 1)
        for sub in itertools.combinations(coeffs, k)
    )


def ratios(coeffs):
    total = sum(coeffs)
    return [Fraction(-(total - a), a) for a in coeffs]


def all_linkage_rows(coeffs, m):
    """Every valid first row, by plain enumeration of m-tuples."""
    pos = sorted({q for q in ratios(coeffs) if q > 0})
    cand = [q for q in pos if q != 1]
    out = []
    for row in itertools.product(cand, repeat=m):
        ok = all(row[j] / row[i] in pos for i in range(m) for j in range(i + 1, m))
        if ok:
            out.append(row)
    return out


def brute_solutions(coeffs, N):
    """All solutions in [1, N]^n by a full n-fold loop."""
    return [
        xs
        for xs in itertools.product(range(1, N + 1), repeat=len(coeffs))
        if sum(a * x for a, x in zip(coeffs, xs)) == 0
    ]


def _ok(xs, rows):
    return all(sum(c * x for c, x in zip(row, xs)) != 0 for row in rows)


def solution_free(coeffs, colors, rows=(), sols=None):
    N = len(colors)
    sols = brute_solutions(coeffs, N) if sols is None else sols
    for xs in sols:
        if max(xs) <= N and _ok(xs, rows) and len({colors[x - 1] for x in xs}) == 1:
            return False
    return True


def exhaustive_valid_colorings(coeffs, r, N, rows=()):
    """All solution-free colorings of [1, N] with color 1 at position 1, lex order."""
    sols = brute_solutions(coeffs, N)
    return [
        (1,) + tail
        for tail in itertools.product(range(1, r + 1), repeat=N - 1)
        if solution_free(coeffs, (1,) + tail, rows, sols)
    ]


def naive_radius(coeffs, r, cap, rows=()):
    """Least N with no solution-free coloring, by a plain recursive search.

    Each new position is checked against every solution whose entries are
    all already colored.
    """
    sols = brute_solutions(coeffs, cap)
    sols = [xs for xs in sols if _ok(xs, rows)]
    by_top = {}
    for xs in sols:
        by_top.setdefault(max(xs), []).append(xs)

    def extendable(colors, N):
        p = len(colors)
        if p == N:
            return True
        for c in range(1, r + 1):
            colors.append(c)
            bad = any(len({colors[x - 1] for x in xs}) == 1 for xs in by_top.get(p + 1, ()))
            if not bad and extendable(colors, N):
                return True
            colors.pop()
        return False

    for N in range(1, cap + 1):
        if not extendable([], N):
            return N
    return None
