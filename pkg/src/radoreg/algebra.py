"""Exact arithmetic on single linear homogeneous equations.

An equation ``a_1 x_1 + ... + a_n x_n = 0`` is stored as its primitive
integer coefficient vector with a positive first entry.  Rationals are
:class:`fractions.Fraction` throughout; nothing here touches floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Optional, Sequence, Tuple, Union

from radoreg.errors import (
    ArityError,
    InvalidEquationError,
    NonpositiveRatioError,
    NotIntegralError,
)

RationalLike = Union[int, Fraction, str]


@dataclass(frozen=True)
class Equation:
    """Canonical coefficient vector of a linear homogeneous equation.

    Construct through :func:`normalize` unless the coefficients are
    already primitive with a positive leading entry.
    """

    coeffs: Tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if len(coeffs) < 2:
            raise InvalidEquationError("an equation needs at least two coefficients")
        if any(not isinstance(a, int) or isinstance(a, bool) for a in coeffs):
            raise InvalidEquationError(f"coefficients must be integers: {coeffs}")
        if any(a == 0 for a in coeffs):
            raise InvalidEquationError(f"zero coefficient in {coeffs}")
        if reduce(math.gcd, coeffs) != 1:
            raise InvalidEquationError(f"coefficients {coeffs} are not primitive")
        if coeffs[0] < 0:
            raise InvalidEquationError(f"leading coefficient of {coeffs} must be positive")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def evaluate(self, xs: Sequence[int]) -> int:
        return sum(a * x for a, x in zip(self.coeffs, xs))

    def __str__(self):
        return ",".join(str(a) for a in self.coeffs)


def parse_coeffs(text: str) -> list[Fraction]:
    """Parse ``"-7/3, 2, 4/3"`` into a list of fractions."""
    cleaned = "".join(text.split())
    if not cleaned:
        raise InvalidEquationError("empty coefficient list")
    out = []
    for part in cleaned.split(","):
        try:
            out.append(Fraction(part))
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidEquationError(f"malformed coefficient {part!r}") from exc
    return out


def fraction_str(q: Fraction) -> str:
    """Exact text form, ``p/q`` or a bare integer."""
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def normalize(raw: Iterable[RationalLike]) -> Equation:
    """Scale a vector of nonzero rationals to its canonical primitive form.

    >>> normalize([2, 4, -6]).coeffs
    (1, 2, -3)
    >>> normalize(["-7/3", 2, "4/3"]).coeffs
    (7, -6, -4)
    """
    values = [Fraction(v) for v in raw]
    if len(values) < 2:
        raise InvalidEquationError("an equation needs at least two coefficients")
    if any(v == 0 for v in values):
        raise InvalidEquationError(f"zero coefficient in {[fraction_str(v) for v in values]}")
    denom = reduce(math.lcm, (v.denominator for v in values))
    ints = [int(v * denom) for v in values]
    g = reduce(math.gcd, ints)
    if ints[0] < 0:
        g = -g
    return Equation(tuple(a // g for a in ints))


def zero_sum_subset(eq: Equation) -> Optional[Tuple[int, ...]]:
    """Return 1-based positions of a nonempty zero-sum subset, or None.

    Sums reachable by nonempty subsets are tracked one coefficient at a
    time; the first subset reaching zero is reported.
    """
    reach: dict[int, Tuple[int, ...]] = {}
    for pos, a in enumerate(eq.coeffs, start=1):
        new = {a: (pos,)}
        for s, subset in reach.items():
            new.setdefault(s + a, subset + (pos,))
        if 0 in new:
            return new[0]
        for s, subset in new.items():
            reach.setdefault(s, subset)
    return None


def rado_regular(eq: Equation) -> bool:
    """Rado's criterion: some nonempty subset of coefficients sums to zero."""
    return zero_sum_subset(eq) is not None


def forbidden_ratios(eq: Equation) -> list[Fraction]:
    """The ratios ``S_l = -((sum a) - a_l) / a_l`` in index order.

    In a coloring with no monochromatic solution, ``y`` and ``S_l * y``
    always receive different colors.
    """
    total = sum(eq.coeffs)
    return [Fraction(-(total - a), a) for a in eq.coeffs]


def forbidden_ratio_solution(eq: Equation, l: int, y: int) -> Tuple[int, ...]:
    """Solution with every entry ``y`` except entry ``l`` (1-based) = ``S_l * y``."""
    if not 1 <= l <= eq.n:
        raise IndexError(f"ratio index {l} out of range 1..{eq.n}")
    ratio = forbidden_ratios(eq)[l - 1]
    if ratio <= 0:
        raise NonpositiveRatioError(f"S_{l} = {fraction_str(ratio)} is not positive")
    pivot = ratio * y
    if y < 1 or pivot.denominator != 1:
        raise NotIntegralError(f"S_{l} * {y} = {fraction_str(pivot)} is not a positive integer")
    return tuple(int(pivot) if i == l else y for i in range(1, eq.n + 1))


def check_solution(eq: Equation, xs: Sequence[int]) -> bool:
    if len(xs) != eq.n:
        raise ArityError(f"tuple of length {len(xs)} for an equation with {eq.n} unknowns")
    return eq.evaluate(xs) == 0


def at_family(n: int) -> Equation:
    """Equation whose degree of regularity is exactly ``n - 1``.

    Coefficients before clearing denominators are
    ``1 - sum(w_i)`` followed by ``w_1, ..., w_{n-1}`` with
    ``w_i = 2^i / (2^i - 1)``.
    """
    if n < 2:
        raise InvalidEquationError(f"family is defined for n >= 2, got {n}")
    weights = [Fraction(2**i, 2**i - 1) for i in range(1, n)]
    return normalize([1 - sum(weights), *weights])


def is_multiple_of(row: Sequence[int], eq: Equation) -> bool:
    """True iff ``row`` is a nonzero rational multiple of the coefficients."""
    if len(row) != eq.n:
        raise ArityError(f"row of length {len(row)} for an equation with {eq.n} unknowns")
    scale = Fraction(row[0], eq.coeffs[0])
    if scale == 0:
        return False
    return all(Fraction(c, a) == scale for c, a in zip(row, eq.coeffs))
