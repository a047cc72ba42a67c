import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_solutions, exhaustive_valid_colorings, naive_radius, solution_free
from radoreg.algebra import Equation, normalize
from radoreg.coloring import (
    Coloring,
    Radius,
    Unknown,
    enumerate_solutions,
    parity_coloring,
    permute_colors,
    rado_radius,
    search_coloring,
    verify_coloring,
)
from radoreg.errors import InvalidColoringError

SCHUR = Equation((1, 1, -1))


def test_enumerate_solutions():
    assert list(enumerate_solutions(SCHUR, 3)) == [(1, 1, 2), (1, 2, 3), (2, 1, 3)]
    assert list(enumerate_solutions(SCHUR, 3, [(1, -1, 0)])) == [(1, 2, 3), (2, 1, 3)]
    # 1 + 2 - 3 = 0, so [1, 2]^3 is not solution-free
    assert list(enumerate_solutions(Equation((1, 1, -3)), 2)) == [(1, 2, 1), (2, 1, 1)]
    assert list(enumerate_solutions(Equation((1, 1, -3)), 1)) == []


@pytest.mark.parametrize("coeffs", [(1, 1, -1), (1, 2, -3), (3, -1, -2, 1), (2, -5)])
def test_enumerate_matches_full_loop(coeffs):
    eq = Equation(coeffs)
    N = 9 if len(coeffs) == 4 else 15
    assert list(enumerate_solutions(eq, N)) == brute_solutions(coeffs, N)


def test_verify_coloring():
    out = verify_coloring(SCHUR, parity_coloring(10))
    assert out.counterexample == (2, 2, 4) and out.color == 2 and not out.valid
    assert verify_coloring(SCHUR, Coloring((1, 2, 2, 1), 2)).valid
    assert verify_coloring(SCHUR, Coloring((1, 1), 1), [(1, -1, 0)]).valid


def test_search_coloring():
    assert search_coloring(SCHUR, 2, 4).colors == (1, 2, 2, 1)
    assert search_coloring(SCHUR, 2, 5) is None
    assert search_coloring(SCHUR, 1, 2) is None


def test_rado_radius():
    res = rado_radius(SCHUR, 1, 10)
    assert isinstance(res, Radius) and res.R == 2 and res.witness.colors == (1,)
    res = rado_radius(SCHUR, 2, 10)
    assert res == Radius(5, Coloring((1, 2, 2, 1), 2))


def test_radius_of_non_regular_equation_is_still_finite_for_two_colors():
    # x + y = 3z is not regular, yet every 2-coloring of [1, 9] has a
    # monochromatic solution (checked over all 512 colorings)
    eq = Equation((1, 1, -3))
    assert exhaustive_valid_colorings(eq.coeffs, 2, 8)
    assert not exhaustive_valid_colorings(eq.coeffs, 2, 9)
    assert rado_radius(eq, 2, 50).R == 9
    # three colors escape up to the cap
    assert isinstance(rado_radius(eq, 3, 40), Unknown)


def test_unknown_reports_cap_witness():
    res = rado_radius(Equation((1, -2)), 2, 30)
    assert isinstance(res, Unknown) and res.cap == 30
    assert res.witness.N == 30 and verify_coloring(Equation((1, -2)), res.witness).valid


def test_degenerate_constant_solution_gives_radius_one():
    res = rado_radius(Equation((1, 1, -2)), 3, 10)
    assert res == Radius(1, None)


def test_three_color_schur_against_naive_search():
    res = rado_radius(SCHUR, 3, 20)
    assert res.R == naive_radius(SCHUR.coeffs, 3, 20) == 14


def test_permute_colors():
    col = Coloring((1, 2, 2, 1), 2)
    assert permute_colors(col, {1: 2, 2: 1}).colors == (2, 1, 1, 2)
    assert permute_colors(col, [1, 2]) == col
    col3 = Coloring((1, 2, 1), 2)
    assert permute_colors(permute_colors(col3, [2, 1]), [2, 1]) == col3
    with pytest.raises(InvalidColoringError):
        permute_colors(col, {1: 1, 2: 1})


def test_coloring_file_round_trip():
    text = "# a comment\n4 2\n1 2 2 1\n"
    col = Coloring.loads(text)
    assert col.colors == (1, 2, 2, 1) and col.r == 2
    assert Coloring.loads(col.dumps()) == col
    with pytest.raises(InvalidColoringError):
        Coloring.loads("3 2\n1 2\n")
    with pytest.raises(InvalidColoringError):
        Coloring.loads("2 2\n1 3\n")


SMALL_EQS = [(1, 1, -1), (1, 1, -2), (1, 2, -1), (1, -1, 2), (2, 1, -1), (1, 1, -3), (1, 2, -2), (3, -1, -1), (1, -2)]


@pytest.mark.parametrize("coeffs", SMALL_EQS)
@pytest.mark.parametrize("r", [1, 2, 3])
def test_search_complete_against_exhaustion(coeffs, r):
    eq = Equation(coeffs)
    for N in range(1, (12 if r < 3 else 9) + 1):
        valid = exhaustive_valid_colorings(coeffs, r, N)
        found = search_coloring(eq, r, N)
        assert (found is None) == (not valid)
        if found is not None:
            assert found.colors == valid[0]


def test_search_with_inequalities_against_exhaustion():
    rows = [(1, -1, 0)]
    for N in range(1, 11):
        valid = exhaustive_valid_colorings(SCHUR.coeffs, 2, N, rows)
        found = search_coloring(SCHUR, 2, N, rows)
        assert (found.colors if found else None) == (valid[0] if valid else None)


@settings(max_examples=150, deadline=None)
@given(
    st.lists(st.integers(-4, 4).filter(bool), min_size=2, max_size=4),
    st.integers(1, 3),
    st.integers(1, 12),
)
def test_search_soundness_and_pruning(raw, r, N):
    eq = normalize(raw)
    a = search_coloring(eq, r, N, prune=True)
    b = search_coloring(eq, r, N, prune=False)
    assert a == b
    if a is not None:
        assert verify_coloring(eq, a).valid
        assert solution_free(eq.coeffs, a.colors)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 2**20), st.integers(1, 3))
def test_verify_invariant_under_relabeling(seed, r):
    rng = random.Random(seed)
    N = rng.randint(1, 20)
    col = Coloring(tuple(rng.randint(1, r) for _ in range(N)), r)
    perm = list(range(1, r + 1))
    rng.shuffle(perm)
    eq = rng.choice([SCHUR, Equation((1, 1, -2)), Equation((1, 2, -3)), Equation((7, -6, -4))])
    assert verify_coloring(eq, col).valid == verify_coloring(eq, permute_colors(col, perm)).valid


def test_radius_boundary():
    for coeffs, r in [((1, 1, -1), 2), ((1, 1, -3), 2), ((1, 2, -1), 2), ((1, 1, -1), 3)]:
        eq = Equation(coeffs)
        res = rado_radius(eq, r, 30)
        assert search_coloring(eq, r, res.R - 1) == res.witness
        assert search_coloring(eq, r, res.R) is None
