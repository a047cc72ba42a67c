import random
from fractions import Fraction as F

import pytest

from oracles import all_linkage_rows
from radoreg.algebra import Equation, at_family, check_solution, forbidden_ratios, normalize
from radoreg.errors import (
    IncompleteColoringError,
    NotARatioError,
    NotIntegralError,
    NotLinkedError,
    PaletteError,
)
from radoreg.linkage import (
    build_matrix,
    integrality_base,
    linkage_check,
    linkage_search,
    max_linkage,
    theorem3_walk,
    walk_values,
)

AT3 = Equation((7, -6, -4))
AT3_RATIOS = {F(10, 7), F(1, 2), F(1, 4)}


def test_linkage_check():
    assert linkage_check(2, (F(1, 2), F(1, 4)), AT3_RATIOS)
    assert not linkage_check(2, (F(1, 2), F(10, 7)), AT3_RATIOS)
    assert linkage_check(1, (F(2),), {F(2)})


def test_build_matrix():
    mat = build_matrix(AT3, (F(1, 2), F(1, 4)))
    assert mat.entries == ((F(1, 2), F(1, 4)), (None, F(1, 2)))
    assert mat.ratio_index == ((2, 3), (None, 2))
    one = build_matrix(Equation((1, 1, -1)), (F(2),))
    assert one.entries == ((F(2),),) and one.ratio_index == ((3,),)


def test_build_matrix_errors():
    with pytest.raises(NotARatioError):
        build_matrix(AT3, (F(1, 2), F(1, 8)))
    with pytest.raises(NotLinkedError):
        build_matrix(AT3, (F(1, 4), F(1, 2)))


def test_matrix_is_function_of_first_row():
    mat = linkage_search(at_family(5), 4)
    rebuilt = build_matrix(mat.equation, mat.first_row)
    assert rebuilt == mat
    for i, j in mat.positions():
        assert forbidden_ratios(mat.equation)[mat.index(i, j) - 1] == mat.entry(i, j)
        if i > 1:
            assert mat.entry(1, i - 1) * mat.entry(i, j) == mat.entry(1, j)


def test_linkage_search_at3():
    assert linkage_search(AT3, 2).first_row == (F(1, 2), F(1, 4))
    assert linkage_search(AT3, 3) is None
    # oracle: only one valid ordered pair, no valid triple
    assert all_linkage_rows(AT3.coeffs, 2) == [(F(1, 2), F(1, 4))]
    assert all_linkage_rows(AT3.coeffs, 3) == []


@pytest.mark.parametrize("n", range(2, 7))
def test_linkage_search_at_family(n):
    mat = linkage_search(at_family(n), n - 1)
    assert mat.first_row == tuple(F(1, 2**j) for j in range(1, n))
    if n <= 5:
        assert min(all_linkage_rows(at_family(n).coeffs, n - 1)) == mat.first_row


@pytest.mark.parametrize(
    "coeffs, cap, expected",
    # expected values from all_linkage_rows enumeration
    [((7, -6, -4), 5, 2), ((1, 1, -1), 5, 1), ((1, -2), 5, 1), ((1, -1), 5, 0), ((1, 1, -2), 3, 0)],
)
def test_max_linkage(coeffs, cap, expected):
    assert max_linkage(Equation(coeffs), cap) == expected
    oracle = max((m for m in range(1, cap + 1) if all_linkage_rows(coeffs, m)), default=0)
    assert oracle == expected


def test_linkage_search_matches_oracle_on_random_equations():
    rng = random.Random(7)
    for _ in range(150):
        n = rng.randint(2, 4)
        raw = [rng.choice([a for a in range(-6, 7) if a]) for _ in range(n)]
        eq = normalize(raw)
        for m in (1, 2, 3):
            rows = all_linkage_rows(eq.coeffs, m)
            found = linkage_search(eq, m)
            assert (found.first_row if found else None) == (min(rows) if rows else None)
            # scale invariance
            scaled = linkage_search(normalize([3 * a for a in raw]), m)
            assert scaled == found


def test_monotone_prefixes():
    mat = linkage_search(at_family(6), 5)
    for m in range(1, 5):
        assert linkage_check(m, mat.first_row[:m], {q for q in forbidden_ratios(mat.equation) if q > 0})


def test_integrality_base():
    assert integrality_base(build_matrix(AT3, (F(1, 2), F(1, 4)))) == 4
    assert integrality_base(build_matrix(Equation((1, 1, -1)), (F(2),))) == 1
    assert integrality_base(build_matrix(at_family(4), (F(1, 2), F(1, 4), F(1, 8)))) == 8


def test_walk_single_step():
    eq = Equation((1, 1, -1))
    mat = build_matrix(eq, (F(2),))
    res = theorem3_walk(eq, mat, {1: 1, 2: 1}, 1)
    assert res.pair == (1, 2) and res.solution == (1, 1, 2)


def test_walk_examples():
    mat = build_matrix(AT3, (F(1, 2), F(1, 4)))
    res = theorem3_walk(AT3, mat, {4: 1, 2: 2, 1: 1}, 4)
    assert res.pair == (4, 1) and res.ratio_position == (1, 2) and res.ratio_index == 3
    assert res.solution == (4, 4, 1) and check_solution(AT3, res.solution)
    res = theorem3_walk(AT3, mat, {4: 1, 2: 1, 1: 2}, 4)
    assert res.pair == (4, 2) and res.ratio_index == 2 and res.solution == (4, 2, 4)
    res = theorem3_walk(AT3, mat, {4: 2, 2: 1, 1: 1}, 4)
    assert res.pair == (2, 1) and res.ratio_position == (2, 2)
    assert res.solution == (2, 1, 2)


def test_walk_errors():
    mat = build_matrix(AT3, (F(1, 2), F(1, 4)))
    with pytest.raises(IncompleteColoringError):
        theorem3_walk(AT3, mat, {4: 1, 2: 2}, 4)
    with pytest.raises(PaletteError):
        theorem3_walk(AT3, mat, {4: 1, 2: 2, 1: 3}, 4)
    with pytest.raises(NotIntegralError):
        theorem3_walk(AT3, mat, {6: 1, 3: 1}, 6)


def test_walk_values():
    assert walk_values(linkage_search(at_family(4), 3), 8) == (8, 4, 2, 1)
