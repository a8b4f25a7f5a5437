"""
Tests for immaculate tableaux, their statistics and the hook formula.
"""

from __future__ import annotations

import pytest

from ncsf.backend.compositions import Composition, compositions_of, partitions_of
from ncsf.backend.errors import DomainError
from ncsf.backend.tableaux import (
    ImmaculateTableau,
    StandardImmaculateTableau,
    count_L,
    count_immaculate,
    count_standard_hook,
    descent_composition,
    descent_distribution,
    enumerate_immaculate,
    enumerate_standard,
    kostka_column,
    kostka_row,
    n_statistic,
    ssyt_count,
    standardize,
    tableau_from_text,
)


def C(*parts: int) -> Composition:
    return Composition(parts)


def test_the_five_tableaux_of_shape_3123_content_423() -> None:
    found = enumerate_immaculate(C(4, 2, 3), C(3, 1, 2, 3))
    assert len(found) == 5
    assert count_immaculate(C(4, 2, 3), C(3, 1, 2, 3)) == 5
    assert sorted(n_statistic(t) for t in found) == [1, 2, 3, 3, 3]
    for tableau in found:
        assert tableau.shape == C(4, 2, 3)
        assert tableau.content == C(3, 1, 2, 3)


def test_enumeration_order_is_stable() -> None:
    found = enumerate_standard(C(2, 1))
    assert [t.rows for t in found] == [((1, 2), (3,)), ((1, 3), (2,))]


def test_hook_formula_for_423() -> None:
    assert count_standard_hook(C(4, 2, 3)) == 224
    assert len(enumerate_standard(C(4, 2, 3))) == 224


@pytest.mark.parametrize("n", range(1, 9))
def test_hook_formula_matches_enumeration(n: int) -> None:
    for alpha in compositions_of(n):
        assert count_standard_hook(alpha) == count_immaculate(alpha, C(*([1] * n)))


def test_hook_formula_needs_a_shape() -> None:
    with pytest.raises(DomainError):
        count_standard_hook(C())


def test_validation() -> None:
    with pytest.raises(DomainError):
        ImmaculateTableau([[2, 1]])
    with pytest.raises(DomainError):
        ImmaculateTableau([[1, 2], [1]])
    with pytest.raises(DomainError):
        StandardImmaculateTableau([[1, 1], [2]])
    with pytest.raises(DomainError):
        enumerate_immaculate(C(2), C(1, 1, 1))
    gap = ImmaculateTableau([[1, 3]])
    assert gap.multiplicities() == (1, 0, 1)
    with pytest.raises(DomainError):
        gap.content


def test_text_form() -> None:
    tableau = tableau_from_text("1 1 2\n3 3", standard=False)
    assert tableau.shape == C(3, 2)
    assert tableau.content == C(2, 1, 2)
    assert str(tableau) == "1 1 2\n3 3"
    assert n_statistic(tableau) == 1


def test_standardize_and_descents() -> None:
    tableau = ImmaculateTableau([[1, 1, 2], [2, 3]])
    standard = standardize(tableau)
    assert standard.rows == ((1, 2, 4), (3, 5))
    assert descent_composition(standard) == C(2, 2, 1)


def test_standardizing_a_three_row_tableau() -> None:
    tableau = ImmaculateTableau([[1, 1, 2, 2, 3, 4], [2, 3, 3, 3, 3], [5, 5, 5, 5, 6, 6, 6]])
    assert tableau.shape == C(6, 5, 7)
    assert tableau.content == C(2, 3, 5, 1, 4, 3)
    standard = standardize(tableau)
    assert standard.rows == (
        (1, 2, 4, 5, 10, 11),
        (3, 6, 7, 8, 9),
        (12, 13, 14, 15, 16, 17, 18),
    )
    assert descent_composition(standard) == C(2, 3, 6, 7)


def test_descent_distribution_of_small_shapes() -> None:
    assert descent_distribution(C(1, 2)) == {C(1, 2): 1}
    assert descent_distribution(C(2, 1)) == {C(2, 1): 1, C(1, 2): 1}
    assert count_L(C(2, 1), C(1, 2)) == 1
    assert count_L(C(2, 1), C(3)) == 0


def test_kostka_numbers_of_degree_four() -> None:
    assert kostka_column(C(1, 1, 1, 1)) == {
        C(1, 1, 1, 1): 1, C(1, 1, 2): 1, C(1, 2, 1): 2, C(1, 3): 1,
        C(2, 1, 1): 3, C(2, 2): 3, C(3, 1): 3, C(4): 1}
    assert kostka_row(C(2, 2)) == {
        C(1, 1, 1, 1): 3, C(1, 1, 2): 2, C(1, 2, 1): 2, C(1, 3): 1, C(2, 1, 1): 1, C(2, 2): 1}


def test_kostka_is_unitriangular() -> None:
    for n in range(1, 6):
        for alpha in compositions_of(n):
            row = kostka_row(alpha)
            assert row[alpha] == 1
            assert all(beta <= alpha for beta in row)


def test_ssyt_counts() -> None:
    assert ssyt_count(C(2, 1), C(1, 1, 1)) == 2
    assert ssyt_count(C(2, 2), C(1, 2, 1)) == 1
    assert ssyt_count(C(3, 1), C(2, 2)) == 1
    assert ssyt_count(C(2, 1, 1), C(2, 2)) == 0
    for lam in partitions_of(4):
        assert ssyt_count(lam, lam) == 1
    with pytest.raises(DomainError):
        ssyt_count(C(1, 2), C(1, 2))
