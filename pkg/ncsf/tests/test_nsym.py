"""
Tests for NSym: bases, products, operators and the Pieri rules.
"""

from __future__ import annotations

import itertools

import pandas as pd
import pytest

from ncsf.backend.coefficients import Q, QPoly, one_minus_q_power
from ncsf.backend.compositions import Composition, compositions_of, pieri_successors
from ncsf.backend.errors import DomainError
from ncsf.backend.expressions import NSYM_BASES, Basis
from ncsf.backend.nsym import (
    H,
    NSymExpr,
    S,
    bernstein_apply,
    elementary_recursion,
    h_to_immaculate_tableau,
    h_to_qprime_tableau,
    hl_creation_apply,
    hl_identities_check,
    hl_pieri_exponent,
    immaculate_jacobi_trudi,
    immaculate_vanishes,
    perp_e,
    perp_f,
    perp_h,
    perp_m,
    perp_on_immaculate_e,
    perp_on_immaculate_h,
    pieri_elementary,
    pieri_hl,
    pieri_immaculate,
    product,
    qprime_in_h,
    ribbon_to_immaculate_tableau,
    to_basis,
    transition_matrix,
)

SMALL = [alpha for n in range(1, 5) for alpha in compositions_of(n)]
UP_TO_SIX = [alpha for n in range(1, 7) for alpha in compositions_of(n)]


def Qp(*parts: int) -> NSymExpr:
    return NSymExpr.element(Basis.QPRIME, parts)


def R(*parts: int) -> NSymExpr:
    return NSymExpr.element(Basis.RIBBON, parts)


def in_s(f: NSymExpr) -> NSymExpr:
    return to_basis(f, Basis.IMMACULATE)


def test_jacobi_trudi() -> None:
    assert immaculate_jacobi_trudi([1, 3]) == H(1, 3) - H(2, 2)
    assert immaculate_jacobi_trudi([1, 1]) == H(1, 1) - H(2)
    assert immaculate_jacobi_trudi([2, 1]) == H(2, 1) - H(3)
    assert immaculate_jacobi_trudi([0, 1]) == NSymExpr(Basis.COMPLETE)
    assert immaculate_jacobi_trudi([]) == H()


def test_vanishing_rule() -> None:
    assert immaculate_vanishes([1, -1])
    assert immaculate_vanishes([-1])
    assert not immaculate_vanishes([0, 1])
    assert not immaculate_vanishes([2, 2])


def test_complete_to_immaculate_golden() -> None:
    assert to_basis(H(3, 1, 2, 3), Basis.IMMACULATE).coefficient([4, 2, 3]) == 5
    assert in_s(H(1, 1)) == S(1, 1) + S(2)


def test_ribbon_to_immaculate() -> None:
    expected = {(2, 2, 2): 1, (2, 3, 1): 1, (3, 1, 2): 1, (3, 2, 1): 2, (3, 3): 1, (4, 1, 1): 1, (4, 2): 1}
    assert in_s(R(2, 2, 2)) == NSymExpr(Basis.IMMACULATE, expected)


@pytest.mark.parametrize("n", range(1, 8))
def test_ribbons_expand_positively(n: int) -> None:
    for beta in compositions_of(n):
        expansion = in_s(R(*beta))
        assert all(c.has_nonnegative_coefficients() for _, c in expansion.items())


def test_qprime_in_immaculate_golden() -> None:
    assert in_s(Qp(4, 2)) == S(4, 2) + S(5, 1).scale(Q) + S(6).scale(Q ** 2)
    assert in_s(Qp(1, 1, 3)).coefficient([2, 2, 1]) == QPoly.parse("q^3+q^2-q")
    expected = {
        (3, 3, 1): 1, (3, 4): Q, (4, 2, 1): Q, (4, 3): Q ** 2 + Q,
        (5, 1, 1): Q ** 2, (5, 2): Q ** 3 + Q ** 2, (6, 1): Q ** 4 + Q ** 3, (7,): Q ** 5,
    }
    assert in_s(Qp(3, 3, 1)) == NSymExpr(Basis.IMMACULATE, expected)


@pytest.mark.parametrize("alpha", UP_TO_SIX, ids=str)
def test_qprime_specializes_to_immaculate_and_complete(alpha: Composition) -> None:
    lift = NSymExpr(Basis.COMPLETE, qprime_in_h(alpha))
    assert lift.specialize(0) == immaculate_jacobi_trudi(alpha)
    assert lift.specialize(1) == NSymExpr.element(Basis.COMPLETE, alpha)


@pytest.mark.parametrize("n", range(1, 8))
def test_conversions_invert_each_other(n: int) -> None:
    for alpha in compositions_of(n):
        for source, target in itertools.permutations(NSYM_BASES, 2):
            f = NSymExpr.element(source, alpha)
            assert to_basis(to_basis(f, target), source) == f


def matrix_product(a: pd.DataFrame, b: pd.DataFrame) -> list:
    size = len(a)
    return [[sum(a.iat[i, k] * b.iat[k, j] for k in range(size)) for j in range(size)] for i in range(size)]


@pytest.mark.parametrize("n", range(1, 7))
def test_transition_matrices_are_mutually_inverse(n: int) -> None:
    matrices = {(a, b): transition_matrix(n, a, b) for a, b in itertools.permutations(NSYM_BASES, 2)}
    for (source, target), forward in matrices.items():
        composed = matrix_product(forward, matrices[target, source])
        for i, row in enumerate(composed):
            assert row == [1 if i == j else 0 for j in range(len(row))], (source, target, i)


def test_to_basis_errors() -> None:
    with pytest.raises(DomainError):
        to_basis(H(1), Basis.MONOMIAL)
    with pytest.raises(DomainError):
        to_basis(H(1) + H(1, 1), Basis.IMMACULATE)
    assert to_basis(H(1), "S") == S(1)


def test_products() -> None:
    assert product(H(1), S(1, 3), Basis.IMMACULATE) == S(1, 1, 3) - S(2, 2, 1) - S(3, 2)
    assert product(S(1, 1), S(1, 3, 1, 3)).coefficient([1, 3, 2, 1, 3]) == -1
    assert H(1, 2) * H(3) == H(1, 2, 3)
    assert (S(1) * 2).coefficient([1]) == 2


def test_product_of_immaculates_with_positive_coefficients() -> None:
    f = product(S(1, 2), S(3, 1))
    assert len(f) == 18
    assert all(c.has_nonnegative_coefficients() for _, c in f.items())
    for index in ([2, 3, 2], [2, 4, 1], [3, 3, 1]):
        assert f.coefficient(index) == 2


def test_right_pieri_for_immaculates() -> None:
    result = product(S(2, 3), H(3))
    assert len(result) == 10
    assert result == pieri_immaculate(Composition([2, 3]), 3)
    assert set(result.support()) == set(pieri_successors(Composition([2, 3]), 3))


@pytest.mark.parametrize("alpha", [a for n in range(0, 4) for a in compositions_of(n)], ids=str)
@pytest.mark.parametrize("s", [1, 2])
def test_pieri_rules_agree_with_products(alpha: Composition, s: int) -> None:
    assert pieri_immaculate(alpha, s) == product(NSymExpr.element(Basis.IMMACULATE, alpha), H(s))
    assert pieri_hl(alpha, s) == product(NSymExpr.element(Basis.QPRIME, alpha), H(s))
    ones = NSymExpr.element(Basis.IMMACULATE, [1] * s)
    assert pieri_elementary(alpha, s) == product(NSymExpr.element(Basis.IMMACULATE, alpha), ones)


@pytest.mark.parametrize("total", range(1, 9))
def test_immaculate_pieri_matches_product(total: int) -> None:
    for s in range(1, total + 1):
        for alpha in compositions_of(total - s):
            expected = product(NSymExpr.element(Basis.IMMACULATE, alpha), H(s))
            assert pieri_immaculate(alpha, s) == expected, (alpha, s)


@pytest.mark.parametrize("total", range(1, 8))
def test_hall_littlewood_pieri_matches_product(total: int) -> None:
    for s in range(1, total + 1):
        for alpha in compositions_of(total - s):
            result = pieri_hl(alpha, s)
            assert result == product(NSymExpr.element(Basis.QPRIME, alpha), H(s)), (alpha, s)
            assert result.specialize(0).terms == pieri_immaculate(alpha, s).terms


def test_hall_littlewood_pieri_weights() -> None:
    result = pieri_hl(Composition([2, 3]), 3)
    assert result.coefficient([2, 3, 3]) == 1
    assert result.coefficient([3, 4, 1]) == one_minus_q_power(2)
    assert result.coefficient([2, 6]) == 1 - Q
    assert hl_pieri_exponent(Composition([2, 3]), Composition([3, 3, 2])) == 1
    with pytest.raises(DomainError):
        pieri_elementary(Composition([1]), -1)


def test_perp_operators_on_complete() -> None:
    h = H(2, 1, 1, 2)
    assert perp_e(2, h) == H(2, 2) + 2 * H(2, 1, 1) + 2 * H(1, 1, 2) + H(1, 1, 1, 1)
    assert perp_h(2, h) == H(1, 1, 1, 1) + 3 * H(1, 1, 2) + 3 * H(2, 1, 1) + H(2, 2)
    assert perp_m(Composition([1, 1]), H(1, 1)) == H()
    assert perp_m(Composition([2]), H(1, 1)) == NSymExpr(Basis.COMPLETE)
    assert in_s(perp_f(Composition([1]), S(2, 2))) == S(1, 2) + S(2, 1)
    with pytest.raises(DomainError):
        perp_e(-1, h)


@pytest.mark.parametrize("alpha", SMALL, ids=str)
def test_perp_actions_on_immaculates(alpha: Composition) -> None:
    f = NSymExpr.element(Basis.IMMACULATE, alpha)
    for r in range(0, alpha.size + 1):
        assert perp_on_immaculate_e(r, alpha) == in_s(perp_e(r, f))
        assert perp_on_immaculate_h(r, alpha) == in_s(perp_h(r, f))


def test_perp_on_immaculate_edge_cases() -> None:
    assert perp_on_immaculate_e(3, [2, 2]) == NSymExpr(Basis.IMMACULATE)
    assert perp_on_immaculate_h(5, [2, 2]) == NSymExpr(Basis.IMMACULATE)
    with pytest.raises(DomainError):
        perp_on_immaculate_h(-1, [1])


def test_creation_operators_build_the_bases() -> None:
    one = H()
    assert bernstein_apply(1, bernstein_apply(3, one)) == H(1, 3) - H(2, 2)
    lift = hl_creation_apply(4, hl_creation_apply(2, one))
    assert lift == NSymExpr(Basis.COMPLETE, qprime_in_h(Composition([4, 2])))


def test_elementary_recursion() -> None:
    assert elementary_recursion(0) == H()
    for n in range(1, 9):
        signed = {alpha: (-1) ** (n - len(alpha)) for alpha in compositions_of(n)}
        assert elementary_recursion(n) == immaculate_jacobi_trudi([1] * n)
        assert elementary_recursion(n) == NSymExpr(Basis.COMPLETE, signed)
    with pytest.raises(DomainError):
        elementary_recursion(-1)


def test_hall_littlewood_identities_hold() -> None:
    report = hl_identities_check(7)
    assert report.passed
    assert set(report.groups) == {
        "column", "hook", "bernstein-from-hl", "bernstein-product", "hl-product", "left-multiplication"}
    with pytest.raises(DomainError):
        hl_identities_check(0)


def test_complete_to_qprime_golden() -> None:
    expected = one_minus_q_power(1) + one_minus_q_power(2) + 3 * one_minus_q_power(3)
    assert to_basis(H(3, 1, 2, 3), Basis.QPRIME).coefficient([4, 2, 3]) == expected
    assert h_to_qprime_tableau(Composition([3, 1, 2, 3])).coefficient([4, 2, 3]) == expected


@pytest.mark.parametrize("beta", SMALL, ids=str)
def test_tableau_routes_match_conversions(beta: Composition) -> None:
    h = NSymExpr.element(Basis.COMPLETE, beta)
    assert h_to_qprime_tableau(beta) == to_basis(h, Basis.QPRIME)
    assert h_to_immaculate_tableau(beta) == to_basis(h, Basis.IMMACULATE)
    assert ribbon_to_immaculate_tableau(beta) == in_s(NSymExpr.element(Basis.RIBBON, beta))


def test_transition_matrix() -> None:
    matrix = transition_matrix(2, Basis.COMPLETE, Basis.IMMACULATE)
    assert list(matrix.index) == ["1,1", "2"]
    assert list(matrix.columns) == ["1,1", "2"]
    assert matrix.loc["1,1", "1,1"] == 1
    assert matrix.loc["1,1", "2"] == 1
    assert matrix.loc["2", "1,1"] == 0
    with pytest.raises(DomainError):
        transition_matrix(0, Basis.COMPLETE, Basis.IMMACULATE)
