"""
Tests for QSym bases, the duality pairing and the Schur bridge.
"""

from __future__ import annotations

import itertools

import pytest

from ncsf.backend.coefficients import QPoly
from ncsf.backend.compositions import Composition, compositions_of, partitions_of
from ncsf.backend.errors import DomainError
from ncsf.backend.expressions import QSYM_BASES, Basis
from ncsf.backend.nsym import NSymExpr, product
from ncsf.backend.qsym import (
    QSymExpr,
    dual_immaculate_in_f,
    dual_immaculate_in_m,
    f_times_dual_immaculate,
    f_to_m,
    m_to_f,
    monomial_symmetric_in_m,
    p_basis_in_m,
    pairing,
    product_ledger,
    qsym_transition_matrix,
    schur_dual_immaculate_matrix,
    schur_in_m,
    schur_to_dual_immaculate,
    sstar_to_schur_projection,
    to_basis,
)
from ncsf.backend.sym_oracle import SymExpr

SMALL = [alpha for n in range(1, 4) for alpha in compositions_of(n)]


def M(*parts: int) -> QSymExpr:
    return QSymExpr.element(Basis.MONOMIAL, parts)


def F(*parts: int) -> QSymExpr:
    return QSymExpr.element(Basis.FUNDAMENTAL, parts)


def Sd(*parts: int) -> QSymExpr:
    return QSymExpr.element(Basis.DUAL_IMMACULATE, parts)


def test_fundamental_and_monomial() -> None:
    assert f_to_m(F(2, 1)) == M(2, 1) + M(1, 1, 1)
    assert m_to_f(M(2, 1)) == F(2, 1) - F(1, 1, 1)
    with pytest.raises(DomainError):
        f_to_m(M(1))
    with pytest.raises(DomainError):
        m_to_f(F(1))


@pytest.mark.parametrize("alpha", SMALL, ids=str)
def test_fundamental_monomial_inverse(alpha: Composition) -> None:
    assert m_to_f(f_to_m(F(*alpha))) == F(*alpha)


@pytest.mark.parametrize("n", range(1, 7))
def test_conversions_invert_each_other(n: int) -> None:
    for alpha in compositions_of(n):
        for source, target in itertools.permutations(QSYM_BASES, 2):
            g = QSymExpr.element(source, alpha)
            assert to_basis(to_basis(g, target), source) == g, (alpha, source, target)


def test_dual_immaculates_in_small_degrees() -> None:
    assert dual_immaculate_in_f(Composition([1, 2])) == F(1, 2)
    assert dual_immaculate_in_f(Composition([2, 1])) == F(2, 1) + F(1, 2)
    assert to_basis(Sd(2, 1), Basis.FUNDAMENTAL) == F(2, 1) + F(1, 2)


@pytest.mark.parametrize("alpha", [a for n in range(1, 5) for a in compositions_of(n)], ids=str)
def test_dual_immaculate_expansions_agree(alpha: Composition) -> None:
    assert f_to_m(dual_immaculate_in_f(alpha)) == dual_immaculate_in_m(alpha)
    assert to_basis(dual_immaculate_in_m(alpha), Basis.DUAL_IMMACULATE) == Sd(*alpha)


def test_schur_in_monomials() -> None:
    assert schur_in_m(Composition([2, 1])) == M(2, 1) + M(1, 2) + 2 * M(1, 1, 1)
    assert monomial_symmetric_in_m(Composition([2, 1])) == M(2, 1) + M(1, 2)
    with pytest.raises(DomainError):
        schur_in_m(Composition([1, 2]))


def test_schur_to_dual_immaculate_golden() -> None:
    assert schur_to_dual_immaculate(Composition([2, 2])) == Sd(2, 2) - Sd(1, 3)
    expected = Sd(2, 2, 2, 1) - Sd(1, 3, 2, 1) - Sd(2, 1, 3, 1) + Sd(1, 1, 4, 1)
    assert schur_to_dual_immaculate(Composition([2, 2, 2, 1])) == expected
    assert schur_to_dual_immaculate(Composition()) == QSymExpr.element(Basis.DUAL_IMMACULATE, ())


@pytest.mark.parametrize("lam", [p for n in range(1, 8) for p in partitions_of(n)], ids=str)
def test_schur_bridge_matches_tableau_count(lam: Composition) -> None:
    dual = schur_to_dual_immaculate(lam)
    assert to_basis(dual, Basis.MONOMIAL) == schur_in_m(lam)
    assert sstar_to_schur_projection(dual) == SymExpr.element(Basis.SCHUR, lam)


def test_projection_needs_dual_immaculates() -> None:
    with pytest.raises(DomainError):
        sstar_to_schur_projection(M(1))


def test_p_basis_specializations() -> None:
    for alpha in SMALL:
        p = p_basis_in_m(alpha)
        assert p.specialize(0) == dual_immaculate_in_m(alpha)
        assert p.specialize(1) == M(*alpha)


@pytest.mark.parametrize("n", range(1, 6))
def test_pairing_makes_the_bases_dual(n: int) -> None:
    for alpha in compositions_of(n):
        for beta in compositions_of(n):
            expected = 1 if alpha == beta else 0
            assert pairing(NSymExpr.element(Basis.COMPLETE, alpha), M(*beta)) == expected
            assert pairing(NSymExpr.element(Basis.IMMACULATE, alpha), Sd(*beta)) == expected
            assert pairing(NSymExpr.element(Basis.RIBBON, alpha), F(*beta)) == expected
            qp = NSymExpr.element(Basis.QPRIME, alpha)
            p = QSymExpr.element(Basis.DUAL_QPRIME, beta)
            assert pairing(qp, p) == expected


def test_pairing_is_zero_across_degrees() -> None:
    assert pairing(NSymExpr.element(Basis.COMPLETE, [1]), M(1, 1)) == QPoly()


def test_f_times_dual_immaculate_golden() -> None:
    expected = {
        (1, 3, 1, 2): -1, (1, 4, 2): -1, (2, 2, 1, 2): 1,
        (3, 1, 1, 2): 1, (3, 2, 2): 1, (4, 1, 2): 1,
    }
    assert f_times_dual_immaculate(2, Composition([2, 1, 2])) == QSymExpr(Basis.DUAL_IMMACULATE, expected)
    assert f_times_dual_immaculate(0, Composition([2, 1])) == Sd(2, 1)
    with pytest.raises(DomainError):
        f_times_dual_immaculate(-1, Composition([1]))


@pytest.mark.parametrize("beta,gamma", [([1], [2]), ([1, 2], [1]), ([2], [1, 1]), ([1, 1], [1, 3])])
def test_product_ledger_matches_product(beta: list, gamma: list) -> None:
    expected = product(NSymExpr.element(Basis.IMMACULATE, beta), NSymExpr.element(Basis.IMMACULATE, gamma))
    assert product_ledger(Composition(beta), Composition(gamma)) == expected


def test_matrices() -> None:
    matrix = qsym_transition_matrix(2, Basis.FUNDAMENTAL, Basis.MONOMIAL)
    assert matrix.loc["2", "1,1"] == 1
    assert matrix.loc["1,1", "2"] == 0
    schur = schur_dual_immaculate_matrix(4)
    assert list(schur.index) == ["1,1,1,1", "2,1,1", "2,2", "3,1", "4"]
    assert schur.loc["2,2", "1,3"] == -1
    assert schur.loc["2,2", "2,2"] == 1
    with pytest.raises(DomainError):
        schur_dual_immaculate_matrix(0)


def test_to_basis_rejects_nsym_targets() -> None:
    with pytest.raises(DomainError):
        to_basis(M(1), Basis.COMPLETE)
