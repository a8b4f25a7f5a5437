"""
Quasi-symmetric functions dual to the NSym bases.

``QSymExpr`` holds an element of QSym[q] in the monomial ``M``,
fundamental ``F``, dual immaculate ``Sd`` or dual Hall-Littlewood ``P``
basis.  ``M`` is the pivot: ``F`` is related to it by sums over
refinements, while ``Sd`` and ``P`` are given by tableau sums and
inverted by back-substitution (their monomial expansions are lower
unitriangular in lexicographic order).

There is no general QSym product here.  The only product needed,
``F_i * Sd[alpha]``, is computed through its adjoint, the F_i-perp
action on immaculate functions.
"""

from __future__ import annotations

import itertools
import logging
from functools import lru_cache
from typing import Any, Dict

import pandas as pd  # type: ignore
from sympy.combinatorics import Permutation

from .coefficients import QPoly, one_minus_q_power
from .compositions import Composition, compositions_of, partitions_of, refinements
from .errors import DomainError
from .expressions import QSYM_BASES, Basis, SparseExpression, add_term
from .nsym import NSymExpr, h_terms, perp_on_immaculate_h, product
from .sym_oracle import SymExpr
from .tableaux import descent_distribution, enumerate_all_of_shape, kostka_row, n_statistic, ssyt_count
from .triangular import solve_unitriangular

logger = logging.getLogger(__name__)

Terms = Dict[Composition, Any]


class QSymExpr(SparseExpression):
    """A graded element of QSym[q] in one of the M, F, Sd or P bases."""

    algebra = "QSym"

    __slots__ = ()


def _require_partition(lam: Composition) -> Composition:
    lam = Composition(lam)
    if not lam.is_partition():
        raise DomainError(f"{lam} is not a partition")
    return lam


# -- fundamental and monomial -------------------------------------------------

def f_to_m(f: QSymExpr) -> QSymExpr:
    """F[alpha] = sum of M[beta] over refinements beta of alpha."""
    if f.basis is not Basis.FUNDAMENTAL:
        raise DomainError(f"f_to_m expects an F expression, got {f.basis.value}")
    out: Terms = {}
    for alpha, c in f.terms.items():
        for beta in refinements(alpha):
            add_term(out, beta, c)
    return QSymExpr(Basis.MONOMIAL, out)


def m_to_f(g: QSymExpr) -> QSymExpr:
    """Moebius inversion: M[alpha] = sum (-1)^(l(beta)-l(alpha)) F[beta] over refinements."""
    if g.basis is not Basis.MONOMIAL:
        raise DomainError(f"m_to_f expects an M expression, got {g.basis.value}")
    out: Terms = {}
    for alpha, c in g.terms.items():
        for beta in refinements(alpha):
            add_term(out, beta, c if (len(beta) - len(alpha)) % 2 == 0 else -c)
    return QSymExpr(Basis.FUNDAMENTAL, out)


# -- tableau expansions --------------------------------------------------------

@lru_cache(maxsize=None)
def _dual_immaculate_column(alpha: Composition) -> Dict[Composition, int]:
    return kostka_row(alpha)


def dual_immaculate_in_m(alpha: Composition) -> QSymExpr:
    """Sd[alpha] = sum over beta of K(alpha, beta) M[beta]."""
    return QSymExpr(Basis.MONOMIAL, _dual_immaculate_column(Composition(alpha)))


def dual_immaculate_in_f(alpha: Composition) -> QSymExpr:
    """Sd[alpha] = sum over standard tableaux of F[descent composition]."""
    return QSymExpr(Basis.FUNDAMENTAL, descent_distribution(Composition(alpha)))


@lru_cache(maxsize=None)
def _p_column(alpha: Composition) -> Dict[Composition, QPoly]:
    out: Dict[Composition, QPoly] = {}
    for tableau in enumerate_all_of_shape(alpha):
        add_term(out, tableau.content, one_minus_q_power(n_statistic(tableau)))
    return out


def p_basis_in_m(alpha: Composition) -> QSymExpr:
    """P[alpha] = sum over tableaux T of shape alpha of (1-q)^n(T) M[content(T)]."""
    return QSymExpr(Basis.MONOMIAL, _p_column(Composition(alpha)))


def schur_in_m(lam: Composition) -> QSymExpr:
    """Classical monomial expansion of s_lambda by counting semistandard tableaux."""
    lam = _require_partition(lam)
    return QSymExpr(Basis.MONOMIAL, {alpha: ssyt_count(lam, alpha) for alpha in compositions_of(lam.size)})


def monomial_symmetric_in_m(lam: Composition) -> QSymExpr:
    """m_lambda as the sum of M[alpha] over the rearrangements alpha of lambda."""
    lam = _require_partition(lam)
    return QSymExpr(Basis.MONOMIAL, {Composition(p): 1 for p in set(itertools.permutations(lam))})


# -- conversions -------------------------------------------------------------

def _to_m_terms(g: QSymExpr) -> Terms:
    if g.basis is Basis.MONOMIAL:
        return g.terms
    if g.basis is Basis.FUNDAMENTAL:
        return f_to_m(g).terms
    column = _dual_immaculate_column if g.basis is Basis.DUAL_IMMACULATE else _p_column
    out: Terms = {}
    for alpha, c in g.terms.items():
        for beta, value in column(alpha).items():
            add_term(out, beta, c * value)
    return out


def to_basis(g: QSymExpr, target: Basis) -> QSymExpr:
    """Re-express ``g`` in ``target``, going through the M basis."""
    if isinstance(target, str) and not isinstance(target, Basis):
        target = Basis.parse(target)
    if target not in QSYM_BASES:
        raise DomainError(f"{target.value} is not a basis of QSym")
    if g.basis is target:
        return g
    terms = _to_m_terms(g)
    if target is Basis.MONOMIAL:
        return QSymExpr(target, terms)
    if target is Basis.FUNDAMENTAL:
        return m_to_f(QSymExpr(Basis.MONOMIAL, terms))
    column = _dual_immaculate_column if target is Basis.DUAL_IMMACULATE else _p_column
    return QSymExpr(target, solve_unitriangular(terms, column, descending=True))


def pairing(f: NSymExpr, g: QSymExpr) -> QPoly:
    """The duality pairing, with H[alpha] and M[beta] dual to each other."""
    left = h_terms(f)
    right = _to_m_terms(g)
    total = QPoly()
    for alpha, c in left.items():
        other = right.get(alpha)
        if other is not None:
            total = total + c * other
    return total


# -- Schur functions in the dual immaculate basis -------------------------------------

def schur_to_dual_immaculate(lam: Composition) -> QSymExpr:
    """s_lambda as a signed sum of Sd[lambda_{s_1}+1-s_1, ...] over permutations s.

    Only permutations giving positive entries contribute.
    """
    lam = _require_partition(lam)
    k = len(lam)
    if not k:
        return QSymExpr(Basis.DUAL_IMMACULATE, {Composition(): 1})
    out: Terms = {}
    for sigma in itertools.permutations(range(k)):
        entries = [lam[s] + i - s for i, s in enumerate(sigma)]
        if any(e <= 0 for e in entries):
            continue
        add_term(out, Composition(entries), Permutation(list(sigma)).signature())
    return QSymExpr(Basis.DUAL_IMMACULATE, out)


def sstar_to_schur_projection(g: QSymExpr) -> SymExpr:
    """Keep the partition-indexed terms of a dual immaculate expansion, read as Schur terms.

    Valid only when ``g`` is symmetric; that is not checked here.
    """
    if g.basis is not Basis.DUAL_IMMACULATE:
        raise DomainError(f"Projection expects an Sd expression, got {g.basis.value}")
    return SymExpr(Basis.SCHUR, {alpha: c for alpha, c in g.terms.items() if alpha.is_partition()})


def f_times_dual_immaculate(i: int, alpha: Composition) -> QSymExpr:
    """F_i * Sd[alpha], using <F_i-perp S[beta], Sd[alpha]> as the coefficient of Sd[beta]."""
    alpha = Composition(alpha)
    if i < 0:
        raise DomainError(f"F_i needs i >= 0, got {i}")
    terms: Terms = {}
    for beta in compositions_of(alpha.size + i):
        coefficient = perp_on_immaculate_h(i, beta).coefficient(alpha)
        if coefficient:
            terms[beta] = coefficient
    return QSymExpr(Basis.DUAL_IMMACULATE, terms)


def product_ledger(beta: Composition, gamma: Composition) -> NSymExpr:
    """S[beta] S[gamma] in the immaculate basis, read coefficient by coefficient as <S[beta]S[gamma], Sd[alpha]>."""
    beta, gamma = Composition(beta), Composition(gamma)
    prod = product(NSymExpr.element(Basis.IMMACULATE, beta),
                   NSymExpr.element(Basis.IMMACULATE, gamma), Basis.COMPLETE)
    terms: Terms = {}
    for alpha in compositions_of(beta.size + gamma.size):
        value = pairing(prod, dual_immaculate_in_m(alpha))
        if value:
            terms[alpha] = value
    return NSymExpr(Basis.IMMACULATE, terms)


# -- matrices ---------------------------------------------------------------

def qsym_transition_matrix(n: int, source: Basis, target: Basis) -> pd.DataFrame:
    """Coefficient of target[alpha] in source[beta] at row beta, column alpha."""
    if n < 1:
        raise DomainError(f"Transition matrices need n >= 1, got {n}")
    comps = compositions_of(n)
    labels = [str(c) for c in comps]
    rows = [[to_basis(QSymExpr.element(source, beta), target).coefficient(alpha) for alpha in comps]
            for beta in comps]
    return pd.DataFrame(rows, index=labels, columns=labels, dtype=object)


def schur_dual_immaculate_matrix(n: int) -> pd.DataFrame:
    """Rows are the partitions of ``n``, columns all compositions of ``n``, both in lex order."""
    if n < 1:
        raise DomainError(f"Transition matrices need n >= 1, got {n}")
    comps = compositions_of(n)
    rows = []
    for lam in partitions_of(n):
        expansion = schur_to_dual_immaculate(lam)
        rows.append([expansion.coefficient(alpha) for alpha in comps])
    return pd.DataFrame(rows, index=[str(p) for p in partitions_of(n)],
                        columns=[str(c) for c in comps], dtype=object)
