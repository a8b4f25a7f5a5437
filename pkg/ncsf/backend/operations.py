"""
Request-level operations shared by the command line and the HTTP API.

Each function takes plain values (basis tags, composition text,
expression text) and returns expressions or reports, raising
``DomainError`` for anything malformed.  Rendering is left to the
caller.
"""

from __future__ import annotations

import logging
from typing import Any, Dict, List, Optional, Union

from . import nsym, qsym
from .compositions import Composition, parse_composition, parse_int_tuple
from .errors import DomainError
from .expressions import NSYM_BASES, QSYM_BASES, Basis, SparseExpression, add_term, parse_expression
from .nsym import NSymExpr
from .qsym import QSymExpr
from .sym_oracle import SymExpr, chi, schur_expansion, schur_jacobi_trudi, straighten
from .tableaux import (
    ImmaculateTableau,
    descent_composition,
    enumerate_immaculate,
    enumerate_standard,
    n_statistic,
)

logger = logging.getLogger(__name__)

_TYPES = {"NSym": NSymExpr, "QSym": QSymExpr, "Sym": SymExpr}


def as_basis(tag: Union[str, Basis]) -> Basis:
    return tag if isinstance(tag, Basis) else Basis.parse(tag)


def make_element(basis: Union[str, Basis], index: Union[str, Composition]) -> SparseExpression:
    """A single basis element; Sym bases need partitions, others any composition."""
    basis = as_basis(basis)
    key = parse_composition(index) if isinstance(index, str) else Composition(index)
    return _TYPES[basis.algebra].element(basis, key)


def read_expression(text: str, basis: Optional[Union[str, Basis]] = None) -> SparseExpression:
    """Read either full expression text (``2*S[3,1] - q*S[2,2]``) or a bare index with ``basis``."""
    if "[" in text:
        return parse_expression(text, as_basis(basis) if basis else None)
    if basis is None:
        raise DomainError(f"A bare index {text!r} needs a basis")
    return make_element(basis, text)


def _schur_to_h(f: SymExpr) -> SymExpr:
    total: Dict[Composition, Any] = {}
    for lam, c in f.terms.items():
        for key, value in schur_jacobi_trudi(lam).terms.items():
            add_term(total, key, c * value)
    return SymExpr(Basis.SYM_COMPLETE, total)


def _schur_to_dual_immaculate(f: SymExpr) -> QSymExpr:
    total: Dict[Composition, Any] = {}
    for lam, c in f.terms.items():
        for key, value in qsym.schur_to_dual_immaculate(lam).terms.items():
            add_term(total, key, c * value)
    return QSymExpr(Basis.DUAL_IMMACULATE, total)


def convert(f: SparseExpression, target: Union[str, Basis]) -> SparseExpression:
    """Re-express ``f`` in ``target``.

    Supported routes: within NSym, within QSym, NSym to ``h``/``s``
    through chi, ``h`` and ``s`` into each other, and ``s`` into any
    QSym basis.
    """
    target = as_basis(target)
    if f.basis is target:
        return f
    if isinstance(f, NSymExpr):
        if target in NSYM_BASES:
            return nsym.to_basis(f, target)
        if target is Basis.SYM_COMPLETE:
            return chi(f)
        if target is Basis.SCHUR:
            return schur_expansion(chi(f))
    elif isinstance(f, QSymExpr):
        if target in QSYM_BASES:
            return qsym.to_basis(f, target)
    elif isinstance(f, SymExpr):
        if target is Basis.SCHUR:
            return schur_expansion(f)
        if target is Basis.SYM_COMPLETE:
            return _schur_to_h(f)
        if target in QSYM_BASES:
            start = f if f.basis is Basis.SCHUR else schur_expansion(f)
            return qsym.to_basis(_schur_to_dual_immaculate(start), target)
    raise DomainError(f"No conversion from {f.basis.value} to {target.value}")


def multiply(basis: Union[str, Basis], alpha: str, beta: str,
             target: Optional[Union[str, Basis]] = None) -> NSymExpr:
    """basis[alpha] * basis[beta] in NSym, expressed in ``target`` (default ``basis``)."""
    basis = as_basis(basis)
    if basis not in NSYM_BASES:
        raise DomainError(f"Products are computed in NSym; {basis.value} is not an NSym basis")
    left = NSymExpr.element(basis, parse_composition(alpha))
    right = NSymExpr.element(basis, parse_composition(beta))
    return nsym.product(left, right, as_basis(target) if target else basis)


def pieri(basis: Union[str, Basis], alpha: str, s: int, elementary: bool = False) -> SparseExpression:
    """Right Pieri expansions: S[alpha]H[s], S[alpha]E[s], Qp[alpha]H[s] or F[s]Sd[alpha]."""
    basis = as_basis(basis)
    shape = parse_composition(alpha)
    if s < 0:
        raise DomainError(f"Pieri step needs s >= 0, got {s}")
    if basis is Basis.IMMACULATE:
        return nsym.pieri_elementary(shape, s) if elementary else nsym.pieri_immaculate(shape, s)
    if elementary:
        raise DomainError(f"The elementary Pieri rule is only available for S, not {basis.value}")
    if basis is Basis.QPRIME:
        return nsym.pieri_hl(shape, s)
    if basis is Basis.DUAL_IMMACULATE:
        return qsym.f_times_dual_immaculate(s, shape)
    raise DomainError(f"No Pieri rule for basis {basis.value}; use S, Qp or Sd")


def tableaux(alpha: str, beta: Optional[str] = None) -> List[Dict[str, Any]]:
    """Tableaux of shape ``alpha``: of content ``beta`` with n(T), or standard ones with descents."""
    shape = parse_composition(alpha)
    rows: List[Dict[str, Any]] = []
    if beta is None:
        for tableau in enumerate_standard(shape):
            rows.append({"rows": [list(r) for r in tableau.rows],
                         "descents": str(descent_composition(tableau))})
        return rows
    found: List[ImmaculateTableau] = enumerate_immaculate(shape, parse_composition(beta))
    for tableau in found:
        rows.append({"rows": [list(r) for r in tableau.rows], "n": n_statistic(tableau)})
    return rows


def straighten_text(alpha: str) -> SymExpr:
    """s_alpha for an integer tuple, straightened to a signed Schur element (possibly 0)."""
    sign, lam = straighten(parse_int_tuple(alpha))
    if lam is None:
        return SymExpr(Basis.SCHUR)
    return SymExpr.element(Basis.SCHUR, lam, sign)


def specialize(f: SparseExpression, q_at: Optional[int]) -> SparseExpression:
    return f if q_at is None else f.specialize(q_at)
