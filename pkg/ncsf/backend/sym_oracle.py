"""
An independent commutative engine used to cross-check the NSym side.

Symmetric functions are held as ``SymExpr`` values in the complete
homogeneous basis ``h`` (index multisets stored as partitions) or the
Schur basis ``s``.  The classical Jacobi-Trudi determinant is expanded
here by brute force over permutations with signs from sympy, so it
shares no code with the depth-first expansion in ``nsym``.

``chi`` is the forgetful map NSym -> Sym sending H[alpha] to the product
of the commuting h's.
"""

from __future__ import annotations

import itertools
import logging
from functools import lru_cache
from typing import Any, Dict, Iterable, Mapping, Optional, Tuple

from sympy.combinatorics import Permutation

from .compositions import Composition, IntTuple, compositions_of
from .errors import DomainError
from .expressions import Basis, SparseExpression, add_term
from .nsym import NSymExpr, h_terms, immaculate_jacobi_trudi
from .reports import CheckReport
from .triangular import solve_unitriangular

logger = logging.getLogger(__name__)


class SymExpr(SparseExpression):
    """A symmetric function in the ``h`` or ``s`` basis, indexed by partitions."""

    algebra = "Sym"

    __slots__ = ()

    def __init__(self, basis: Basis, terms: Optional[Mapping[Any, Any]] = None) -> None:
        if isinstance(basis, str) and not isinstance(basis, Basis):
            basis = Basis.parse(basis)
        if basis is Basis.SYM_COMPLETE and terms:
            merged: Dict[Composition, Any] = {}
            for key, value in terms.items():
                add_term(merged, Composition(sorted(key, reverse=True)), value)
            terms = merged
        super().__init__(basis, terms)

    def _validate_key(self, basis: Basis, key: Composition) -> None:
        if not key.is_partition():
            raise DomainError(f"{basis.value}[{key}] is not indexed by a partition")

    def __mul__(self, other: object) -> "SymExpr":
        if isinstance(other, SymExpr):
            return sym_product(self, other)
        return NotImplemented


def chi(f: NSymExpr) -> SymExpr:
    """Forget non-commutativity: H[alpha] goes to h[sorted alpha]."""
    return SymExpr(Basis.SYM_COMPLETE, h_terms(f))


@lru_cache(maxsize=None)
def _schur_jt(alpha: Tuple[int, ...]) -> Dict[Composition, int]:
    m = len(alpha)
    out: Dict[Composition, int] = {}
    for sigma in itertools.permutations(range(m)):
        entries = [alpha[i] + s - i for i, s in enumerate(sigma)]
        if any(e < 0 for e in entries):
            continue
        key = Composition(sorted((e for e in entries if e), reverse=True))
        add_term(out, key, Permutation(list(sigma)).signature() if m else 1)
    return out


def schur_jacobi_trudi(alpha: Iterable[int]) -> SymExpr:
    """det[h_{alpha_i + j - i}] expanded as a signed sum of h-monomials."""
    return SymExpr(Basis.SYM_COMPLETE, _schur_jt(tuple(IntTuple(alpha))))


def straighten(alpha: Iterable[int]) -> Tuple[int, Optional[Composition]]:
    """Rewrite s_alpha for an integer tuple as sign * s_lambda.

    Returns ``(0, None)`` when s_alpha vanishes, otherwise the sign and
    the partition lambda (trailing zeros removed).
    """
    values = tuple(IntTuple(alpha))
    shifted = [a - i for i, a in enumerate(values)]
    if len(set(shifted)) < len(shifted):
        return 0, None
    order = sorted(range(len(shifted)), key=lambda i: -shifted[i])
    parts = [shifted[j] + i for i, j in enumerate(order)]
    if parts and parts[-1] < 0:
        return 0, None
    sign = Permutation(order).signature() if order else 1
    return sign, Composition(p for p in parts if p)


def sym_product(a: SymExpr, b: SymExpr) -> SymExpr:
    """Commutative product of two ``h`` expressions."""
    if a.basis is not Basis.SYM_COMPLETE or b.basis is not Basis.SYM_COMPLETE:
        raise DomainError("sym_product works in the h basis")
    out: Dict[Composition, Any] = {}
    for x, c in a.terms.items():
        for y, d in b.terms.items():
            add_term(out, Composition(sorted(x + y, reverse=True)), c * d)
    return SymExpr(Basis.SYM_COMPLETE, out)


def _schur_column(lam: Composition) -> Dict[Composition, int]:
    return _schur_jt(tuple(lam))


def schur_expansion(f: SymExpr) -> SymExpr:
    """Expand an ``h`` expression in Schur functions by triangular elimination."""
    if f.basis is Basis.SCHUR:
        return f
    return SymExpr(Basis.SCHUR, solve_unitriangular(f.terms, _schur_column))


def chi_schur(f: NSymExpr) -> SymExpr:
    """chi(f) written in the Schur basis."""
    return schur_expansion(chi(f))


def verify_projection(n: int) -> CheckReport:
    """Check chi(S[alpha]) against the classical determinant for every alpha of size n."""
    if n < 1:
        raise DomainError(f"verify_projection needs n >= 1, got {n}")
    report = CheckReport("projection", {"n": n})
    for alpha in compositions_of(n):
        lhs = chi(immaculate_jacobi_trudi(alpha))
        rhs = schur_jacobi_trudi(alpha)
        report.record("chi", lhs == rhs, alpha, lhs, rhs)
    return report.finish()
