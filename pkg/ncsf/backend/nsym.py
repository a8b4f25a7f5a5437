"""
Non-commutative symmetric functions over Z[q].

``NSymExpr`` holds an element of NSym in one of four bases:

* ``H``  - complete homogeneous, the pivot basis; products concatenate
  indices and every conversion passes through it.
* ``R``  - ribbons, related to ``H`` by sums over coarsenings.
* ``S``  - immaculate functions, given in ``H`` by the non-commutative
  Jacobi-Trudi expansion.
* ``Qp`` - the Hall-Littlewood lift, built in ``H`` by the q-deformed
  creation operators.

The operators (Bernstein creation operators, their q-analogues and the
perp actions of F_{1^k}, F_k, M_alpha and F_alpha) act on the ``H``
basis.  Internally the module works on plain dictionaries from
``Composition`` to integer or ``QPoly`` coefficients and only wraps
results in ``NSymExpr`` at the public boundary.

Usage::

    from ncsf.backend.nsym import NSymExpr, to_basis
    from ncsf.backend.expressions import Basis

    h = NSymExpr.element(Basis.COMPLETE, [3, 1, 2, 3])
    print(to_basis(h, Basis.IMMACULATE).coefficient([4, 2, 3]))   # 5
"""

from __future__ import annotations

import itertools
import logging
from functools import lru_cache
from typing import Any, Dict, Iterable, Iterator, List, Optional, Tuple

import pandas as pd  # type: ignore

from .coefficients import QPoly, one_minus_q_power
from .compositions import (
    Composition,
    IntTuple,
    coarsenings,
    compositions_of,
    pieri_successors,
    refinements,
)
from .errors import DomainError
from .expressions import NSYM_BASES, Basis, SparseExpression, add_term
from .reports import CheckReport
from .tableaux import count_L, enumerate_immaculate, kostka_column, n_statistic
from .triangular import solve_unitriangular

logger = logging.getLogger(__name__)

Terms = Dict[Composition, Any]


class NSymExpr(SparseExpression):
    """A graded element of NSym[q] in one of the H, R, S or Qp bases."""

    algebra = "NSym"

    __slots__ = ()

    def __mul__(self, other: object) -> "NSymExpr":
        if isinstance(other, NSymExpr):
            return product(self, other)
        if isinstance(other, (int, QPoly)):
            return self.scale(other)
        return NotImplemented


def H(*parts: int) -> NSymExpr:
    """Shorthand for the complete homogeneous element ``H[parts]``."""
    return NSymExpr.element(Basis.COMPLETE, parts)


def S(*parts: int) -> NSymExpr:
    """Shorthand for the immaculate element ``S[parts]``."""
    return NSymExpr.element(Basis.IMMACULATE, parts)


def _require_basis(f: NSymExpr, basis: Basis) -> None:
    if f.basis is not basis:
        raise DomainError(f"Expected an expression in {basis.value}, got {f.basis.value}")


def _concat(prefix: Iterable[int], rest: Iterable[int]) -> Composition:
    """Concatenate, dropping zero parts."""
    return Composition(p for p in itertools.chain(prefix, rest) if p)


# -- products -------------------------------------------------------------

def _h_product(a: Terms, b: Terms) -> Terms:
    out: Terms = {}
    for alpha, x in a.items():
        for beta, y in b.items():
            add_term(out, alpha.concat(beta), x * y)
    return out


def h_product(a: NSymExpr, b: NSymExpr) -> NSymExpr:
    """Multiply two H-basis expressions (bilinear concatenation)."""
    _require_basis(a, Basis.COMPLETE)
    _require_basis(b, Basis.COMPLETE)
    return NSymExpr(Basis.COMPLETE, _h_product(a.terms, b.terms))


# -- Jacobi-Trudi ---------------------------------------------------------

def immaculate_vanishes(alpha: Iterable[int]) -> bool:
    """True when some entry lies below ``i - m`` or the entries sum below zero."""
    values = tuple(alpha)
    m = len(values)
    if sum(values) < 0:
        return True
    return any(a < i - m for i, a in enumerate(values, start=1))


@lru_cache(maxsize=None)
def _jt_terms(alpha: Tuple[int, ...]) -> Dict[Composition, int]:
    m = len(alpha)
    out: Dict[Composition, int] = {}
    if immaculate_vanishes(alpha):
        return out

    def expand(row: int, used: int, parts: Tuple[int, ...], sign: int) -> None:
        if row == m:
            add_term(out, Composition(parts), sign)
            return
        for col in range(m):
            if used >> col & 1:
                continue
            entry = alpha[row] + col - row
            if entry < 0:
                continue
            # used columns to the right of col are the new inversions
            flips = bin(used >> (col + 1)).count("1")
            expand(row + 1, used | (1 << col), parts + (entry,) if entry else parts,
                   -sign if flips & 1 else sign)

    expand(0, 0, (), 1)
    return out


def immaculate_jacobi_trudi(alpha: Iterable[int]) -> NSymExpr:
    """H-expansion of the immaculate function indexed by an integer tuple.

    Sum over permutations s of sign(s) H[alpha_1+s_1-1, ..., alpha_m+s_m-m],
    with H_0 = 1 and any negative index killing the term.
    """
    return NSymExpr(Basis.COMPLETE, _jt_terms(tuple(IntTuple(alpha))))


# -- perp operators on the H basis -------------------------------------------

@lru_cache(maxsize=None)
def _perp_e_terms(k: int, beta: Composition) -> Tuple[Tuple[Composition, int], ...]:
    if k < 0:
        raise DomainError(f"Perp degree must be non-negative, got {k}")
    out: Dict[Composition, int] = {}
    for rows in itertools.combinations(range(len(beta)), k):
        chosen = set(rows)
        add_term(out, _concat((), (b - 1 if i in chosen else b for i, b in enumerate(beta))), 1)
    return tuple(out.items())


def _bounded_removals(beta: Tuple[int, ...], k: int) -> Iterator[Tuple[int, ...]]:
    """Vectors ``gamma`` with 0 <= gamma_j <= beta_j and |beta| - |gamma| = k."""
    if not beta:
        if k == 0:
            yield ()
        return
    first, rest = beta[0], beta[1:]
    capacity = sum(rest)
    for taken in range(max(0, k - capacity), min(first, k) + 1):
        for tail in _bounded_removals(rest, k - taken):
            yield (first - taken,) + tail


@lru_cache(maxsize=None)
def _perp_h_terms(k: int, beta: Composition) -> Tuple[Tuple[Composition, int], ...]:
    if k < 0:
        raise DomainError(f"Perp degree must be non-negative, got {k}")
    out: Dict[Composition, int] = {}
    for gamma in _bounded_removals(tuple(beta), k):
        add_term(out, _concat((), gamma), 1)
    return tuple(out.items())


@lru_cache(maxsize=None)
def _perp_m_terms(alpha: Composition, beta: Composition) -> Tuple[Tuple[Composition, int], ...]:
    out: Dict[Composition, int] = {}

    def draw(j: int, k: int, rest: Tuple[int, ...]) -> None:
        if j == len(beta):
            if k == len(alpha):
                add_term(out, _concat((), rest), 1)
            return
        draw(j + 1, k, rest + (beta[j],))
        if k < len(alpha) and alpha[k] <= beta[j]:
            draw(j + 1, k + 1, rest + (beta[j] - alpha[k],))

    draw(0, 0, ())
    return tuple(out.items())


def _apply_termwise(f: Terms, table: Any, *args: Any) -> Terms:
    out: Terms = {}
    for beta, c in f.items():
        for gamma, mult in table(*args, beta):
            add_term(out, gamma, mult * c)
    return out


def _as_h(f: NSymExpr) -> Terms:
    return f.terms if f.basis is Basis.COMPLETE else _to_h_terms(f)


def perp_e(k: int, f: NSymExpr) -> NSymExpr:
    """F_{1^k}-perp: remove one box from each of k distinct rows."""
    return NSymExpr(Basis.COMPLETE, _apply_termwise(_as_h(f), _perp_e_terms, k))


def perp_h(k: int, f: NSymExpr) -> NSymExpr:
    """F_k-perp: remove k boxes with at most alpha_j from row j."""
    return NSymExpr(Basis.COMPLETE, _apply_termwise(_as_h(f), _perp_h_terms, k))


def perp_m(alpha: Composition, f: NSymExpr) -> NSymExpr:
    """M_alpha-perp, read off the coproduct with H_alpha on the left factor."""
    return NSymExpr(Basis.COMPLETE, _apply_termwise(_as_h(f), _perp_m_terms, Composition(alpha)))


def perp_f(alpha: Composition, f: NSymExpr) -> NSymExpr:
    """F_alpha-perp as the sum of M_beta-perp over refinements beta of alpha."""
    source = _as_h(f)
    out: Terms = {}
    for beta in refinements(Composition(alpha)):
        for key, value in _apply_termwise(source, _perp_m_terms, beta).items():
            add_term(out, key, value)
    return NSymExpr(Basis.COMPLETE, out)


# -- creation operators -------------------------------------------------------

def _bernstein(m: int, f: Terms) -> Terms:
    out: Terms = {}
    for beta, c in f.items():
        for i in range(len(beta) + 1):
            lead = m + i
            if lead < 0:
                continue
            sign = -1 if i & 1 else 1
            for gamma, mult in _perp_e_terms(i, beta):
                add_term(out, _concat((lead,), gamma), sign * mult * c)
    return out


def _hl_creation(m: int, f: Terms) -> Terms:
    out: Terms = {}
    degree = max((beta.size for beta in f), default=0)
    for i in range(degree + 1):
        removed = _apply_termwise(f, _perp_h_terms, i)
        if not removed:
            continue
        weight = QPoly.monomial(i)
        for key, value in _bernstein(m + i, removed).items():
            add_term(out, key, weight * value)
    return out


def bernstein_apply(m: int, f: NSymExpr) -> NSymExpr:
    """Apply the non-commutative Bernstein operator B_m = sum (-1)^i H_{m+i} F_{1^i}-perp."""
    return NSymExpr(Basis.COMPLETE, _bernstein(m, _as_h(f)))


def hl_creation_apply(m: int, f: NSymExpr) -> NSymExpr:
    """Apply the Hall-Littlewood creation operator sum q^i B_{m+i} F_i-perp."""
    return NSymExpr(Basis.COMPLETE, _hl_creation(m, _as_h(f)))


# -- basis columns -----------------------------------------------------------

def _immaculate_column(alpha: Composition) -> Dict[Composition, int]:
    return _jt_terms(tuple(alpha))


@lru_cache(maxsize=None)
def qprime_in_h(alpha: Composition) -> Dict[Composition, QPoly]:
    """H-expansion of the Hall-Littlewood lift ``Qp[alpha]``."""
    if not alpha:
        return {Composition(): QPoly(1)}
    return _hl_creation(alpha[0], qprime_in_h(Composition(alpha[1:])))


@lru_cache(maxsize=None)
def _ribbon_column(alpha: Composition) -> Dict[Composition, int]:
    return {beta: (-1) ** (len(alpha) - len(beta)) for beta in coarsenings(alpha)}


def _to_h_terms(f: NSymExpr) -> Terms:
    if f.basis is Basis.COMPLETE:
        return f.terms
    if f.basis is Basis.RIBBON:
        column = _ribbon_column
    elif f.basis is Basis.IMMACULATE:
        column = _immaculate_column
    else:
        column = qprime_in_h
    out: Terms = {}
    for alpha, c in f.terms.items():
        for beta, value in column(alpha).items():
            add_term(out, beta, c * value)
    return out


def h_terms(f: NSymExpr) -> Terms:
    """H-basis coefficients of ``f`` as a plain mapping."""
    return _to_h_terms(f)


def _from_h_terms(terms: Terms, target: Basis) -> NSymExpr:
    if target is Basis.COMPLETE:
        return NSymExpr(target, terms)
    if len({key.size for key in terms}) > 1:
        raise DomainError(f"Cannot convert a mixed-degree expression to {target.value}")
    if target is Basis.RIBBON:
        out: Terms = {}
        for alpha, c in terms.items():
            for beta in coarsenings(alpha):
                add_term(out, beta, c)
        return NSymExpr(target, out)
    if target is Basis.IMMACULATE:
        return NSymExpr(target, solve_unitriangular(terms, _immaculate_column))
    return NSymExpr(target, solve_unitriangular(terms, qprime_in_h))


def to_basis(f: NSymExpr, target: Basis) -> NSymExpr:
    """Re-express ``f`` in ``target``, going through the H basis.

    Raises:
        DomainError: if ``target`` is not an NSym basis, or ``f`` mixes
            degrees and ``target`` is not H.
    """
    if isinstance(target, str) and not isinstance(target, Basis):
        target = Basis.parse(target)
    if target not in NSYM_BASES:
        raise DomainError(f"{target.value} is not a basis of NSym")
    if f.basis is target:
        return f
    return _from_h_terms(_to_h_terms(f), target)


def product(a: NSymExpr, b: NSymExpr, target: Optional[Basis] = None) -> NSymExpr:
    """Product of two NSym expressions in any bases, expressed in ``target`` (default: basis of ``a``)."""
    result = _h_product(_to_h_terms(a), _to_h_terms(b))
    return _from_h_terms(result, target or a.basis)


# -- Pieri rules -----------------------------------------------------------

def pieri_immaculate(alpha: Composition, s: int) -> NSymExpr:
    """Right Pieri rule: S[alpha] H[s] is the sum of S[beta] over alpha contained in beta by an s-strip."""
    alpha = Composition(alpha)
    return NSymExpr(Basis.IMMACULATE, {beta: 1 for beta in pieri_successors(alpha, s)})


def pieri_elementary(alpha: Composition, s: int) -> NSymExpr:
    """S[alpha] S[1^s]: bump a set of rows by one and append ones."""
    alpha = Composition(alpha)
    if s < 0:
        raise DomainError(f"Pieri step needs s >= 0, got {s}")
    terms: Terms = {}
    for k in range(min(s, len(alpha)) + 1):
        for rows in itertools.combinations(range(len(alpha)), k):
            chosen = set(rows)
            parts = [a + 1 if i in chosen else a for i, a in enumerate(alpha)]
            terms[Composition(parts + [1] * (s - k))] = 1
    return NSymExpr(Basis.IMMACULATE, terms)


def hl_pieri_exponent(alpha: Composition, beta: Composition) -> int:
    """Number of rows of ``alpha`` strictly shorter than the same row of ``beta``."""
    return sum(1 for a, b in zip(alpha, beta) if a < b)


def pieri_hl(alpha: Composition, s: int) -> NSymExpr:
    """Qp[alpha] H[s] = sum over alpha in beta (s-strip) of (1-q)^n(alpha,beta) Qp[beta]."""
    alpha = Composition(alpha)
    return NSymExpr(Basis.QPRIME, {
        beta: one_minus_q_power(hl_pieri_exponent(alpha, beta))
        for beta in pieri_successors(alpha, s)
    })


# -- perp actions on immaculate functions -----------------------------------------

def _normalize_tuples(tuples: Iterable[Tuple[int, ...]]) -> NSymExpr:
    total: Terms = {}
    for beta in tuples:
        for key, value in _jt_terms(beta).items():
            add_term(total, key, value)
    degrees = {key.size for key in total}
    if not total:
        return NSymExpr(Basis.IMMACULATE)
    if len(degrees) > 1:
        raise DomainError("Perp action produced mixed degrees")
    return NSymExpr(Basis.IMMACULATE, solve_unitriangular(total, _immaculate_column))


def perp_on_immaculate_e(r: int, alpha: Iterable[int]) -> NSymExpr:
    """F_{1^r}-perp of S[alpha]: lower r distinct entries by one."""
    values = tuple(IntTuple(alpha))
    if r < 0:
        raise DomainError(f"Perp degree must be non-negative, got {r}")
    m = len(values)
    if r > m:
        return NSymExpr(Basis.IMMACULATE)
    return _normalize_tuples(
        tuple(a - 1 if i in rows else a for i, a in enumerate(values))
        for rows in (set(c) for c in itertools.combinations(range(m), r))
    )


def _bounded_tuples(low: List[int], high: List[int], total: int) -> Iterator[Tuple[int, ...]]:
    if not low:
        if total == 0:
            yield ()
        return
    rest_low, rest_high = sum(low[1:]), sum(high[1:])
    for first in range(max(low[0], total - rest_high), min(high[0], total - rest_low) + 1):
        for tail in _bounded_tuples(low[1:], high[1:], total - first):
            yield (first,) + tail


def perp_on_immaculate_h(r: int, alpha: Iterable[int]) -> NSymExpr:
    """F_r-perp of S[alpha]: all beta with i - m <= beta_i <= alpha_i and |beta| = |alpha| - r."""
    values = tuple(IntTuple(alpha))
    if r < 0:
        raise DomainError(f"Perp degree must be non-negative, got {r}")
    m = len(values)
    target = sum(values) - r
    if target < 0:
        return NSymExpr(Basis.IMMACULATE)
    low = [i - m for i in range(1, m + 1)]
    high = list(values)
    if any(lo > hi for lo, hi in zip(low, high)):
        return NSymExpr(Basis.IMMACULATE)
    return _normalize_tuples(_bounded_tuples(low, high, target))


# -- matrices and tableau routes ---------------------------------------------------

def transition_matrix(n: int, source: Basis, target: Basis) -> pd.DataFrame:
    """Coefficient of target[alpha] in source[beta] at row beta, column alpha.

    Both axes run over the compositions of ``n`` in lexicographic order and
    are labelled by their comma-separated text.
    """
    if n < 1:
        raise DomainError(f"Transition matrices need n >= 1, got {n}")
    comps = compositions_of(n)
    labels = [str(c) for c in comps]
    rows = []
    for beta in comps:
        expr = to_basis(NSymExpr.element(source, beta), target)
        rows.append([expr.coefficient(alpha) for alpha in comps])
    logger.debug(f"Built M({source.value},{target.value}) for n={n}")
    return pd.DataFrame(rows, index=labels, columns=labels, dtype=object)


def h_to_qprime_tableau(beta: Composition) -> NSymExpr:
    """H[beta] as the sum over immaculate tableaux T of content beta of (1-q)^n(T) Qp[shape(T)]."""
    beta = Composition(beta)
    terms: Terms = {}
    for alpha in compositions_of(beta.size):
        for tableau in enumerate_immaculate(alpha, beta):
            add_term(terms, alpha, one_minus_q_power(n_statistic(tableau)))
    return NSymExpr(Basis.QPRIME, terms)


def h_to_immaculate_tableau(beta: Composition) -> NSymExpr:
    """H[beta] as the sum of K(alpha, beta) S[alpha]."""
    return NSymExpr(Basis.IMMACULATE, kostka_column(Composition(beta)))


def ribbon_to_immaculate_tableau(beta: Composition) -> NSymExpr:
    """R[beta] as the sum of L(alpha, beta) S[alpha]."""
    beta = Composition(beta)
    terms = {alpha: count_L(alpha, beta) for alpha in compositions_of(beta.size)}
    return NSymExpr(Basis.IMMACULATE, terms)


def elementary_recursion(n: int) -> NSymExpr:
    """E_n from E_k = sum_{i=1..k} (-1)^(i-1) H_i E_{k-i}, in the H basis."""
    if n < 0:
        raise DomainError(f"E_n needs n >= 0, got {n}")
    levels: List[Terms] = [{Composition(): 1}]
    for k in range(1, n + 1):
        level: Terms = {}
        for i in range(1, k + 1):
            sign = 1 if i & 1 else -1
            for key, value in levels[k - i].items():
                add_term(level, Composition((i,)).concat(key), sign * value)
        levels.append(level)
    return NSymExpr(Basis.COMPLETE, levels[n])


# -- identity suite ------------------------------------------------------------

def _qprime_sum(n: int, weight: Any) -> Terms:
    total: Terms = {}
    for alpha in compositions_of(n):
        w = weight(alpha)
        if w is None:
            continue
        for key, value in qprime_in_h(alpha).items():
            add_term(total, key, w * value)
    return total


def _minus_q_power(k: int) -> QPoly:
    return QPoly.monomial(k, -1 if k & 1 else 1)


def _compare(report: CheckReport, group: str, index: str, lhs: Terms, rhs: Terms) -> None:
    left = NSymExpr(Basis.COMPLETE, lhs)
    right = NSymExpr(Basis.COMPLETE, rhs)
    report.record(group, left == right, index, left, right)


def hl_identities_check(n: int) -> CheckReport:
    """Verify the Hall-Littlewood and Bernstein identities through degree ``n``.

    Groups checked:

    * ``S[1^m]`` and ``S[k,1^(m-k)]`` as signed sums of ``Qp`` elements;
    * B_m = sum (-q)^i Bt_{m+i} F_{1^i}-perp on every H[beta];
    * the product rules for B_m(f) H_s and Bt_m(f H_s);
    * left multiplication H_m = sum B_{m+i} F_i-perp.

    Every identity is compared exactly in the H basis, where both sides
    are computed by different routines.
    """
    if n < 1:
        raise DomainError(f"hl_identities_check needs n >= 1, got {n}")
    report = CheckReport("hl-identities", {"n": n})

    for m in range(1, n + 1):
        rhs = _qprime_sum(m, lambda a, m=m: _minus_q_power(m - len(a)))
        _compare(report, "column", f"m={m}", _jt_terms((1,) * m), rhs)
        for k in range(1, m + 1):
            rhs = _qprime_sum(
                m, lambda a, m=m, k=k: _minus_q_power(m - k + 1 - len(a)) if a[0] >= k else None)
            _compare(report, "hook", f"k={k}, m={m}", _jt_terms((k,) + (1,) * (m - k)), rhs)

    for size in range(n):
        for beta in compositions_of(size):
            f = {beta: 1}
            for m in range(-1, n - size + 1):
                lhs = _bernstein(m, f)
                rhs: Terms = {}
                for i in range(len(beta) + 1):
                    removed = _apply_termwise(f, _perp_e_terms, i)
                    for key, value in _hl_creation(m + i, removed).items():
                        add_term(rhs, key, _minus_q_power(i) * value)
                _compare(report, "bernstein-from-hl", f"m={m}, beta={beta}", lhs, rhs)

    for size in range(n):
        for beta in compositions_of(size):
            f = {beta: 1}
            for s in range(1, n - size + 1):
                hs = {Composition((s,)): 1}
                for m in range(0, n - size - s + 1):
                    lhs = _h_product(_bernstein(m, f), hs)
                    rhs = dict(_bernstein(m, _h_product(f, hs)))
                    for key, value in _h_product(_bernstein(m + 1, f), _h_tail(s - 1)).items():
                        add_term(rhs, key, value)
                    _compare(report, "bernstein-product", f"m={m}, s={s}, beta={beta}", lhs, rhs)

                    lhs = _hl_creation(m, _h_product(f, hs))
                    rhs = {}
                    for k in range(s + 1):
                        for key, value in _h_product(_hl_creation(m + k, f), _h_tail(s - k)).items():
                            add_term(rhs, key, QPoly.monomial(k) * value)
                    for k in range(s):
                        for key, value in _h_product(_hl_creation(m + k + 1, f), _h_tail(s - k - 1)).items():
                            add_term(rhs, key, QPoly.monomial(k, -1) * value)
                    _compare(report, "hl-product", f"m={m}, s={s}, beta={beta}", lhs, rhs)

    for size in range(n):
        for beta in compositions_of(size):
            f = {beta: 1}
            for m in range(1, n - size + 1):
                lhs = _h_product({Composition((m,)): 1}, f)
                rhs = {}
                for i in range(size + 1):
                    for key, value in _bernstein(m + i, _apply_termwise(f, _perp_h_terms, i)).items():
                        add_term(rhs, key, value)
                _compare(report, "left-multiplication", f"m={m}, beta={beta}", lhs, rhs)

    return report.finish()


def _h_tail(s: int) -> Terms:
    """H_s as a term mapping, with H_0 = 1."""
    return {Composition((s,) if s else ()): 1}
