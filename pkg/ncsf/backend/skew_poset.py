"""
The immaculate poset and skew dual immaculate functions.

Compositions form a poset in which beta is covered by alpha when alpha
is obtained from beta by adding one box at the end of a row or by
starting a new row of length one at the bottom.  Going down, a path
removes one box per step; a row may disappear only when it is the
last row.  Paths are stored as their label words (the rows boxes are
taken from, first removal first) and intermediate compositions are
recomputed on demand.

A path from alpha down to the empty composition is the same thing as
a standard immaculate tableau of shape alpha, read backwards.
"""

from __future__ import annotations

import logging
from typing import Dict, Iterator, List, NamedTuple, Tuple

from .compositions import Composition, composition_from_descents, compositions_of, pieri_successors
from .errors import DomainError
from .expressions import Basis, add_term
from .nsym import NSymExpr, product
from .qsym import QSymExpr

logger = logging.getLogger(__name__)

SKEW_TARGETS = (Basis.MONOMIAL, Basis.FUNDAMENTAL, Basis.DUAL_IMMACULATE)


class PosetPath(NamedTuple):
    """A maximal chain from ``start`` down to ``end``, one box per step."""

    start: Composition
    steps: Tuple[int, ...]
    end: Composition


def remove_box(alpha: Composition, row: int) -> Composition:
    """Remove the last cell of ``row`` (1-based).

    Raises:
        DomainError: if the row does not exist, or it has one cell and is
            not the last row.
    """
    if not 1 <= row <= len(alpha):
        raise DomainError(f"{alpha} has no row {row}")
    parts = list(alpha)
    if parts[row - 1] == 1:
        if row != len(parts):
            raise DomainError(f"Removing row {row} of {alpha} leaves a gap")
        parts.pop()
    else:
        parts[row - 1] -= 1
    return Composition(parts)


def _can_reach(current: Composition, target: Composition) -> bool:
    if len(target) > len(current):
        return False
    return all(b <= a for a, b in zip(current, target))


def _walk(current: Composition, target: Composition, word: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
    if current.size == target.size:
        if current == target:
            yield word
        return
    for row in range(1, len(current) + 1):
        if current[row - 1] == 1 and row != len(current):
            continue
        following = remove_box(current, row)
        if _can_reach(following, target):
            yield from _walk(following, target, word + (row,))


def enumerate_paths(alpha: Composition, beta: Composition) -> List[PosetPath]:
    """All maximal chains from ``alpha`` down to ``beta``; rows are tried top to bottom."""
    alpha, beta = Composition(alpha), Composition(beta)
    if beta.size > alpha.size or not _can_reach(alpha, beta):
        return []
    return [PosetPath(alpha, word, beta) for word in _walk(alpha, beta, ())]


def intermediates(path: PosetPath) -> List[Composition]:
    """Every composition visited by ``path``, ``start`` and ``end`` included."""
    visited = [path.start]
    for row in path.steps:
        visited.append(remove_box(visited[-1], row))
    if visited[-1] != path.end:
        raise DomainError(f"Path steps from {path.start} end at {visited[-1]}, not {path.end}")
    return visited


def format_path(path: PosetPath) -> str:
    """Render as ``[1,3,2] -3-> [1,3,1] -2-> ...``."""
    visited = intermediates(path)
    pieces = [visited[0].bracketed()]
    for row, comp in zip(path.steps, visited[1:]):
        pieces.append(f"-{row}-> {comp.bracketed()}")
    return " ".join(pieces)


def word_descent_composition(word: Tuple[int, ...]) -> Composition:
    """Descent composition of a word: descents at i where w_i > w_{i+1}."""
    descents = [i for i in range(1, len(word)) if word[i - 1] > word[i]]
    return composition_from_descents(len(word), descents)


def path_descent_composition(path: PosetPath) -> Composition:
    """The descent composition of the label word, reversed."""
    return word_descent_composition(path.steps).reversed()


def is_horizontal_strip(path: PosetPath) -> bool:
    """True when the labels weakly increase, i.e. the path is a horizontal strip."""
    return all(a <= b for a, b in zip(path.steps, path.steps[1:]))


def skew_kostka(alpha: Composition, beta: Composition, gamma: Composition) -> int:
    """Coefficient of S[alpha] in S[beta] H[gamma_1] H[gamma_2] ..., by iterated right Pieri steps."""
    alpha, beta, gamma = Composition(alpha), Composition(beta), Composition(gamma)
    if beta.size + gamma.size != alpha.size:
        return 0
    layer: Dict[Composition, int] = {beta: 1}
    for part in gamma:
        following: Dict[Composition, int] = {}
        for shape, count in layer.items():
            for grown in pieri_successors(shape, part):
                if _can_reach(alpha, grown):
                    add_term(following, grown, count)
        layer = following
    return layer.get(alpha, 0)


def skew_dual_immaculate(alpha: Composition, beta: Composition, target: Basis) -> QSymExpr:
    """The skew dual immaculate function Sd[alpha/beta] in the M, F or Sd basis.

    * ``M``: coefficient of M[gamma] is <S[beta] H[gamma], Sd[alpha]>.
    * ``F``: one F[descent composition] per path from alpha down to beta.
    * ``Sd``: coefficient of Sd[gamma] is <S[beta] S[gamma], Sd[alpha]>.
    """
    alpha, beta = Composition(alpha), Composition(beta)
    if isinstance(target, str) and not isinstance(target, Basis):
        target = Basis.parse(target)
    if target not in SKEW_TARGETS:
        raise DomainError(f"Skew functions are expanded in M, F or Sd, not {target.value}")
    if beta.size > alpha.size:
        return QSymExpr(target)
    degree = alpha.size - beta.size
    terms: Dict[Composition, int] = {}
    if target is Basis.FUNDAMENTAL:
        for path in enumerate_paths(alpha, beta):
            add_term(terms, path_descent_composition(path), 1)
    elif target is Basis.MONOMIAL:
        for gamma in compositions_of(degree):
            value = skew_kostka(alpha, beta, gamma)
            if value:
                terms[gamma] = value
    else:
        left = NSymExpr.element(Basis.IMMACULATE, beta)
        for gamma in compositions_of(degree):
            value = product(left, NSymExpr.element(Basis.IMMACULATE, gamma)).coefficient(alpha)
            if value:
                terms[gamma] = value
    logger.debug(f"Skew {alpha}/{beta} in {target.value}: {len(terms)} terms")
    return QSymExpr(target, terms)
