"""
Compositions, integer tuples and the relations between them.

A ``Composition`` is an immutable tuple of positive integers.  It
indexes every basis element in the toolkit and sorts by size first
and then lexicographically (a proper prefix sorts first), which is
the order used for matrix rows and columns and for rendering
expressions.  ``IntTuple`` is a separate tuple type for the integer
vectors (zeros and negative entries allowed) that appear in
Jacobi-Trudi determinants and straightening.

The text form of a composition is comma separated (``4,2,3``) with
``-`` standing for the empty composition.
"""

from __future__ import annotations

import itertools
import logging
from functools import lru_cache
from math import prod
from typing import Dict, FrozenSet, Iterable, Iterator, List, NamedTuple, Tuple

from .errors import DomainError

logger = logging.getLogger(__name__)


class Composition(tuple):
    """An ordered sequence of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Composition":
        values = tuple(int(p) for p in parts)
        for p in values:
            if p < 1:
                raise DomainError(f"Composition parts must be positive, got {list(values)}")
        return super().__new__(cls, values)

    @property
    def parts(self) -> Tuple[int, ...]:
        return tuple(self)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return (sum(self), tuple(self))

    def __lt__(self, other: tuple) -> bool:
        if not isinstance(other, Composition):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def __le__(self, other: tuple) -> bool:
        if not isinstance(other, Composition):
            return NotImplemented
        return self.sort_key() <= other.sort_key()

    def __gt__(self, other: tuple) -> bool:
        if not isinstance(other, Composition):
            return NotImplemented
        return self.sort_key() > other.sort_key()

    def __ge__(self, other: tuple) -> bool:
        if not isinstance(other, Composition):
            return NotImplemented
        return self.sort_key() >= other.sort_key()

    def __repr__(self) -> str:
        return f"Composition([{','.join(map(str, self))}])"

    def __str__(self) -> str:
        return ",".join(map(str, self)) if self else "-"

    def concat(self, other: Iterable[int]) -> "Composition":
        return Composition(tuple(self) + tuple(other))

    def is_partition(self) -> bool:
        return all(a >= b for a, b in zip(self, self[1:]))

    def to_partition(self) -> "Composition":
        """The partition obtained by sorting the parts in decreasing order."""
        return Composition(sorted(self, reverse=True))

    def reversed(self) -> "Composition":
        return Composition(reversed(self))

    def bracketed(self) -> str:
        return "[" + ",".join(map(str, self)) + "]"


class IntTuple(tuple):
    """A finite sequence of arbitrary integers."""

    __slots__ = ()

    def __new__(cls, entries: Iterable[int] = ()) -> "IntTuple":
        return super().__new__(cls, (int(e) for e in entries))

    @property
    def entries(self) -> Tuple[int, ...]:
        return tuple(self)

    def is_composition(self) -> bool:
        return all(e > 0 for e in self)

    def to_composition(self) -> Composition:
        return Composition(self)

    def __repr__(self) -> str:
        return f"IntTuple([{','.join(map(str, self))}])"

    def __str__(self) -> str:
        return ",".join(map(str, self)) if self else "-"


class Cell(NamedTuple):
    """A box of a composition diagram, 1-based, row 1 on top."""

    row: int
    col: int


def parse_composition(text: str) -> Composition:
    """Parse ``4,2,3`` (optionally bracketed) or ``-`` for the empty composition."""
    source = text.strip()
    if source.startswith("[") and source.endswith("]"):
        source = source[1:-1].strip()
    if source in ("", "-"):
        return Composition()
    try:
        return Composition(int(piece) for piece in source.split(","))
    except ValueError:
        raise DomainError(f"Malformed composition: {text!r}")


def parse_int_tuple(text: str) -> IntTuple:
    """Parse a comma separated tuple of integers, negative entries allowed."""
    source = text.strip()
    if source.startswith("[") and source.endswith("]"):
        source = source[1:-1].strip()
    if source in ("", "-"):
        return IntTuple()
    try:
        return IntTuple(int(piece) for piece in source.split(","))
    except ValueError:
        raise DomainError(f"Malformed integer tuple: {text!r}")


@lru_cache(maxsize=None)
def compositions_of(n: int) -> Tuple[Composition, ...]:
    """All compositions of ``n`` in lexicographic order."""
    if n < 0:
        raise DomainError(f"No compositions of a negative integer ({n})")
    if n == 0:
        return (Composition(),)
    result: List[Composition] = []
    for first in range(1, n + 1):
        for rest in compositions_of(n - first):
            result.append(Composition((first,) + tuple(rest)))
    return tuple(result)


@lru_cache(maxsize=None)
def partitions_of(n: int) -> Tuple[Composition, ...]:
    """Partitions of ``n`` in lexicographic order (``1^n`` first, ``[n]`` last)."""
    return tuple(c for c in compositions_of(n) if c.is_partition())


@lru_cache(maxsize=None)
def _rank_table(n: int) -> Dict[Composition, int]:
    return {c: i for i, c in enumerate(compositions_of(n))}


def composition_rank(alpha: Composition) -> Tuple[int, int]:
    """Position of ``alpha`` in the (size, lex) order as a sortable pair."""
    return (alpha.size, _rank_table(alpha.size)[alpha])


def descent_set(alpha: Composition) -> FrozenSet[int]:
    """Partial sums of ``alpha`` strictly below its size."""
    return frozenset(itertools.accumulate(alpha[:-1]))


def composition_from_descents(n: int, descents: Iterable[int]) -> Composition:
    """Inverse of ``descent_set`` for compositions of ``n``."""
    points = sorted(set(descents))
    if points and (points[0] < 1 or points[-1] > n - 1):
        raise DomainError(f"Descents {points} do not lie in 1..{n - 1}")
    if n == 0:
        return Composition()
    cuts = [0] + points + [n]
    return Composition(b - a for a, b in zip(cuts, cuts[1:]))


def _require_same_size(alpha: Composition, beta: Composition) -> None:
    if alpha.size != beta.size:
        raise DomainError(f"Size mismatch: |{alpha}| = {alpha.size} but |{beta}| = {beta.size}")


def refines(alpha: Composition, beta: Composition) -> bool:
    """True when ``alpha`` refines ``beta``, i.e. D(beta) is inside D(alpha)."""
    _require_same_size(alpha, beta)
    return descent_set(beta) <= descent_set(alpha)


@lru_cache(maxsize=None)
def refinements(alpha: Composition) -> Tuple[Composition, ...]:
    """All compositions refining ``alpha`` (``alpha`` included), in lex order."""
    n = alpha.size
    base = descent_set(alpha)
    free = [i for i in range(1, n) if i not in base]
    found = []
    for k in range(len(free) + 1):
        for extra in itertools.combinations(free, k):
            found.append(composition_from_descents(n, base.union(extra)))
    return tuple(sorted(found))


@lru_cache(maxsize=None)
def coarsenings(alpha: Composition) -> Tuple[Composition, ...]:
    """All compositions that ``alpha`` refines (``alpha`` included), in lex order."""
    n = alpha.size
    base = sorted(descent_set(alpha))
    found = []
    for k in range(len(base) + 1):
        for kept in itertools.combinations(base, k):
            found.append(composition_from_descents(n, kept))
    return tuple(sorted(found))


def _weak_compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Tuples of ``parts`` non-negative integers summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _weak_compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def pieri_successors(alpha: Composition, s: int) -> Tuple[Composition, ...]:
    """Every beta with alpha contained in beta via an s-box horizontal strip.

    That is |beta| = |alpha| + s, alpha_j <= beta_j for each row of alpha,
    and beta has at most one more row than alpha.  Sorted in lex order.
    """
    if s < 0:
        raise DomainError(f"Pieri step needs s >= 0, got {s}")
    found = set()
    for tail in range(s + 1):
        for bumps in _weak_compositions(s - tail, len(alpha)):
            parts = [a + b for a, b in zip(alpha, bumps)]
            if tail:
                parts.append(tail)
            found.add(Composition(parts))
    return tuple(sorted(found))


def hooks(alpha: Composition) -> Dict[Cell, int]:
    """Hook of every cell: suffix sums in the first column, arm plus one elsewhere."""
    if not alpha:
        raise DomainError("Hooks are defined for non-empty compositions only")
    result: Dict[Cell, int] = {}
    suffix = alpha.size
    for i, part in enumerate(alpha, start=1):
        result[Cell(i, 1)] = suffix
        for j in range(2, part + 1):
            result[Cell(i, j)] = part - j + 1
        suffix -= part
    return result


def hook_product(alpha: Composition) -> int:
    return prod(hooks(alpha).values())


def lex_compare(alpha: Composition, beta: Composition) -> int:
    """-1, 0 or 1 as ``alpha`` is lexicographically below, equal to or above ``beta``."""
    _require_same_size(alpha, beta)
    a, b = tuple(alpha), tuple(beta)
    return (a > b) - (a < b)
