"""
Immaculate tableaux.

An immaculate tableau of shape ``alpha`` is a filling of the
composition diagram (row 1 on top) whose rows weakly increase from
left to right and whose first column strictly increases from top to
bottom.  ``K(alpha, beta)`` counts the tableaux of shape ``alpha``
and content ``beta``; standard tableaux (content ``1^n``) carry a
descent composition and ``L(alpha, beta)`` counts them by descent
composition.  ``n_statistic`` is the exponent of ``(1 - q)`` in the
Hall-Littlewood expansions.

Enumeration is row by row with backtracking and yields tableaux in
row-major lexicographic order of their entries, so output is stable
across runs.  Counting uses a memoised variant of the same recursion.
The module also contains a counter for classical semistandard Young
tableaux, used as an independent oracle for Schur functions.
"""

from __future__ import annotations

import logging
from collections import Counter
from functools import lru_cache
from math import factorial
from typing import Dict, Iterator, List, Sequence, Tuple

from .compositions import (
    Composition,
    composition_from_descents,
    compositions_of,
    hook_product,
)
from .errors import DomainError, InvariantViolation

logger = logging.getLogger(__name__)


class ImmaculateTableau:
    """A filled composition diagram satisfying the immaculate conditions."""

    __slots__ = ("shape", "rows")

    def __init__(self, rows: Sequence[Sequence[int]]) -> None:
        frozen = tuple(tuple(int(x) for x in row) for row in rows)
        for row in frozen:
            if not row:
                raise DomainError("Tableau rows must be non-empty")
            if row[0] < 1:
                raise DomainError(f"Tableau entries must be positive, got row {list(row)}")
            if any(a > b for a, b in zip(row, row[1:])):
                raise DomainError(f"Row {list(row)} does not weakly increase")
        firsts = [row[0] for row in frozen]
        if any(a >= b for a, b in zip(firsts, firsts[1:])):
            raise DomainError(f"First column {firsts} does not strictly increase")
        self.rows: Tuple[Tuple[int, ...], ...] = frozen
        self.shape = Composition(len(row) for row in frozen)

    @property
    def size(self) -> int:
        return self.shape.size

    def multiplicities(self) -> Tuple[int, ...]:
        """Multiplicity of each value 1..max entry (zeros allowed)."""
        counts = Counter(x for row in self.rows for x in row)
        top = max(counts) if counts else 0
        return tuple(counts.get(v, 0) for v in range(1, top + 1))

    @property
    def content(self) -> Composition:
        """The content as a composition; every value up to the largest must occur."""
        vector = self.multiplicities()
        if 0 in vector:
            raise DomainError(f"Content {list(vector)} has gaps and is not a composition")
        return Composition(vector)

    def is_standard(self) -> bool:
        entries = sorted(x for row in self.rows for x in row)
        return entries == list(range(1, len(entries) + 1))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ImmaculateTableau):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({[list(r) for r in self.rows]})"

    def __str__(self) -> str:
        return "\n".join(" ".join(map(str, row)) for row in self.rows)


class StandardImmaculateTableau(ImmaculateTableau):
    """An immaculate tableau containing each of 1..n exactly once."""

    __slots__ = ()

    def __init__(self, rows: Sequence[Sequence[int]]) -> None:
        super().__init__(rows)
        if not self.is_standard():
            raise DomainError(f"Entries of {self.rows} are not exactly 1..{self.size}")

    def row_of(self) -> Dict[int, int]:
        return {x: i for i, row in enumerate(self.rows, start=1) for x in row}


# -- enumeration ---------------------------------------------------------------


def _row_fillings(length: int, low: int, counts: List[int]) -> Iterator[Tuple[int, ...]]:
    """Weakly increasing rows of ``length`` using values >= low, lex order.

    ``counts[v - 1]`` is the remaining multiplicity of value v; the
    list is updated in place while a row is being yielded.
    """
    if length == 0:
        yield ()
        return
    for value in range(low, len(counts) + 1):
        if counts[value - 1] == 0:
            continue
        counts[value - 1] -= 1
        for rest in _row_fillings(length - 1, value, counts):
            yield (value,) + rest
        counts[value - 1] += 1


def _fill(shape: Composition, row: int, previous_first: int, counts: List[int],
          done: List[Tuple[int, ...]]) -> Iterator[List[Tuple[int, ...]]]:
    if row == len(shape):
        yield list(done)
        return
    for first in range(previous_first + 1, len(counts) + 1):
        if counts[first - 1] == 0:
            continue
        counts[first - 1] -= 1
        for rest in _row_fillings(shape[row] - 1, first, counts):
            done.append((first,) + rest)
            yield from _fill(shape, row + 1, first, counts, done)
            done.pop()
        counts[first - 1] += 1


def _require_matching(shape: Composition, content: Composition) -> None:
    if shape.size != content.size:
        raise DomainError(f"Shape {shape} and content {content} have different sizes")


def enumerate_immaculate(shape: Composition, content: Composition) -> List[ImmaculateTableau]:
    """All immaculate tableaux of ``shape`` and ``content`` in row-major lex order."""
    _require_matching(shape, content)
    counts = list(content)
    return [ImmaculateTableau(rows) for rows in _fill(shape, 0, 0, counts, [])]


def enumerate_standard(shape: Composition) -> List[StandardImmaculateTableau]:
    """All standard immaculate tableaux of ``shape``."""
    counts = [1] * shape.size
    return [StandardImmaculateTableau(rows) for rows in _fill(shape, 0, 0, counts, [])]


def enumerate_all_of_shape(shape: Composition) -> Iterator[ImmaculateTableau]:
    """Every immaculate tableau of ``shape`` whose content is a composition."""
    for content in compositions_of(shape.size):
        yield from enumerate_immaculate(shape, content)


@lru_cache(maxsize=None)
def _count_rows(shape: Tuple[int, ...], previous_first: int, counts: Tuple[int, ...]) -> int:
    if not shape:
        return 1
    total = 0
    length = shape[0]
    for first in range(previous_first + 1, len(counts) + 1):
        if counts[first - 1] == 0:
            continue
        work = list(counts)
        work[first - 1] -= 1
        # work already has the row's values removed while a filling is yielded
        for _ in _row_fillings(length - 1, first, work):
            total += _count_rows(shape[1:], first, tuple(work))
    return total


@lru_cache(maxsize=None)
def count_immaculate(shape: Composition, content: Composition) -> int:
    """Immaculate Kostka number K(shape, content)."""
    _require_matching(shape, content)
    return _count_rows(tuple(shape), 0, tuple(content))


def count_standard_hook(shape: Composition) -> int:
    """Number of standard immaculate tableaux from the hook-length formula."""
    if not shape:
        raise DomainError("The hook formula needs a non-empty shape")
    numerator = factorial(shape.size)
    denominator = hook_product(shape)
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise InvariantViolation(f"Hook quotient for {shape} is not integral: {numerator}/{denominator}")
    return quotient


# -- standardization and descents ---------------------------------------------


def standardize(tableau: ImmaculateTableau) -> StandardImmaculateTableau:
    """Relabel entries 1..n: by value, then lowest row first, left to right."""
    cells = [(value, -i, j) for i, row in enumerate(tableau.rows)
             for j, value in enumerate(row)]
    cells.sort()
    labels = [list(row) for row in tableau.rows]
    for label, (_, neg_row, col) in enumerate(cells, start=1):
        labels[-neg_row][col] = label
    return StandardImmaculateTableau(labels)


def descent_set_of(tableau: StandardImmaculateTableau) -> List[int]:
    """Positions i with i + 1 in a strictly lower row than i."""
    row = tableau.row_of()
    return [i for i in range(1, tableau.size) if row[i + 1] > row[i]]


def descent_composition(tableau: StandardImmaculateTableau) -> Composition:
    return composition_from_descents(tableau.size, descent_set_of(tableau))


@lru_cache(maxsize=None)
def descent_distribution(shape: Composition) -> Dict[Composition, int]:
    """Number of standard tableaux of ``shape`` per descent composition."""
    tally: Counter = Counter(descent_composition(t) for t in enumerate_standard(shape))
    return dict(tally)


def count_L(shape: Composition, beta: Composition) -> int:
    """L(shape, beta): standard tableaux of ``shape`` with descent composition ``beta``."""
    _require_matching(shape, beta)
    return descent_distribution(shape).get(beta, 0)


def n_statistic(tableau: ImmaculateTableau) -> int:
    """Sum over rows of (number of distinct entries - 1)."""
    return sum(len(set(row)) - 1 for row in tableau.rows)


# -- classical semistandard tableaux ------------------------------------------


def _horizontal_strips(inner: Tuple[int, ...], outer: Tuple[int, ...], size: int) -> Iterator[Tuple[int, ...]]:
    """Partitions nu with inner <= nu <= outer, nu/inner a horizontal strip of ``size``."""
    rows = len(outer)

    def extend(i: int, left: int, built: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
        if i == rows:
            if left == 0:
                yield built
            return
        low = inner[i]
        high = outer[i] if i == 0 else min(outer[i], inner[i - 1])
        for value in range(low, min(high, low + left) + 1):
            yield from extend(i + 1, left - (value - low), built + (value,))

    yield from extend(0, size, ())


@lru_cache(maxsize=None)
def _ssyt_from(shape: Tuple[int, ...], filled: Tuple[int, ...], content: Tuple[int, ...]) -> int:
    if not content:
        return 1 if filled == shape else 0
    total = 0
    for nxt in _horizontal_strips(filled, shape, content[0]):
        total += _ssyt_from(shape, nxt, content[1:])
    return total


def ssyt_count(lam: Composition, content: Composition) -> int:
    """Number of semistandard Young tableaux of partition shape ``lam`` and ``content``."""
    if not lam.is_partition():
        raise DomainError(f"{lam} is not a partition")
    if lam.size != content.size:
        return 0
    return _ssyt_from(tuple(lam), (0,) * len(lam), tuple(content))


def tableau_from_text(text: str, standard: bool = False) -> ImmaculateTableau:
    """Parse the one-row-per-line text form."""
    rows = [[int(x) for x in line.split()] for line in text.strip().splitlines() if line.strip()]
    return StandardImmaculateTableau(rows) if standard else ImmaculateTableau(rows)


def kostka_row(shape: Composition) -> Dict[Composition, int]:
    """Non-zero K(shape, beta) over all beta of the same size."""
    row: Dict[Composition, int] = {}
    for beta in compositions_of(shape.size):
        k = count_immaculate(shape, beta)
        if k:
            row[beta] = k
    return row


def kostka_column(content: Composition) -> Dict[Composition, int]:
    """Non-zero K(alpha, content) over all shapes alpha of the same size."""
    column: Dict[Composition, int] = {}
    for alpha in compositions_of(content.size):
        k = count_immaculate(alpha, content)
        if k:
            column[alpha] = k
    return column
