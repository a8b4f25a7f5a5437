"""
Back-substitution for unitriangular changes of basis.

Every inverse conversion in the toolkit has the same shape: a target
element is known in a pivot basis (H, M or h) and each element of the
other basis has a pivot expansion whose smallest key (in (size, lex)
rank, or largest for ``descending=True``) is itself with coefficient
1.  Peeling off the extreme key of the residual and subtracting the
matching column solves the system exactly over Z[q].
"""

from __future__ import annotations

import heapq
import logging
from typing import Callable, Dict, List, Mapping, Set, Tuple

from .coefficients import QPoly, as_qpoly
from .compositions import Composition, composition_rank
from .errors import InvariantViolation
from .expressions import add_term

logger = logging.getLogger(__name__)

Column = Mapping[Composition, object]


def solve_unitriangular(target: Mapping[Composition, object],
                        expand: Callable[[Composition], Column],
                        descending: bool = False,
                        rank: Callable[[Composition], Tuple[int, int]] = composition_rank,
                        ) -> Dict[Composition, QPoly]:
    """Write ``target`` as a combination of the columns ``expand(key)``.

    Args:
        target: Pivot-basis coefficients of the element to convert.
        expand: Pivot expansion of one element of the other basis.
        descending: Process keys from the largest rank down.
        rank: Sort key of an index; defaults to (size, lex index).

    Returns:
        Coefficients in the other basis, zeros dropped.

    Raises:
        InvariantViolation: if a column is not unitriangular.
    """
    sign = -1 if descending else 1

    def priority(key: Composition) -> Tuple[int, ...]:
        return tuple(sign * r for r in rank(key))

    residual: Dict[Composition, QPoly] = {}
    for key, value in target.items():
        add_term(residual, key, as_qpoly(value))
    heap: List[Tuple[Tuple[int, ...], Composition]] = []
    queued: Set[Composition] = set()
    for key in residual:
        heapq.heappush(heap, (priority(key), key))
        queued.add(key)
    solution: Dict[Composition, QPoly] = {}
    while heap:
        _, key = heapq.heappop(heap)
        queued.discard(key)
        coefficient = residual.pop(key, None)
        if not coefficient:
            continue
        column = expand(key)
        leading = column.get(key, 0)
        if leading != 1:
            raise InvariantViolation(f"Column {key} has leading coefficient {leading}, expected 1")
        solution[key] = coefficient
        for other, value in column.items():
            if other == key or not value:
                continue
            if priority(other) <= priority(key):
                raise InvariantViolation(f"Column {key} has support on {other}, which is not later in the order")
            add_term(residual, other, -(coefficient * as_qpoly(value)))
            if other not in queued:
                heapq.heappush(heap, (priority(other), other))
                queued.add(other)
    logger.debug(f"Back-substitution produced {len(solution)} terms")
    return solution
