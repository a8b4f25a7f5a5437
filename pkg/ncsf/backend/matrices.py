"""
Transition matrices as text files.

A matrix file starts with a header ``# M(A,B) n=k lex`` followed by one
line per row, entries separated by single spaces and written in the
polynomial text form (``q^2-2*q+1``).  Rows are the source basis, columns
the target basis, both in lexicographic order; for ``M(s,Sd)`` the rows
are the partitions of n.
"""

from __future__ import annotations

import logging
import os
from typing import Any, Dict, List, Tuple

import pandas as pd  # type: ignore

from .coefficients import as_qpoly
from .errors import DomainError
from .expressions import NSYM_BASES, QSYM_BASES, Basis
from .nsym import transition_matrix
from .qsym import qsym_transition_matrix, schur_dual_immaculate_matrix

logger = logging.getLogger(__name__)

GOLDEN_PAIRS: Tuple[Tuple[Basis, Basis], ...] = (
    (Basis.COMPLETE, Basis.IMMACULATE),
    (Basis.IMMACULATE, Basis.COMPLETE),
    (Basis.RIBBON, Basis.IMMACULATE),
    (Basis.IMMACULATE, Basis.RIBBON),
    (Basis.QPRIME, Basis.IMMACULATE),
    (Basis.IMMACULATE, Basis.QPRIME),
    (Basis.QPRIME, Basis.COMPLETE),
    (Basis.COMPLETE, Basis.QPRIME),
    (Basis.QPRIME, Basis.RIBBON),
    (Basis.RIBBON, Basis.QPRIME),
    (Basis.SCHUR, Basis.DUAL_IMMACULATE),
)


def build_matrix(n: int, source: Basis, target: Basis) -> pd.DataFrame:
    """Transition matrix from ``source`` to ``target`` in degree ``n``.

    Raises:
        DomainError: if the two bases do not belong to the same algebra
            (``s`` to ``Sd`` is the one mixed pair supported).
    """
    source, target = Basis.parse(source), Basis.parse(target)
    if source is Basis.SCHUR:
        if target is not Basis.DUAL_IMMACULATE:
            raise DomainError(f"Schur rows are only available against Sd, not {target.value}")
        return schur_dual_immaculate_matrix(n)
    if source in NSYM_BASES and target in NSYM_BASES:
        return transition_matrix(n, source, target)
    if source in QSYM_BASES and target in QSYM_BASES:
        return qsym_transition_matrix(n, source, target)
    raise DomainError(f"No transition matrix from {source.value} to {target.value}")


def format_matrix(matrix: pd.DataFrame, source: Basis, target: Basis, n: int) -> str:
    lines: List[str] = [f"# M({source.value},{target.value}) n={n} lex"]
    for _, row in matrix.iterrows():
        lines.append(" ".join(str(as_qpoly(value)) for value in row))
    return "\n".join(lines) + "\n"


def matrix_file_name(source: Basis, target: Basis) -> str:
    return f"M_{source.value}_{target.value}.txt"


def write_matrix(path: str, matrix: pd.DataFrame, source: Basis, target: Basis, n: int) -> str:
    """Write one matrix file, creating parent directories as needed; returns the path."""
    parent = os.path.dirname(path)
    if parent:
        os.makedirs(parent, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(format_matrix(matrix, source, target, n))
    logger.info(f"Wrote M({source.value},{target.value}) n={n} to {path}")
    return path


def emit_golden_matrices(out_dir: str, n: int = 4) -> List[str]:
    """Write every golden matrix into ``out_dir``; returns the written paths in emission order."""
    written = []
    for source, target in GOLDEN_PAIRS:
        matrix = build_matrix(n, source, target)
        path = os.path.join(out_dir, matrix_file_name(source, target))
        written.append(write_matrix(path, matrix, source, target, n))
    return written


def matrix_payload(matrix: pd.DataFrame, source: Basis, target: Basis, n: int) -> Dict[str, Any]:
    """JSON form: labels plus entries as polynomial text."""
    return {
        "source": source.value,
        "target": target.value,
        "n": n,
        "rows": list(matrix.index),
        "columns": list(matrix.columns),
        "entries": [[str(as_qpoly(v)) for v in row] for row in matrix.itertuples(index=False)],
    }
