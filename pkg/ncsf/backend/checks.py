"""
Conjecture and identity checkers behind the ``check`` verb.

Each checker walks every case up to ``max_n`` and returns a
``CheckReport``.  Work is split by degree: one shard per n, run either
in-process or on a ``multiprocessing.Pool`` when ``workers > 1``.
Shards are merged in ascending n, so the report does not depend on
the number of workers.
"""

from __future__ import annotations

import logging
from multiprocessing import Pool
from typing import Callable, Dict, List, Optional

from . import config
from .compositions import compositions_of, partitions_of
from .errors import DomainError
from .expressions import Basis, SparseExpression
from .nsym import NSymExpr, hl_identities_check, product, to_basis
from .qsym import f_times_dual_immaculate
from .reports import CheckReport
from .sym_oracle import verify_projection

logger = logging.getLogger(__name__)


def _multiplicity_free(expr: SparseExpression) -> bool:
    return all(c.is_constant() and c.constant_value() in (-1, 1) for c in expr.terms.values())


def _hl_positivity_shard(n: int) -> CheckReport:
    report = CheckReport("hl-positivity", {"n": n})
    for lam in partitions_of(n):
        expansion = to_basis(NSymExpr.element(Basis.QPRIME, lam), Basis.IMMACULATE)
        ok = all(c.has_nonnegative_coefficients() for c in expansion.terms.values())
        report.record("partitions", ok, f"Qp{lam.bracketed()}", expansion, "non-negative coefficients")
    return report


def _left_pieri_shard(n: int) -> CheckReport:
    report = CheckReport("left-pieri", {"n": n})
    for m in range(1, n + 1):
        left = NSymExpr.element(Basis.COMPLETE, (m,))
        for alpha in compositions_of(n - m):
            expansion = product(left, NSymExpr.element(Basis.IMMACULATE, alpha), Basis.IMMACULATE)
            report.record("left", _multiplicity_free(expansion), f"H[{m}]*S{alpha.bracketed()}",
                          expansion, "coefficients in {-1,0,1}")
    return report


def _dual_pieri_shard(n: int) -> CheckReport:
    report = CheckReport("dual-pieri", {"n": n})
    for i in range(1, n + 1):
        for alpha in compositions_of(n - i):
            expansion = f_times_dual_immaculate(i, alpha)
            report.record("dual", _multiplicity_free(expansion), f"F[{i}]*Sd{alpha.bracketed()}",
                          expansion, "coefficients in {-1,0,1}")
    return report


def _projection_shard(n: int) -> CheckReport:
    return verify_projection(n)


def _hl_identities_shard(n: int) -> CheckReport:
    return hl_identities_check(n)


# Each cumulative identity check covers every degree up to its n, so it runs once.
_CUMULATIVE = {"hl-identities"}

CHECKS: Dict[str, Callable[[int], CheckReport]] = {
    "hl-positivity": _hl_positivity_shard,
    "left-pieri": _left_pieri_shard,
    "dual-pieri": _dual_pieri_shard,
    "projection": _projection_shard,
    "hl-identities": _hl_identities_shard,
}


def run_check(name: str, max_n: Optional[int] = None, workers: Optional[int] = None) -> CheckReport:
    """Run the named check for every degree 1..max_n.

    Args:
        name: one of the keys of ``CHECKS``.
        max_n: largest degree examined (default ``NCSF_MAX_CHECK_N``).
        workers: process count (default ``NCSF_WORKERS``); 1 runs in-process.

    Raises:
        DomainError: for an unknown check name or max_n < 1.
    """
    if name not in CHECKS:
        raise DomainError(f"Unknown check {name!r}; expected one of {', '.join(sorted(CHECKS))}")
    max_n = config.MAX_CHECK_N if max_n is None else max_n
    workers = config.WORKERS if workers is None else workers
    if max_n < 1:
        raise DomainError(f"--max-n must be at least 1, got {max_n}")

    shard = CHECKS[name]
    degrees = [max_n] if name in _CUMULATIVE else list(range(1, max_n + 1))
    logger.info(f"Running {name} up to n={max_n} with {workers} worker(s)")

    if workers > 1 and len(degrees) > 1:
        with Pool(processes=min(workers, len(degrees))) as pool:
            shards: List[CheckReport] = pool.map(shard, degrees)
    else:
        shards = [shard(n) for n in degrees]

    report = CheckReport(name, {"max_n": max_n})
    for part in shards:
        report.merge(part)
    return report.finish()


def check_hl_positivity(max_n: int, workers: Optional[int] = None) -> CheckReport:
    """Every Qp[lambda], lambda a partition of n <= max_n, expands in S with coefficients in N[q]."""
    return run_check("hl-positivity", max_n, workers)


def check_left_pieri(max_n: int, workers: Optional[int] = None) -> CheckReport:
    """H[m] S[alpha] has coefficients in {-1,0,1} in S for m + |alpha| <= max_n."""
    return run_check("left-pieri", max_n, workers)


def check_dual_pieri(max_n: int, workers: Optional[int] = None) -> CheckReport:
    """F[i] Sd[alpha] has coefficients in {-1,0,1} in Sd for i + |alpha| <= max_n."""
    return run_check("dual-pieri", max_n, workers)

