"""
Reports produced by identity and conjecture checks.

A ``CheckReport`` records what was checked, how many cases were
examined and every counterexample found.  ``passed`` is derived from
the counterexample list, so a failing report always carries at least
one counterexample.  Text output lists at most ten of them; the JSON
form carries all.
"""

from __future__ import annotations

import logging
import time
from typing import Any, Dict, List, Optional

logger = logging.getLogger(__name__)

MAX_SHOWN = 10


class CheckReport:
    """Outcome of one check run."""

    def __init__(self, name: str, parameters: Optional[Dict[str, Any]] = None) -> None:
        self.name = name
        self.parameters: Dict[str, Any] = dict(parameters or {})
        self.counterexamples: List[Dict[str, str]] = []
        self.cases = 0
        self.groups: Dict[str, Dict[str, int]] = {}
        self.elapsed = 0.0
        self._started = time.perf_counter()

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def add_counterexample(self, index: Any, lhs: Any, rhs: Any) -> None:
        self.counterexamples.append({"index": str(index), "lhs": str(lhs), "rhs": str(rhs)})

    def record(self, group: str, ok: bool, index: Any, lhs: Any, rhs: Any) -> None:
        """Count one case under ``group``, keeping it as a counterexample when it fails."""
        self.cases += 1
        tally = self.groups.setdefault(group, {"cases": 0, "failures": 0})
        tally["cases"] += 1
        if not ok:
            tally["failures"] += 1
            self.add_counterexample(f"{group}: {index}", lhs, rhs)

    def merge(self, other: "CheckReport") -> None:
        """Fold a shard's cases and counterexamples into this report."""
        self.cases += other.cases
        self.counterexamples.extend(other.counterexamples)
        for group, tally in other.groups.items():
            mine = self.groups.setdefault(group, {"cases": 0, "failures": 0})
            mine["cases"] += tally["cases"]
            mine["failures"] += tally["failures"]

    def finish(self) -> "CheckReport":
        self.elapsed = time.perf_counter() - self._started
        if self.passed:
            logger.info(f"{self.name}: passed {self.cases} cases in {self.elapsed:.2f}s")
        else:
            logger.warning(f"{self.name}: {len(self.counterexamples)} counterexamples in {self.cases} cases")
        return self

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "parameters": self.parameters,
            "passed": self.passed,
            "cases": self.cases,
            "groups": {k: dict(v) for k, v in self.groups.items()},
            "elapsed": round(self.elapsed, 3),
            "counterexamples": list(self.counterexamples),
        }

    def to_text(self) -> str:
        params = ", ".join(f"{k}={v}" for k, v in self.parameters.items())
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{self.name} ({params}): {status}, {self.cases} cases, {self.elapsed:.2f}s"]
        if len(self.groups) > 1:
            for group, tally in self.groups.items():
                verdict = "ok" if not tally["failures"] else f"{tally['failures']} failed"
                lines.append(f"  {group}: {tally['cases']} cases, {verdict}")
        for item in self.counterexamples[:MAX_SHOWN]:
            lines.append(f"  {item['index']}: {item['lhs']} != {item['rhs']}")
        hidden = len(self.counterexamples) - MAX_SHOWN
        if hidden > 0:
            lines.append(f"  ... and {hidden} more")
        return "\n".join(lines)
