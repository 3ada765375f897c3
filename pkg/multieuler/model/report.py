from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    family: str
    n: int
    passed: bool
    detail: str = ""

    @property
    def sort_key(self) -> tuple:
        return (self.suite, self.family, self.n, self.name)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "name": self.name,
            "family": self.family,
            "n": self.n,
            "passed": self.passed,
            "detail": self.detail,
        }


@dataclass
class SuiteReport:
    suite: str
    max_n: int
    checks: List[CheckResult] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def counts(self) -> Dict[str, int]:
        failed = len(self.failures)
        return {"total": len(self.checks), "passed": len(self.checks) - failed, "failed": failed}

    def sorted(self) -> "SuiteReport":
        return SuiteReport(
            self.suite, self.max_n, sorted(self.checks, key=lambda c: c.sort_key), self.elapsed
        )

    def to_dict(self, timings: bool = False) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "suite": self.suite,
            "max_n": self.max_n,
            "passed": self.passed,
            "counts": self.counts(),
            "checks": [c.to_dict() for c in sorted(self.checks, key=lambda c: c.sort_key)],
        }
        if timings:
            data["elapsed_seconds"] = round(self.elapsed, 3)
        return data
