"""Machine-readable verdicts for relation checks."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Iterable


@dataclass
class RelationReport:
    suite: str
    relation: str
    paper_ref: str
    instances_checked: int
    failures: list = field(default_factory=list)
    max_failures_kept: int = 5
    total_failures: int = 0

    @property
    def status(self) -> str:
        return "pass" if not self.failures else "fail"

    @property
    def passed(self) -> bool:
        return not self.failures

    def add_failure(self, instance: Any, detail: str) -> None:
        self.total_failures += 1
        if len(self.failures) < self.max_failures_kept:
            self.failures.append({"instance": _jsonable(instance), "detail": detail})

    def merge(self, other: "RelationReport") -> None:
        self.instances_checked += other.instances_checked
        for f in other.failures:
            if len(self.failures) < self.max_failures_kept:
                self.failures.append(f)
        self.total_failures += other.total_failures

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "relation": self.relation,
            "paper_ref": self.paper_ref,
            "instances_checked": self.instances_checked,
            "status": self.status,
            "total_failures": self.total_failures,
            "failures": self.failures,
        }

    def line(self) -> str:
        extra = "" if self.passed else f"  first failure: {self.failures[0]}"
        return (
            f"[{self.status.upper()}] {self.suite}/{self.relation} "
            f"({self.instances_checked} instances){extra}"
        )


def _jsonable(x):
    if isinstance(x, tuple):
        return [_jsonable(v) for v in x]
    if isinstance(x, (list,)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (int, float, str, bool)) or x is None:
        return x
    return str(x)


def all_passed(reports: Iterable[RelationReport]) -> bool:
    return all(r.passed for r in reports)


def failed(reports: Iterable[RelationReport]) -> list:
    return [r for r in reports if not r.passed]


def reports_to_json(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=False)


def by_relation(reports: Iterable[RelationReport]) -> dict:
    return {r.relation: r for r in reports}
