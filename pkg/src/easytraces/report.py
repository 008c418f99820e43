"""Verification reports shared by the graph, array and trace checks."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any


def jsonable(obj: Any) -> Any:
    """Convert reports, fractions and tuples into plain JSON values."""
    if isinstance(obj, Report):
        return obj.to_dict()
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    return obj


@dataclass
class Report:
    """Outcome of an exact check over a finite range.

    ``first_violation`` holds the witness of the first failure, if any.
    Composite reports keep their sub-checks in ``children`` and hold iff
    every child holds.
    """

    claim: str
    range: str
    holds: bool
    first_violation: Any = None
    details: dict = field(default_factory=dict)
    children: list[Report] = field(default_factory=list)

    @classmethod
    def combine(cls, claim: str, range_: str, children: list[Report], **details) -> Report:
        failed = next((c for c in children if not c.holds), None)
        return cls(
            claim=claim,
            range=range_,
            holds=failed is None,
            first_violation=None if failed is None else {"claim": failed.claim, "witness": failed.first_violation},
            details=details,
            children=children,
        )

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> dict:
        out = {
            "claim": self.claim,
            "range": self.range,
            "holds": self.holds,
            "first_violation": jsonable(self.first_violation),
        }
        if self.details:
            out["details"] = jsonable(self.details)
        if self.children:
            out["children"] = [c.to_dict() for c in self.children]
        return out

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def summary_lines(self, depth: int = 0) -> list[str]:
        mark = "PASS" if self.holds else "FAIL"
        line = f"{'  ' * depth}[{mark}] {self.claim} ({self.range})"
        if not self.holds and not self.children:
            line += f" first violation: {jsonable(self.first_violation)}"
        return [line] + [s for c in self.children for s in c.summary_lines(depth + 1)]
