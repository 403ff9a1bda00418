"""
Claim reports: one Step per checked (or assumed) statement.
"""

from __future__ import annotations

import json
from enum import Enum
from typing import List

from prettytable import PrettyTable
from pydantic import BaseModel, ConfigDict, Field

from configs.settings import DEFAULT_BUDGET, DEFAULT_SEED


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    ASSUMED = "assumed"
    SKIPPED = "skipped"


class Step(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: str
    claim: str
    anchor: str
    status: Status
    witnesses: List[str] = Field(default_factory=list)

    @classmethod
    def skipped(cls, id: str, claim: str, anchor: str, reason: str) -> "Step":
        return cls(id=id, claim=claim, anchor=anchor, status=Status.SKIPPED, witnesses=[f"skipped: {reason}"])


class ClaimReport(BaseModel):
    steps: List[Step] = Field(default_factory=list)
    seed: int = DEFAULT_SEED
    budget: int = DEFAULT_BUDGET

    @property
    def overall(self) -> Status:
        return Status.FAIL if any(s.status == Status.FAIL for s in self.steps) else Status.PASS

    @property
    def ok(self) -> bool:
        return self.overall == Status.PASS

    def step(self, step_id: str) -> Step:
        for s in self.steps:
            if s.id == step_id:
                return s
        raise KeyError(step_id)

    def payload(self) -> dict:
        return {
            "steps": [s.model_dump(mode="json") for s in self.steps],
            "overall": self.overall.value,
            "parameters": {"seed": self.seed, "budget": self.budget},
        }


STATUS_TAGS = {
    Status.PASS: "[OK]",
    Status.FAIL: "[FAIL]",
    Status.ASSUMED: "[ASSUMED]",
    Status.SKIPPED: "[SKIP]",
}


def render_report(r: ClaimReport, format: str = "text") -> str:
    if format == "json":
        return json.dumps(r.payload(), sort_keys=True, indent=2, ensure_ascii=False)
    if format != "text":
        raise ValueError(f"unknown report format {format!r}")

    lines = ["=" * 90, "CLAIM VERIFICATION", "=" * 90]
    lines.append(f"seed={r.seed} budget={r.budget}")
    lines.append(f"\nStatus: {'[OK] no step failed' if r.ok else '[FAIL] some steps failed'}")

    summary = PrettyTable()
    summary.field_names = ["step", "status", "claim"]
    summary.align = "l"
    for s in r.steps:
        summary.add_row([s.id, s.status.value, s.claim])
    lines.append(summary.get_string())

    for s in r.steps:
        lines.append(f"\n{STATUS_TAGS[s.status]} {s.id}: {s.claim}")
        lines.append(f"    anchor: {s.anchor}")
        for i, w in enumerate(s.witnesses, 1):
            lines.append(f"      {i}. {w}")
    lines.append("=" * 90)
    lines.append(f"overall: {r.overall.value}")
    return "\n".join(lines)
