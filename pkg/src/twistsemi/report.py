"""Verification reports: plain records, never exceptions."""
from __future__ import annotations

import dataclasses
import time
from contextlib import contextmanager
from typing import Any

PASS = "pass"
FAIL = "fail"


@dataclasses.dataclass
class CheckRecord:
    check: str
    status: str
    cardinalities: dict[str, int] = dataclasses.field(default_factory=dict)
    witnesses: list[Any] = dataclasses.field(default_factory=list)
    details: dict[str, Any] = dataclasses.field(default_factory=dict)
    derived: bool = False
    instance: str = ""
    wall_time: float | None = None

    @property
    def passed(self):
        return self.status == PASS

    def to_dict(self, deterministic=False):
        out = dataclasses.asdict(self)
        if deterministic:
            out.pop("wall_time")
        return out


@dataclasses.dataclass
class Report:
    records: list[CheckRecord] = dataclasses.field(default_factory=list)
    notes: list[str] = dataclasses.field(default_factory=list)

    @property
    def passed(self):
        return all(r.passed for r in self.records)

    def add(self, check, ok, **fields):
        rec = CheckRecord(check, PASS if ok else FAIL, **fields)
        self.records.append(rec)
        return rec

    def extend(self, other: "Report", prefix=""):
        for r in other.records:
            self.records.append(dataclasses.replace(r, check=prefix + r.check))
        self.notes.extend(other.notes)
        return self

    def get(self, check):
        for r in self.records:
            if r.check == check:
                return r
        raise KeyError(check)

    def failures(self):
        return [r for r in self.records if not r.passed]

    def to_dict(self, deterministic=False):
        return {
            "passed": self.passed,
            "records": [r.to_dict(deterministic) for r in self.records],
            "notes": list(self.notes),
        }


@contextmanager
def timed(report: Report):
    """Stamp wall time on every record added inside the block."""
    start = len(report.records)
    t0 = time.perf_counter()
    yield
    dt = time.perf_counter() - t0
    for r in report.records[start:]:
        if r.wall_time is None:
            r.wall_time = dt
