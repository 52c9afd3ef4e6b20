"""Certification reports: per-item pass/fail with serialized witnesses."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass
class ReportItem:
    name: str
    passed: bool
    detail: str = ""
    witness: Optional[Any] = None


@dataclass
class Report:
    suite: str
    params: Dict[str, Any] = field(default_factory=dict)
    items: List[ReportItem] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    elapsed: float = 0.0

    def add(self, name: str, passed: bool, detail: str = "", witness=None) -> ReportItem:
        item = ReportItem(name, bool(passed), detail, witness)
        self.items.append(item)
        return item

    def note(self, text: str) -> None:
        self.notes.append(text)

    def extend(self, other: "Report", prefix: str = "") -> None:
        for it in other.items:
            self.items.append(ReportItem(prefix + it.name, it.passed, it.detail, it.witness))
        self.notes.extend(prefix + n for n in other.notes)
        self.elapsed += other.elapsed

    @property
    def ok(self) -> bool:
        return all(it.passed for it in self.items)

    @property
    def failures(self) -> List[ReportItem]:
        return [it for it in self.items if not it.passed]

    def __bool__(self):
        return self.ok

    def summary(self) -> str:
        n_fail = len(self.failures)
        status = "PASS" if self.ok else "FAIL"
        return f"[{status}] {self.suite}: {len(self.items) - n_fail}/{len(self.items)} items passed ({self.elapsed:.2f}s)"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "params": self.params,
            "ok": self.ok,
            "elapsed": round(self.elapsed, 4),
            "items": [
                {"name": it.name, "passed": it.passed, "detail": it.detail, "witness": it.witness}
                for it in self.items
            ],
            "notes": list(self.notes),
        }

    def render(self, verbose: bool = False) -> str:
        lines = [self.summary()]
        for it in self.items:
            if verbose or not it.passed:
                mark = "ok  " if it.passed else "FAIL"
                line = f"  {mark} {it.name}"
                if it.detail:
                    line += f"  -- {it.detail}"
                lines.append(line)
                if not it.passed and it.witness is not None:
                    lines.append(f"       witness: {it.witness}")
        for n in self.notes if verbose else []:
            lines.append(f"  note: {n}")
        return "\n".join(lines)
