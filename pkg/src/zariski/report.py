"""Pass/fail reports returned by the instance-checking operations."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class Report:
    title: str
    checks: list = field(default_factory=list)

    def add(self, name, ok, detail=""):
        self.checks.append(Check(name, bool(ok), detail))
        return bool(ok)

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.ok]

    def count(self, prefix=""):
        hits = [c for c in self.checks if c.name.startswith(prefix)]
        return sum(c.ok for c in hits), len(hits)

    def lines(self):
        out = [f"{self.title}: {'PASS' if self.ok else 'FAIL'} ({len(self.checks)} checks)"]
        for c in self.failures():
            out.append(f"  FAIL {c.name}" + (f": {c.detail}" if c.detail else ""))
        return out

    def __str__(self):
        return "\n".join(self.lines())
