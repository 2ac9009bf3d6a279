"""Pass/fail reports shared by all verifiers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    name: str
    ok: bool
    witness: Any = None
    detail: str = ""

    def to_dict(self) -> dict:
        d: dict = {"ok": self.ok}
        if self.witness is not None:
            d["witness"] = _jsonable(self.witness)
        if self.detail:
            d["detail"] = self.detail
        return d


@dataclass
class Report:
    """Ordered collection of named checks plus free-form data fields."""

    title: str = ""
    checks: dict[str, Check] = field(default_factory=dict)
    data: dict[str, Any] = field(default_factory=dict)

    def add(self, name: str, ok: bool, witness=None, detail: str = "") -> Check:
        c = Check(name, bool(ok), witness, detail)
        self.checks[name] = c
        return c

    def merge(self, other: "Report", prefix: str = "") -> None:
        for name, c in other.checks.items():
            self.checks[prefix + name] = c

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks.values())

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks.values() if not c.ok]

    def __getitem__(self, name: str) -> Check:
        return self.checks[name]

    def __contains__(self, name: str) -> bool:
        return name in self.checks

    def to_dict(self) -> dict:
        d = {k: _jsonable(v) for k, v in self.data.items()}
        d["axioms"] = {name: c.to_dict() for name, c in self.checks.items()}
        return d

    def __str__(self) -> str:
        lines = [self.title] if self.title else []
        width = max((len(n) for n in self.checks), default=0)
        for name, c in self.checks.items():
            line = f"  {name:<{width}}  {'pass' if c.ok else 'FAIL'}"
            if not c.ok and c.witness is not None:
                line += f"  witness={c.witness}"
            if c.detail:
                line += f"  ({c.detail})"
            lines.append(line)
        for k, v in self.data.items():
            lines.append(f"  {k}: {v}")
        return "\n".join(lines)


def _jsonable(x):
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return str(x)
