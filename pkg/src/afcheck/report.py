"""Law reports: the uniform result type of every checking operation.

A report collects violations; an empty report means the checked laws hold.
The ``checked`` counter records how many instances were examined, so that a
passing report still shows the search was not vacuous.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Violation:
    law: str
    witness: tuple = ()
    detail: str = ""

    def to_json(self) -> dict[str, Any]:
        return {"law": self.law, "witness": _jsonable(self.witness), "detail": self.detail}


@dataclass
class LawReport:
    violations: list[Violation] = field(default_factory=list)
    checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, law: str, witness: tuple = (), detail: str = "") -> None:
        self.violations.append(Violation(law, witness, detail))

    def merge(self, other: "LawReport") -> "LawReport":
        self.violations.extend(other.violations)
        self.checked += other.checked
        return self

    def to_json(self) -> dict[str, Any]:
        return {
            "ok": self.ok,
            "checked": self.checked,
            "violations": [v.to_json() for v in self.violations],
        }


def _jsonable(value):
    if isinstance(value, (tuple, list, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [_jsonable(v) for v in items]
    return value
