"""Pass/fail bookkeeping shared by all verifiers."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any


@dataclass
class Check:
    name: str
    passed: bool
    witness: Any = None

    def as_dict(self) -> dict:
        d = {"name": self.name, "verdict": "pass" if self.passed else "fail"}
        if self.witness is not None:
            d["witness"] = jsonable(self.witness)
        return d


@dataclass
class AxiomReport:
    """Verdicts per axiom; an axiom may appear several times with different witnesses."""

    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, passed: bool, witness: Any = None) -> bool:
        self.checks.append(Check(name, bool(passed), witness))
        return bool(passed)

    def record(self, name: str, failures: list) -> bool:
        # one pass line, or one fail line per witness
        if not failures:
            return self.add(name, True)
        for w in failures:
            self.add(name, False, w)
        return False

    def extend(self, other: "AxiomReport", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.witness))

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self) -> bool:
        return self.ok

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def failed_axioms(self) -> list[str]:
        seen = []
        for c in self.failures():
            if c.name not in seen:
                seen.append(c.name)
        return seen

    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if not c.passed), None)

    def __str__(self):
        lines = []
        for c in self.checks:
            tag = "pass" if c.passed else "FAIL"
            w = "" if c.witness is None else f"  witness={jsonable(c.witness)}"
            lines.append(f"[{tag}] {c.name}{w}")
        return "\n".join(lines)


def jsonable(x: Any) -> Any:
    """Convert witnesses (tuples, Fractions, nested) into JSON-friendly values."""
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, bool) or x is None or isinstance(x, (int, str, float)):
        return x
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [jsonable(v) for v in items]
    return str(x)
