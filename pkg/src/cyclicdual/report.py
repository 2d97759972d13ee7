"""Check reports shared by every validator in the package.

A :class:`Report` is one record per check: an id, a pass/fail status, the
violations found (each with witnesses) and optional informational
witnesses for checks that succeed.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

STRUCTURAL = "structural"
AXIOM = "axiom"


@dataclass(frozen=True)
class Violation:
    code: str
    message: str
    witness: dict[str, Any] = field(default_factory=dict)
    kind: str = AXIOM

    def as_dict(self) -> dict[str, Any]:
        return {
            "code": self.code,
            "kind": self.kind,
            "message": self.message,
            "witness": dict(self.witness),
        }


@dataclass
class Report:
    check: str
    violations: list[Violation] = field(default_factory=list)
    witnesses: list[dict[str, Any]] = field(default_factory=list)
    summary: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def status(self) -> str:
        return "pass" if self.ok else "fail"

    @property
    def structural(self) -> list[Violation]:
        return [v for v in self.violations if v.kind == STRUCTURAL]

    @property
    def axiomatic(self) -> list[Violation]:
        return [v for v in self.violations if v.kind == AXIOM]

    def fail(self, code: str, message: str, kind: str = AXIOM, **witness: Any) -> None:
        self.violations.append(Violation(code, message, witness, kind))

    def codes(self) -> set[str]:
        return {v.code for v in self.violations}

    def extend(self, other: "Report") -> None:
        self.violations.extend(other.violations)
        self.witnesses.extend(other.witnesses)

    def as_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"check": self.check, "status": self.status}
        if self.summary:
            out["summary"] = dict(self.summary)
        out["violations"] = [v.as_dict() for v in self.violations]
        if self.witnesses:
            out["witnesses"] = [dict(w) for w in self.witnesses]
        return out

    def __str__(self) -> str:
        return format_text([self])


def _fmt_witness(w: dict[str, Any]) -> str:
    return ", ".join(f"{k}={v}" for k, v in w.items())


def format_text(reports: list[Report], max_items: int = 20) -> str:
    """Human-readable rendering; deterministic for identical input."""
    lines = []
    for r in reports:
        head = f"[{r.status.upper()}] {r.check}"
        if r.summary:
            head += "  (" + _fmt_witness(r.summary) + ")"
        lines.append(head)
        for v in r.violations[:max_items]:
            lines.append(f"    {v.kind}:{v.code}: {v.message}  [{_fmt_witness(v.witness)}]")
        if len(r.violations) > max_items:
            lines.append(f"    ... {len(r.violations) - max_items} more violations")
        for w in r.witnesses[:max_items]:
            lines.append(f"    witness: {_fmt_witness(w)}")
        if len(r.witnesses) > max_items:
            lines.append(f"    ... {len(r.witnesses) - max_items} more witnesses")
    return "\n".join(lines)
