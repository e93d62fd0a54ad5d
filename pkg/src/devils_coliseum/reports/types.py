"""Shared type definitions for command reports."""

from dataclasses import dataclass, field
from pathlib import Path


@dataclass(frozen=True, slots=True)
class CheckResult:
    """One verification entry: what was measured, against what, and the outcome."""

    name: str
    passed: bool
    value: object = None
    tolerance: object = None
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "value": self.value,
            "tolerance": self.tolerance,
            "detail": self.detail,
        }


@dataclass(slots=True)
class CommandResult:
    """Files written by a command plus its JSON summary; ok is False on a failed verification."""

    paths: list[Path] = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    ok: bool = True
