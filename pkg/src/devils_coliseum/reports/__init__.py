"""Command implementations: each reads a RunConfig and writes its artifacts."""

from devils_coliseum.reports.analyze import cmd_analyze
from devils_coliseum.reports.classify3 import cmd_classify3
from devils_coliseum.reports.render import cmd_render
from devils_coliseum.reports.staircase import cmd_staircase
from devils_coliseum.reports.types import CheckResult, CommandResult
from devils_coliseum.reports.verify import cmd_verify

__all__ = [
    "CheckResult",
    "CommandResult",
    "cmd_analyze",
    "cmd_classify3",
    "cmd_render",
    "cmd_staircase",
    "cmd_verify",
]
