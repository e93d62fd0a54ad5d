"""Command-line interface for the devil's coliseum laboratory."""

import argparse
import json
import logging
import sys
from collections.abc import Callable, Sequence

from devils_coliseum.config import RunConfig, load_config
from devils_coliseum.errors import ColiseumError, ConfigError
from devils_coliseum.reports.analyze import cmd_analyze
from devils_coliseum.reports.classify3 import cmd_classify3
from devils_coliseum.reports.render import cmd_render
from devils_coliseum.reports.staircase import cmd_staircase
from devils_coliseum.reports.types import CommandResult
from devils_coliseum.reports.verify import cmd_verify

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_VERIFY = 3
EXIT_IO = 4
EXIT_DOMAIN = 5

COMMANDS: dict[str, tuple[Callable[[RunConfig, int | None], CommandResult], str]] = {
    "render": (cmd_render, "Render the escape-probability field, Julia mask and backward cloud."),
    "analyze": (cmd_analyze, "Exponents, level-set words, order audit, Hölder and kernel evidence."),
    "verify": (cmd_verify, "Run the verification suite; exit 3 if any check fails."),
    "staircase": (cmd_staircase, "Sweep a 1-D singular function and the attractor of the Ψ-shadow."),
    "classify3": (cmd_classify3, "Add a third generator and classify its overlap pattern."),
}


def configure_logging(level: int = logging.INFO) -> None:
    """Configure logging to write to stderr."""
    logging.basicConfig(
        level=level,
        format="%(levelname)s: %(message)s",
        stream=sys.stderr,
    )


def create_parser() -> argparse.ArgumentParser:
    """Create and configure the argument parser."""
    parser = argparse.ArgumentParser(
        prog="devils-coliseum",
        description="Escape probabilities and Julia sets of random polynomial dynamics.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    for name, (_, help_text) in COMMANDS.items():
        sub = subparsers.add_parser(name, help=help_text, description=help_text)
        sub.add_argument("config", help="Path to the TOML run configuration")
        sub.add_argument(
            "--set",
            dest="overrides",
            action="append",
            default=[],
            metavar="SECTION.KEY=VALUE",
            help="Override a configuration key (repeatable; value parsed as a TOML literal)",
        )
        sub.add_argument(
            "--workers",
            type=int,
            default=None,
            help="Worker count for field computation (default: COLISEUM_WORKERS or CPU count)",
        )
        sub.add_argument(
            "--log-level",
            choices=["DEBUG", "INFO", "WARNING", "ERROR"],
            default="INFO",
            help="Logging level (default: INFO)",
        )

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Entry point for CLI."""
    parser = create_parser()
    args = parser.parse_args(argv)

    configure_logging(getattr(logging, args.log_level))

    if args.workers is not None and args.workers < 1:
        parser.error(f"--workers must be >= 1, got {args.workers}")

    command, _ = COMMANDS[args.command]
    try:
        config = load_config(args.config, args.overrides)
        result = command(config, args.workers)
    except ConfigError as exc:
        logger.error("Configuration error: %s", exc)
        return EXIT_CONFIG
    except OSError as exc:
        logger.error("I/O error: %s", exc)
        return EXIT_IO
    except ColiseumError as exc:
        logger.error("%s: %s", type(exc).__name__, exc)
        return EXIT_DOMAIN

    print(json.dumps(result.summary, indent=2))
    return EXIT_OK if result.ok else EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
