from typing import Optional, Sequence
import sys

from .app import Zarex, exit_status_help
from .cache import ResultCache, cache_key
from .commands import CommandContext, CommandHandler, command_handler, command_handlers
from .program import ArgumentParser, Program


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run one zarex command line and return its exit status."""
    return Zarex().run(argv)


def main() -> None:
    sys.exit(run(sys.argv[1:]))


__all__ = [
    "ArgumentParser",
    "CommandContext",
    "CommandHandler",
    "Program",
    "ResultCache",
    "Zarex",
    "cache_key",
    "command_handler",
    "command_handlers",
    "exit_status_help",
    "main",
    "run",
]
