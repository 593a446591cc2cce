"""Subcommands of the nmv-workbench CLI

Each module exposes register(subparsers); the parser it adds sets a handler
taking (args, out) and returning the exit code.
"""

from . import check, convert, derive, hasse, search
from .common import EXIT_FAILED, EXIT_OK, EXIT_USAGE

COMMANDS = (check, derive, convert, search, hasse)


def register_all(subparsers) -> None:
    for module in COMMANDS:
        module.register(subparsers)


__all__ = ["COMMANDS", "EXIT_OK", "EXIT_FAILED", "EXIT_USAGE", "register_all"]
