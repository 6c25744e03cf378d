"""Exception hierarchy shared across the package.

Two failure families matter to callers (and to the CLI exit-code contract):
bad inputs / violated preconditions, and internal consistency checks that a
correct build should never trip.
"""


class QPencilError(Exception):
    """Base class for all package errors."""


class PrecondError(QPencilError):
    """Invalid input or violated precondition (CLI exit code 2)."""


class InternalCheckError(QPencilError):
    """An internal cross-check failed; indicates a bug, not bad input (CLI exit 3)."""
