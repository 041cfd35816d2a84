"""Exception taxonomy shared across the package.

The CLI maps these onto process exit codes: bad input is 2, blown
resource guards and broken internal guarantees are 3, and negative
mathematical outcomes (an unrealizable degree sequence) are 1.
"""

from __future__ import annotations


class InputError(ValueError):
    """Caller handed us something malformed or out of contract."""


class ResourceLimitError(RuntimeError):
    """A size bound or search budget was exceeded; the answer is unknown."""


class InternalContradictionError(RuntimeError):
    """A guaranteed invariant failed; indicates a bug, never bad input."""


class UnrealizableError(Exception):
    """The requested combinatorial object provably does not exist."""


class DivisibilityError(UnrealizableError):
    """Constant degree sequence fails the necessary divisibility condition."""


class NotAMemberError(InputError):
    """Reconstruction was requested for a graph whose verdict is not Member.

    Carries the verdict so callers can report the witness or the
    inconclusive gap instead of a bare error.
    """

    def __init__(self, verdict, message: str):
        super().__init__(message)
        self.verdict = verdict
