# src/errors/exceptions.py
# Base exception families shared by every package.
# The CLI maps each family to a process exit code:
#   UsageError        -> 2  (input could not be parsed, bad flags)
#   PreconditionError -> 1  (input parsed but violates a mathematical precondition)
#   InvariantBreach   -> 3  (an internal consistency check failed; this is a bug)
# Packages subclass these next to the code that raises them.


class GrothError(Exception):
    """
    Root of all errors raised by the polynomial toolkit.
    """
    exit_code = 3


class UsageError(GrothError):
    """
    Raised when textual input (permutation, cycle notation, partition) is malformed
    or a parameter is outside the accepted range of an operation's surface.
    """
    exit_code = 2


class PreconditionError(GrothError):
    """
    Raised when a well-formed input does not satisfy the mathematical
    precondition of an operation, e.g. an involution that is not vexillary.
    """
    exit_code = 1


class InvariantBreach(GrothError):
    """
    Raised when a result fails an internal check that should hold for every input:
    a divided difference with a remainder, a negative orthogonal coefficient,
    an expansion that does not terminate.
    """
    exit_code = 3
