"""Exception hierarchy shared across the package.

Three failure classes matter to callers: malformed input text, violated
preconditions, and tripped resource guards. The CLI maps them to distinct
exit codes, the service to structured error bodies.
"""


class DomGameError(Exception):
    """Base class for all errors raised by this package."""

    kind = "error"


class FormatError(DomGameError):
    """Malformed graph text (graph6 or edge list).

    Messages name the position of the offending input: a byte offset for
    graph6 words, a 1-based line number for edge lists.
    """

    kind = "format"


class ContractError(DomGameError):
    """A documented precondition was violated by the caller."""

    kind = "contract"


class GuardError(DomGameError):
    """A resource guard tripped (size limit, enumeration cap, memo cap)."""

    kind = "guard"
