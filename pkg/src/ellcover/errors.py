"""Shared exception hierarchy.

Two families matter to callers: bad input (rejected curves, inadmissible
signatures, malformed JSON) and violated mathematical invariants (oracle
disagreement, zeta consistency failures).  The CLI maps the first to exit
code 1 and the second to exit code 2.
"""


class DomainError(ValueError):
    """Invalid domain input: rejected curve, signature, field, or JSON."""


class ConsistencyError(RuntimeError):
    """A mathematical invariant failed; this always indicates a bug."""
