"""Structured errors shared across the package."""

from __future__ import annotations


class ClosureLabError(Exception):
    """Base class for all errors raised by this package."""


class DegreeMismatchError(ClosureLabError):
    """Two permutations (or a permutation and a group) disagree on degree."""


class CycleParseError(ClosureLabError):
    """Cycle-notation text is malformed; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class DegreeLimitError(ClosureLabError):
    """Domain size exceeds the configured maximum degree guard."""


class IntransitiveActionError(ClosureLabError):
    """A block-system operation was asked of an intransitive action."""


class NotFaithfulError(ClosureLabError):
    """A base-size operation was asked of a non-faithful action."""


class NotASubgroupError(ClosureLabError):
    """Claimed subgroup has a generator outside the ambient group."""


class InvalidPartitionError(ClosureLabError):
    """A quotient was requested along a partition the group does not preserve."""


class ValidationError(ClosureLabError):
    """A catalog construction failed its self-check; names the failed check."""


class SimplicityError(ClosureLabError):
    """A certificate requiring a nonabelian simple group was asked of some
    group that fails the desk-scale simplicity probe."""


class BudgetExceededError(ClosureLabError):
    """A search ran out of nodes or time.

    partial carries whatever lower bound the search had established when it
    stopped (for closures: a subgroup of the true closure). It is never the
    final answer and callers must not present it as one.
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial
