"""Exceptions raised by group construction, validation, and enumeration."""


class GroupError(Exception):
    """Base class for all groupcensus errors."""


class BadEntry(GroupError):
    """A table entry is not an element index in range."""


class NoIdentity(GroupError):
    """No element acts as a two-sided identity."""


class NotLatin(GroupError):
    """A row or column of the table repeats an index."""


class NonAssociative(GroupError):
    """The table violates associativity; carries the first failing triple."""

    def __init__(self, a: int, b: int, c: int):
        self.triple = (a, b, c)
        super().__init__(
            f"associativity fails at triple ({a}, {b}, {c}): "
            f"({a}*{b})*{c} != {a}*({b}*{c})"
        )


class OrderOverflow(GroupError):
    """A constructed group would exceed the configured maximum order."""


class BadParameters(GroupError):
    """Family parameters are invalid (wrong parity, too small, ...)."""


class NotAPermutation(GroupError):
    """An ingested generator is not a bijection on 0..m-1."""


class CapExceeded(GroupError):
    """Requested enumeration order is above the active cap."""


class StarWithoutIdentity(GroupError):
    """A group has |C(G)| = |G|-1 but matches none of the four known groups.

    Can only arise from an implementation bug; fail loudly.
    """
