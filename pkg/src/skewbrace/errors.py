"""Exception types raised across the package."""

from __future__ import annotations


class SkewBraceError(Exception):
    """Base class for every error raised by this package."""


# group validation ------------------------------------------------------------

class GroupError(SkewBraceError, ValueError):
    pass


class NotClosed(GroupError):
    pass


class NoIdentity(GroupError):
    pass


class NotAssociative(GroupError):
    def __init__(self, witness: tuple[int, int, int]):
        self.witness = witness
        super().__init__(f"associativity fails at (a, b, c) = {witness}")


class NoInverse(GroupError):
    def __init__(self, element: int):
        self.element = element
        super().__init__(f"element {element} has no two-sided inverse")


class NotASubgroup(GroupError):
    pass


class NotNormalizing(GroupError):
    def __init__(self, element: int):
        self.element = element
        super().__init__(f"element {element} does not normalize the subgroup")


# brace validation ------------------------------------------------------------

class BraceError(SkewBraceError, ValueError):
    pass


class OrderMismatch(BraceError):
    pass


class DistributivityFailure(BraceError):
    def __init__(self, witness: tuple[int, int, int]):
        self.witness = witness
        a, b, c = witness
        super().__init__(
            f"a o (b + c) != a o b - a + a o c at (a, b, c) = {witness}"
        )


class NotAnIdeal(BraceError):
    """``tag`` names the first failed condition."""

    def __init__(self, tag: str, witness=None):
        self.tag = tag
        self.witness = witness
        super().__init__(f"not an ideal: {tag}" + (f" (witness {witness})" if witness is not None else ""))


class NotContainingZero(BraceError):
    pass


class PreconditionViolated(BraceError):
    def __init__(self, tag: str):
        self.tag = tag
        super().__init__(f"precondition violated: {tag}")


class NotNilpotentType(BraceError):
    pass


# enumeration / io ------------------------------------------------------------

class OrderTooLarge(SkewBraceError, ValueError):
    pass


class ParseError(SkewBraceError):
    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class ValidationError(SkewBraceError):
    def __init__(self, entry: str, reason: str):
        self.entry = entry
        self.reason = reason
        super().__init__(f"entry {entry!r}: {reason}")


class UnknownCheckId(SkewBraceError, KeyError):
    def __init__(self, check_id: str):
        self.check_id = check_id
        super().__init__(check_id)

    def __str__(self) -> str:
        return f"unknown check id: {self.check_id}"
