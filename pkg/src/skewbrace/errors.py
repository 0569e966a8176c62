"""Exception hierarchy shared by every module."""

from __future__ import annotations


class SkewBraceError(Exception):
    """Base class for all errors raised by this package."""


class GroupTableError(SkewBraceError):
    """A table failed to define a group."""


class NotLatinSquare(GroupTableError):
    def __init__(self, row: int, col: int, detail: str = ""):
        self.row, self.col = row, col
        super().__init__(f"not a Latin square at cell ({row}, {col}){': ' + detail if detail else ''}")


class NoIdentity(GroupTableError):
    def __init__(self):
        super().__init__("no two-sided identity element")


class NoInverse(GroupTableError):
    def __init__(self, element: int):
        self.element = element
        super().__init__(f"element {element} has no two-sided inverse")


class NotAssociative(GroupTableError):
    def __init__(self, a: int, b: int, c: int):
        self.triple = (a, b, c)
        super().__init__(f"associativity fails at ({a}, {b}, {c})")


class NotASubgroup(SkewBraceError):
    pass


class OrderTooLarge(SkewBraceError):
    pass


class BraceError(SkewBraceError):
    """A pair of tables failed to define a skew brace."""


class AddNotGroup(BraceError):
    def __init__(self, cause: GroupTableError):
        self.cause = cause
        super().__init__(f"additive table: {cause}")


class MulNotGroup(BraceError):
    def __init__(self, cause: GroupTableError):
        self.cause = cause
        super().__init__(f"multiplicative table: {cause}")


class SharedIdentityViolated(BraceError):
    def __init__(self, add_id: int, mul_id: int):
        self.add_id, self.mul_id = add_id, mul_id
        super().__init__(f"additive identity {add_id} differs from multiplicative identity {mul_id}")


class BraceLawViolated(BraceError):
    def __init__(self, a: int, b: int, c: int):
        self.triple = (a, b, c)
        super().__init__(f"a(b+c) = ab - a + ac fails at (a, b, c) = ({a}, {b}, {c})")


class NotASubbrace(SkewBraceError):
    pass


class NotAnIdeal(SkewBraceError):
    pass


class PremiseViolated(SkewBraceError):
    def __init__(self, name: str, detail: str = ""):
        self.name = name
        super().__init__(f"premise {name} violated{': ' + detail if detail else ''}")


class NotAFactorisation(SkewBraceError):
    pass


class NoWitness(SkewBraceError):
    pass


class ParseError(SkewBraceError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class ValidationError(SkewBraceError):
    def __init__(self, cause: BraceError):
        self.cause = cause
        super().__init__(str(cause))
