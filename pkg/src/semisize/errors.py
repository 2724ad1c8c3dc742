"""Exception hierarchy shared by every module."""


class SemisizeError(Exception):
    """Base class for all errors raised by this package."""


class OutOfRangeEntry(SemisizeError, ValueError):
    def __init__(self, a: int, b: int, value):
        self.a, self.b, self.value = a, b, value
        super().__init__(f"table[{a}][{b}] = {value!r} is out of range")


class AssociativityFailure(SemisizeError, ValueError):
    def __init__(self, a: int, b: int, c: int, left: int, right: int):
        self.a, self.b, self.c = a, b, c
        self.left, self.right = left, right
        super().__init__(
            f"associativity fails at ({a},{b},{c}): ({a}*{b})*{c} = {left} but {a}*({b}*{c}) = {right}"
        )


class BoundExceeded(SemisizeError, ValueError):
    pass


class EmptyGenerator(SemisizeError, ValueError):
    pass


class HypothesisViolation(SemisizeError, ValueError):
    pass


class PreconditionViolation(SemisizeError, ValueError):
    pass


class InternalInvariantViolation(SemisizeError, AssertionError):
    """Two redundant computations disagreed. Always a bug, never bad input."""
