"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class HurwitzError(Exception):
    """Base class for domain errors raised by this package."""


class RingMismatch(HurwitzError):
    def __init__(self, left, right, detail: str = ""):
        self.left = left
        self.right = right
        msg = f"ring mismatch: {left} vs {right}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class NotAUnit(HurwitzError):
    def __init__(self, value, ring=None):
        self.value = value
        self.ring = ring if ring is not None else getattr(value, "ring", None)
        super().__init__(f"NotAUnit({value}) in {self.ring}")


class FactorialNotInvertible(HurwitzError):
    def __init__(self, n: int, ring=None):
        self.n = n
        self.ring = ring
        super().__init__(f"FactorialNotInvertible({n}): {n}! is not a unit in {ring}")


class RetractFailed(HurwitzError):
    """A value computed over the rational lift does not lie in the original ring."""

    def __init__(self, value, ring):
        self.value = value
        self.ring = ring
        super().__init__(f"RetractFailed: {value} does not belong to {ring}")


class LengthTooShort(HurwitzError):
    def __init__(self, length: int, needed: int):
        self.length = length
        self.needed = needed
        super().__init__(f"LengthTooShort: length {length}, need at least {needed}")


class LengthMismatch(HurwitzError):
    def __init__(self, length: int, expected: int):
        self.length = length
        self.expected = expected
        super().__init__(f"LengthMismatch: got length {length}, expected {expected}")


class NotZeroOfOrderOne(HurwitzError):
    def __init__(self, head):
        self.head = head
        super().__init__(f"NotZeroOfOrderOne: inner sequence starts with {head}, not 0")


class NotInvertibleForComposition(HurwitzError):
    def __init__(self, a0, a1):
        self.a0 = a0
        self.a1 = a1
        super().__init__(
            f"NotInvertibleForComposition: need a_0 = 0 and a_1 a unit, got a_0={a0}, a_1={a1}"
        )


class NotUnitHeaded(HurwitzError):
    def __init__(self, head):
        self.head = head
        super().__init__(f"NotUnitHeaded: first term is {head}, expected 1")


class NonzeroConstantTerm(HurwitzError):
    def __init__(self, n: int, poly):
        self.n = n
        self.poly = poly
        super().__init__(f"NonzeroConstantTerm({n}): q_{n} = {poly}")


class IndexOutOfRange(HurwitzError):
    def __init__(self, n: int, j: int):
        self.n = n
        self.j = j
        super().__init__(f"IndexOutOfRange: need 0 <= j <= n, got n={n}, j={j}")


class NotBinomialType(HurwitzError):
    def __init__(self, index: int, lhs, rhs):
        self.index = index
        self.lhs = lhs
        self.rhs = rhs
        super().__init__(f"NotBinomialType at index {index}: q(x+y) = {lhs} but q(x)*q(y) = {rhs}")


class ParseError(HurwitzError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" at line {line}, column {column}"
        elif column is not None:
            where = f" at column {column}"
        super().__init__(f"ParseError{where}: {message}")


class NetworkDisabled(HurwitzError):
    def __init__(self):
        super().__init__("NetworkDisabled: OEIS lookup needs online=True (--online) or a fixture")


class HttpError(HurwitzError):
    def __init__(self, status: int, url: str = ""):
        self.status = status
        self.url = url
        super().__init__(f"HttpError({status}) for {url}")
