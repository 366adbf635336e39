"""Exception types shared across the package."""


class NotPrimeError(ValueError):
    """A claimed prime characteristic failed the primality check."""


class OrderCapError(ValueError):
    """A requested structure or scan exceeds a configured size cap."""


class InvalidCodeError(ValueError):
    """An element code lies outside [0, order)."""


class NotADivisorError(ValueError):
    """A subfield degree that does not divide the extension degree."""


class BracketOverflowError(OverflowError):
    """A geometric-sum value left the 64-bit integer range."""


class PairInvalidError(ValueError):
    """A (q, n) pair violating one of the admissibility conditions.

    The attribute ``condition`` holds the first violated condition,
    one of "i" (q not a prime power), "ii" (a prime divisor of n does
    not divide q - 1), "iii" (q = 3 mod 4 while 4 divides n).
    """

    def __init__(self, q, n, condition):
        self.q = q
        self.n = n
        self.condition = condition
        super().__init__(f"pair ({q}, {n}) is invalid: condition {condition}")


class ZeroCosetError(ZeroDivisionError):
    """Zero has no discrete logarithm and belongs to no coset."""
