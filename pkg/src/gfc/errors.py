"""Exception types raised by the library.

Every error derives from :class:`GFCError` (itself a ``ValueError``) so callers
can catch the whole family at once.
"""


class GFCError(ValueError):
    pass


class NonzeroConstantTerm(GFCError):
    """Outer composition F(u) needs u(x, 0) == 0."""


class ZeroAlpha(GFCError):
    def __init__(self, n: int):
        super().__init__(f"alpha_{n} is zero; P_{n} cannot be normalised to monic")
        self.n = n


class OrderExceeded(GFCError):
    pass


class OrderTooSmall(GFCError):
    pass


class InvalidParams(GFCError):
    pass


class SingularIndex(GFCError):
    def __init__(self, n: int):
        super().__init__(f"omega formula has a vanishing denominator at n={n}")
        self.n = n


class ParityViolation(GFCError):
    pass


class SpecParseError(GFCError):
    pass
