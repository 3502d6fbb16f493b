"""Exception hierarchy shared by every module."""

from __future__ import annotations


class MWPosetError(Exception):
    """Base class for all library errors."""


# field layer
class NonPrimeCharacteristic(MWPosetError, ValueError):
    pass


class ReducibleModulus(MWPosetError, ValueError):
    pass


class OutOfRangeElement(MWPosetError, ValueError):
    pass


class DivisionByZero(MWPosetError, ZeroDivisionError):
    pass


class LengthMismatch(MWPosetError, ValueError):
    pass


# posets and partitions
class CycleDetected(MWPosetError, ValueError):
    pass


class NotAnIdeal(MWPosetError, ValueError):
    pass


class NotASubgroup(MWPosetError, ValueError):
    pass


class NotAutomorphisms(MWPosetError, ValueError):
    pass


class PosetMismatch(MWPosetError, ValueError):
    pass


class InvalidPartition(MWPosetError, ValueError):
    pass


# codes and transforms
class ZeroGenerator(MWPosetError, ValueError):
    pass


class NotMacWilliamsType(MWPosetError):
    """Raised in strict mode when a relation fails the MacWilliams-type test.

    The failing verdict (with its witness) is attached as ``verdict``.
    """

    def __init__(self, message: str, verdict=None):
        super().__init__(message)
        self.verdict = verdict


class NonIntegralQuotient(MWPosetError, ArithmeticError):
    """An exact division left a remainder; indicates an internal bug."""


# resource caps: always a clean error, never truncation
class ResourceCapExceeded(MWPosetError):
    pass


class IdealCountCapExceeded(ResourceCapExceeded):
    pass


class GroundSetTooLarge(ResourceCapExceeded):
    pass


class CodeTooLarge(ResourceCapExceeded):
    pass


class SphereTooLarge(ResourceCapExceeded):
    pass


class TooLarge(ResourceCapExceeded):
    pass
