"""Exception hierarchy shared by every partition_lab module."""


class PartitionLabError(Exception):
    """Base class for all errors raised by this package."""


class InvalidPartition(PartitionLabError, ValueError):
    pass


class NonPositivePart(InvalidPartition):
    pass


class NotNonIncreasing(InvalidPartition):
    pass


class InvalidMultiplicity(InvalidPartition):
    pass


class EmptyPartition(PartitionLabError, ValueError):
    pass


class CutOutOfRange(PartitionLabError, IndexError):
    pass


class FrameTooWide(PartitionLabError, ValueError):
    pass


class InconsistentFrames(PartitionLabError, ValueError):
    pass


class TooLargeForExhaustion(PartitionLabError, ValueError):
    pass


class GuardExceeded(PartitionLabError, ValueError):
    pass


class FormMismatch(PartitionLabError, AssertionError):
    """Two algebraically identical series constructions disagreed (a bug)."""


class NotCoprime(PartitionLabError, ValueError):
    pass


class ImaginaryResidueTooLarge(PartitionLabError, ArithmeticError):
    """A_k(n) came out non-real; the root-of-unity convention is broken."""


class PrecisionExhausted(PartitionLabError, ArithmeticError):
    """Working precision cannot certify the nearest integer."""


class LiteralSyntaxError(PartitionLabError, ValueError):
    pass
