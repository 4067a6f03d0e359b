"""Exception hierarchy.

Every error carries an ``exit_code`` so the command line front end can map
failures onto its documented exit statuses without a lookup table.
"""

from __future__ import annotations


class ForgeError(Exception):
    """Base class for all library errors."""

    exit_code = 2


# field-core
class NonPrimeCharacteristic(ForgeError):
    pass


class ReducibleModulus(ForgeError):
    pass


class MixedFields(ForgeError):
    pass


class DivisionByZero(ForgeError, ZeroDivisionError):
    pass


class NotQuadraticExtension(ForgeError):
    pass


class NonCoprimeLength(ForgeError):
    pass


class ZeroConstantTerm(ForgeError):
    pass


# fq-linalg
class DimensionMismatch(ForgeError):
    pass


class NotSquare(ForgeError):
    pass


# code-kit
class ZeroMatrix(ForgeError):
    pass


class NotCosetClosed(ForgeError):
    pass


class NotDivisor(ForgeError):
    pass


class RepeatedEvaluationPoint(ForgeError):
    pass


class ZeroMultiplier(ForgeError):
    pass


class RedundancyOutOfRange(ForgeError):
    pass


class DependentBasis(ForgeError):
    pass


class BudgetExceeded(ForgeError):
    """Raised when an exact distance computation would exceed its budget.

    ``lower`` and ``upper`` hold the best bounds proven so far.
    """

    exit_code = 4

    def __init__(self, message: str, lower: int | None = None, upper: int | None = None):
        super().__init__(message)
        self.lower = lower
        self.upper = upper


# ea-derive / ea-construct
class LengthMismatch(ForgeError):
    pass


class NotDualContaining(ForgeError):
    pass


class TooManyEbitsRequested(ForgeError):
    pass


class ConditionViolated(ForgeError):
    pass


class WitnessSearchFailed(ForgeError):
    pass


class NoWitness(WitnessSearchFailed):
    pass


class NotMomentForm(ForgeError):
    pass


class InvalidR(ForgeError):
    pass


class NotLcd(ForgeError):
    pass


class ParityNotSupported(ForgeError):
    pass


class CongruenceMismatch(ForgeError):
    pass


class ClaimMismatch(ForgeError):
    exit_code = 3


# forge-cli
class UnknownConstruction(ForgeError):
    pass


class ParseError(ForgeError):
    pass


class VerificationFailed(ForgeError):
    """A stored report disagrees with recomputation; ``field`` names the first divergence."""

    exit_code = 3

    def __init__(self, field: str, detail: str = ""):
        super().__init__(f"{field}: {detail}" if detail else field)
        self.field = field


class InconsistentComputation(ForgeError):
    """Two independent computation routes disagreed. Always a bug."""

    exit_code = 1
