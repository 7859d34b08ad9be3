"""Exception hierarchy for the diskew package."""


class DiskewError(Exception):
    """Base class for all errors raised by this package."""


class HandleMismatch(DiskewError):
    """Operands belong to different rings."""


class AlgebraMismatch(DiskewError):
    """Operands belong to different algebras (GWA/DPR)."""


class NotUnivariate(DiskewError):
    pass


class NotPrime(DiskewError):
    pass


class UnsupportedRing(DiskewError):
    pass


class UnsupportedFamily(DiskewError):
    pass


class UnsupportedOperation(DiskewError):
    pass


class NotRecognizedNormalForm(DiskewError):
    """Element is not in a shape recognized as normal."""


class NoncommutativeUnsupported(DiskewError):
    pass


class MalformedWord(DiskewError):
    pass


class ZeroDegreeRequest(DiskewError):
    pass


class RhoNotUnit(DiskewError):
    pass


class NuNotSurjective(DiskewError):
    pass


class AlphaConditionsFail(DiskewError):
    pass


class StarNotInvolution(DiskewError):
    pass


class NormalityUnverified(DiskewError):
    pass


class CoefficientNotInRing(DiskewError):
    pass


class ThetaNotCommuting(DiskewError):
    pass


class UnverifiedData(DiskewError):
    pass


class ZeroInput(DiskewError):
    pass


class PDoesNotDivideN(DiskewError):
    pass


class ExprSyntaxError(DiskewError):
    def __init__(self, message, line, col):
        super().__init__(f"{message} (line {line}, col {col})")
        self.line = line
        self.col = col


class UnknownVariable(DiskewError):
    pass


class NegativeExponentOutsideLaurent(DiskewError):
    pass


class SpecInvalid(DiskewError):
    pass


class CommandUnknown(DiskewError):
    pass
