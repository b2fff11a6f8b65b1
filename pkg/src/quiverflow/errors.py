"""Exception hierarchy.

Errors fall in two families: precondition failures (bad input, exit code 2 on
the command line) and numerical failures (exit code 3).
"""


class QuiverError(Exception):
    """Base class for every error raised by the package."""


class PreconditionFailed(QuiverError):
    pass


class InvalidQuiver(PreconditionFailed):
    pass


class InvalidDimensionVector(PreconditionFailed):
    pass


class InvalidFraming(PreconditionFailed):
    pass


class ZeroDimensionVector(PreconditionFailed):
    pass


class InvalidParameter(PreconditionFailed):
    pass


class InvalidExpansion(PreconditionFailed):
    pass


class InvalidPath(PreconditionFailed):
    pass


class InvalidRelation(PreconditionFailed):
    pass


class ShapeError(PreconditionFailed):
    pass


class UnsupportedRelationDegree(PreconditionFailed):
    pass


class InadmissibleCentral(PreconditionFailed):
    pass


class NotCritical(PreconditionFailed):
    pass


class NotOnFlowLine(PreconditionFailed):
    pass


class NumericalFailure(QuiverError):
    pass


class NumericalStall(NumericalFailure):
    pass


class DegenerateSpectrum(NumericalFailure):
    def __init__(self, message, margins=None):
        super().__init__(message)
        self.margins = margins or {}


class UnstableLedger(NumericalFailure):
    def __init__(self, message, margins=None):
        super().__init__(message)
        self.margins = margins or {}
