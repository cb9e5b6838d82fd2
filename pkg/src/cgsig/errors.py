"""Exception hierarchy.

Each error carries the CLI exit code it maps to, so the command layer
never has to special-case individual exception types.
"""


class CGError(Exception):
    exit_code = 1


class PreconditionError(CGError, ValueError):
    exit_code = 3


class InfiniteGroup(PreconditionError):
    pass


class NotSymmetric(PreconditionError):
    pass


class ZeroMeridianValue(PreconditionError):
    pass


class DimensionMismatch(PreconditionError):
    pass


class IndexNotMonotone(PreconditionError):
    pass


class HypothesisViolation(PreconditionError):
    pass


class UnsupportedGroup(CGError):
    exit_code = 4


class MalformedCertificate(CGError):
    exit_code = 2


class MismatchWithPaper(CGError):
    exit_code = 1
