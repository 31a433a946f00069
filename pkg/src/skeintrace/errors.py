"""Exception types raised across the package."""


class SkeinTraceError(Exception):
    """Base class for all errors raised by skeintrace."""


class DivisionByZero(SkeinTraceError, ZeroDivisionError):
    pass


class ContextMismatch(SkeinTraceError):
    pass


class InvalidN(SkeinTraceError, ValueError):
    pass


class InvalidTriangulation(SkeinTraceError, ValueError):
    pass


class InconsistentCrossing(SkeinTraceError, ValueError):
    pass


class BadElevation(SkeinTraceError, ValueError):
    pass


class EmptyCurve(SkeinTraceError, ValueError):
    pass


class UnknownFixture(SkeinTraceError, KeyError):
    pass


class NotLambdaSimple(SkeinTraceError, ValueError):
    pass


class NotEmbedded(SkeinTraceError, ValueError):
    pass


class DescentFailure(SkeinTraceError):
    pass


class MalformedTangle(SkeinTraceError, ValueError):
    pass


class StrandMismatch(SkeinTraceError, ValueError):
    pass


class UndefinedAtRoot(SkeinTraceError, ArithmeticError):
    pass


class RootModeForbidden(SkeinTraceError, ValueError):
    pass


class BadRootOrder(SkeinTraceError, ValueError):
    pass


class ParseError(SkeinTraceError, ValueError):
    pass
