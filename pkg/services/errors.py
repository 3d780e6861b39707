"""
Error hierarchy shared by the algebra kernel, the services, the CLI and the API
"""

from typing import Optional


class WebflatError(Exception):
    """Base class for every failure raised by the toolkit"""

    exit_code = 1
    http_status = 422


# Arithmetic

class DivisionByZero(WebflatError, ZeroDivisionError):
    pass


class RingMismatch(WebflatError):
    pass


class UnknownVariable(WebflatError):
    pass


class ZeroPolynomial(WebflatError):
    pass


class NonDivisible(WebflatError):
    pass


class SingularMatrix(WebflatError):
    pass


# Foliations

class DegenerateForm(WebflatError):
    pass


class NotSingular(WebflatError):
    pass


class NonIsolated(WebflatError):
    pass


class GenericityFailure(WebflatError):
    pass


class NotInvariant(WebflatError):
    pass


class Degenerate(WebflatError):
    pass


class InvariantLine(WebflatError):
    pass


class IncompleteFactorization(WebflatError):
    pass


# Homogeneous foliations

class NotHomogeneous(WebflatError):
    pass


class NotSimpleInflection(WebflatError):
    pass


class FiberConditionFailed(WebflatError):
    pass


class NotMaximalInflection(WebflatError):
    pass


class DegenerateInfinity(WebflatError):
    pass


# Webs

class DegreeZero(WebflatError):
    pass


class DegreeDrop(WebflatError):
    def __init__(self, message: str, chart: Optional[str] = None):
        super().__init__(message)
        self.chart = chart


class NotACubicWeb(WebflatError):
    pass


class NonReducedWeb(WebflatError):
    pass


# Input

class FormSyntaxError(WebflatError):
    exit_code = 2
    http_status = 400

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class NonLinearDifferential(FormSyntaxError):
    pass


class UnknownFixture(WebflatError):
    exit_code = 2
    http_status = 404


# Limits

class ComputationTimeout(WebflatError):
    exit_code = 3
    http_status = 504


class TermBudgetExceeded(ComputationTimeout):
    pass
