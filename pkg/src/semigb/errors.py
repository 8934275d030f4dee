"""Exception hierarchy shared by every module of the package."""


class SemigbError(Exception):
    """Base class for all errors raised by semigb."""


class ModulusMismatch(SemigbError):
    pass


class DivisionByZero(SemigbError, ZeroDivisionError):
    pass


class NotPrime(SemigbError, ValueError):
    pass


class ArityMismatch(SemigbError, ValueError):
    pass


class ZeroInput(SemigbError, ValueError):
    pass


class ParseError(SemigbError, ValueError):
    """Raised on malformed polynomial text; carries 1-based line/column."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}, column {column})"
        super().__init__(message + where)


class InvalidDegree(SemigbError, ValueError):
    pass


class NotArtinian(SemigbError):
    pass


class NotHomogeneous(SemigbError, ValueError):
    pass


class OracleViolation(SemigbError):
    pass


class TimeoutDegree(SemigbError):
    pass


class EmptyMatrix(SemigbError, ValueError):
    pass


class NotReached(SemigbError):
    """Macaulay engine did not find a Groebner basis up to ``dmax``."""

    def __init__(self, dmax, partial=None):
        self.dmax = dmax
        self.partial = partial
        super().__init__(f"no Groebner basis found in Macaulay matrices up to degree {dmax}")


class InvalidExponent(SemigbError, ValueError):
    pass


class CapExceeded(SemigbError):
    """A documented size cap was hit; ``parameter`` names the limiting one."""

    def __init__(self, message, parameter=None):
        self.parameter = parameter
        super().__init__(message)


class NotArtinianWithinCap(CapExceeded):
    pass


class NoFallWithinCap(CapExceeded):
    pass


class PreconditionUnverified(SemigbError):
    pass


class GenerationFailed(SemigbError):
    pass
