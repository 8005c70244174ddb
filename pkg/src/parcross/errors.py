"""Exception hierarchy.

Every error that signals a would-be counterexample to a checked statement
(``WellDefinednessBreach``, ``HomomorphismBreach``, ``IsoBreach`` ...) carries
the offending witness so the CLI can print it.
"""


class AlgebraError(Exception):
    """Base class for all library errors."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class OutOfRange(AlgebraError, IndexError):
    pass


class MalformedTable(AlgebraError, ValueError):
    pass


class NotInverseSemigroup(AlgebraError, ValueError):
    def __init__(self, message, witness=None, report=None):
        super().__init__(message, witness)
        self.report = report


class BadShape(AlgebraError, ValueError):
    pass


class DimMismatch(BadShape):
    pass


class NotUnit(AlgebraError, ValueError):
    pass


class NotAnIdeal(AlgebraError, ValueError):
    pass


class NotClosed(AlgebraError, ValueError):
    pass


class NotAssociative(AlgebraError, ValueError):
    pass


class NotValidated(AlgebraError, ValueError):
    def __init__(self, message, witness=None, report=None):
        super().__init__(message, witness)
        self.report = report


class MembershipBreach(AlgebraError, ValueError):
    pass


class WellDefinednessBreach(AlgebraError):
    pass


class ActionAxiomFailure(AlgebraError):
    def __init__(self, message, witness=None, report=None):
        super().__init__(message, witness)
        self.report = report


class NonUnitalIdeal(AlgebraError, ValueError):
    pass


class TargetNotUnital(AlgebraError, ValueError):
    pass


class HomomorphismBreach(AlgebraError):
    pass


class RelationBreach(AlgebraError):
    pass


class CapExceeded(AlgebraError):
    pass


class IsoBreach(AlgebraError):
    def __init__(self, message, witness=None, report=None):
        super().__init__(message, witness)
        self.report = report


class ParseError(AlgebraError, ValueError):
    def __init__(self, message, line=None, column=None, path=None):
        loc = ""
        if path is not None:
            loc += f"{path}:"
        if line is not None:
            loc += f"{line}:"
            if column is not None:
                loc += f"{column}:"
        super().__init__(f"{loc} {message}" if loc else message)
        self.line = line
        self.column = column
        self.path = path


class ConsistencyError(AlgebraError, ValueError):
    pass
