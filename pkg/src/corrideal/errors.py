"""Exception hierarchy.

Errors split into three families that the command line maps to exit codes:
input validation (1), operation preconditions (2) and I/O or parsing (3).
"""


class CorrespondenceError(Exception):
    exit_code = 1

    @property
    def kind(self) -> str:
        return type(self).__name__


# -- input validation ---------------------------------------------------------

class ValidationError(CorrespondenceError):
    exit_code = 1


class DuplicateLabel(ValidationError):
    pass


class UnknownLabel(ValidationError):
    pass


class FullnessViolation(ValidationError):
    pass


class NegativeOrMalformedNumber(ValidationError):
    pass


class SchemaError(ValidationError):
    pass


class UnknownVertex(UnknownLabel):
    pass


# -- preconditions ------------------------------------------------------------

class PreconditionError(CorrespondenceError):
    exit_code = 2


class NotPositivelyInvariant(PreconditionError):
    pass


class NotTPair(PreconditionError):
    pass


class NotCompactlyActing(PreconditionError):
    pass


class NotRowFinite(PreconditionError):
    pass


class NotAcyclic(PreconditionError):
    pass


class NotABimodule(PreconditionError):
    pass


class SizeLimit(PreconditionError):
    pass


# -- I/O ----------------------------------------------------------------------

class ParseError(CorrespondenceError):
    exit_code = 3

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column
