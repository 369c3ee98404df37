"""Exception hierarchy shared by every module of the package."""


class SmtgiError(Exception):
    """Base class for all errors raised by this package."""


class InputError(SmtgiError, ValueError):
    """Malformed or mismatched input handed to a library function."""


class ParseError(InputError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ConflictError(InputError):
    """A sample labels the same string (or prefix) in two incompatible ways."""

    def __init__(self, message, word=None):
        self.word = word
        super().__init__(message)


class SolverError(SmtgiError):
    """The external solver could not be launched or spoke garbage."""


class BoundExceeded(SmtgiError):
    def __init__(self, message, stats=()):
        self.stats = list(stats)
        super().__init__(message)


class UnknownVerdict(SmtgiError):
    """The solver answered unknown (or timed out) so minimality cannot be proven."""

    def __init__(self, message, stats=()):
        self.stats = list(stats)
        super().__init__(message)


class BudgetExceeded(SmtgiError):
    pass


class GenerationError(SmtgiError):
    pass
