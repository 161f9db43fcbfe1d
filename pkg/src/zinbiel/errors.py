"""Exception types raised by the engine."""


class ZinbielError(Exception):
    """Base class for all engine errors."""


class MalformedPermutationError(ZinbielError, ValueError):
    pass


class InhomogeneousError(ZinbielError, ValueError):
    """A sign rule was asked to act on an element of mixed parity."""


class DegreeError(ZinbielError, ValueError):
    """An operation needs words of higher degree than it was given."""


class UnboundGeneratorError(ZinbielError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unbound generator"


class ParseError(ZinbielError, ValueError):
    """Syntax error in an expression or data file, with a 1-based position."""

    def __init__(self, message, line=1, column=1):
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class MalformedAlgebraError(ZinbielError, ValueError):
    pass


class TruncationError(ZinbielError, ValueError):
    pass


class DegreeBoundError(ZinbielError, ValueError):
    pass


class ParameterDomainError(ZinbielError, ValueError):
    pass


class NotRotaBaxterError(ZinbielError, ValueError):
    pass


class TowerError(ZinbielError, ValueError):
    """A level of a derived tower failed re-certification."""

    def __init__(self, message, level):
        super().__init__(f"level {level}: {message}")
        self.level = level


class NotTortkaraError(ZinbielError, ValueError):
    """An ideal generator is not an element of the special Tortkara part."""
