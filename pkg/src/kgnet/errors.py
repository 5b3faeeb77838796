"""Exception hierarchy.

Every data error raised by the library derives from :class:`KgnetError`, so
the command-line driver can map them to exit status 1 in one place.
"""


class KgnetError(Exception):
    pass


class InvalidValueError(KgnetError, ValueError):
    """A value lies outside a semiring's value domain."""


class NetworkError(KgnetError):
    pass


class UnknownNodeError(NetworkError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class TwoModeError(NetworkError):
    """A link violates, or an operation requires, a two-mode relation."""


class ConflictError(NetworkError):
    def __init__(self, node, name, first, second):
        super().__init__(
            f"node {node}: conflicting values for {name!r}: {first!r} != {second!r}"
        )
        self.node = node
        self.name = name


class SealedError(NetworkError):
    pass


class IntervalError(KgnetError, ValueError):
    pass


class OverlapError(IntervalError):
    def __init__(self, first, second):
        super().__init__(f"intervals {first} and {second} overlap")
        self.intervals = (first, second)


class DanglingActivityError(KgnetError):
    def __init__(self, link, node, t):
        super().__init__(
            f"link {link} is active at t={t} but its end node {node} is not"
        )
        self.link = link
        self.node = node


class TripleSyntaxError(KgnetError):
    def __init__(self, message, line, column):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class TermError(KgnetError, ValueError):
    """An RDF term appears in a position its kind does not allow."""


class FoldError(KgnetError):
    pass


class DimensionMismatch(KgnetError):
    pass


class ExpressionError(KgnetError):
    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownNameError(ExpressionError):
    pass


class FormatError(KgnetError):
    """Malformed input file; ``line`` is 1-based when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
