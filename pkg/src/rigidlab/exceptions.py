"""Exception hierarchy for rigidlab.

All rigidlab exceptions inherit from ``RigidLabError``, making it easy to
catch any library error with a single ``except RigidLabError`` clause.
"""


class RigidLabError(Exception):
    """Base exception for all rigidlab errors."""

    pass


class InvalidArgumentError(RigidLabError, ValueError):
    """Raised when a constructor or analysis receives an ill-formed argument.

    Examples: ``complete(0)``, overlapping attachment anchors, a
    non-injective replacement mapping, or a realization whose shape does not
    match the graph.
    """

    pass


class UnsupportedCaseError(RigidLabError):
    """Raised when a test is asked about a case its theorem excludes.

    ``glr`` raises it for graphs with fewer than ``d + 1`` vertices.
    """

    pass


class OutOfRangeError(RigidLabError):
    """Raised when a closed-form formula is evaluated outside its hypothesis,
    or when a sweep would exceed its configured budget."""

    pass


class NotPrimeError(RigidLabError, ValueError):
    """Raised when a ``PrimeField`` is built on a composite modulus.

    Args:
        modulus: The rejected modulus.
    """

    def __init__(self, modulus: int):
        super().__init__(f"Modulus {modulus} is not prime.")
        self.modulus = modulus


class GraphParseError(RigidLabError):
    """Raised for malformed graph files.

    The error message follows the pattern:

        ``line <n>: <message>``

    Args:
        line: 1-based line number of the offending line.
        message: What went wrong.
    """

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class ExpressionSyntaxError(RigidLabError):
    """Raised when a constructor expression violates the grammar.

    Args:
        position: 0-based character offset where parsing failed.
        message: What was expected.
    """

    def __init__(self, position: int, message: str):
        super().__init__(f"at position {position}: {message}")
        self.position = position
