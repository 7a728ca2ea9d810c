class KnotError(Exception):
    """Base class for errors raised intentionally by the library.

    The CLI and the HTTP layer map subclasses to exit codes and status codes
    instead of treating them as crashes.
    """


class GaussCodeError(KnotError):
    """Raised when a Gauss-code string cannot be turned into a diagram."""


class MalformedTokenError(GaussCodeError):
    """Raised when the text is not a sequence of (O|U)<label>(+|-) tokens."""

    def __init__(self, message: str = "", offset: int | None = None):
        super().__init__(message)
        self.offset = offset


class CrossingCountError(GaussCodeError):
    """Raised when a label does not appear exactly twice."""


class RoleError(GaussCodeError):
    """Raised when both tokens of a label are O, or both are U."""


class SignMismatchError(GaussCodeError):
    """Raised when the two tokens of one label carry different signs."""


class DiagramError(KnotError):
    """Raised when chord data does not describe a valid Gauss diagram."""


class PositionError(KnotError):
    """Raised when a circle position is out of range."""


class UnknownChordError(KnotError):
    """Raised when a chord id is not present in the diagram."""


class PolynomialError(KnotError):
    """Base class for Laurent polynomial failures."""


class NotDivisibleError(PolynomialError):
    """Raised by exact division when the remainder is nonzero."""


class DivisionByZeroError(PolynomialError):
    """Raised when dividing by the zero polynomial or evaluating 0 at a negative power."""


class MalformedPolynomialError(PolynomialError):
    """Raised when a rendered polynomial string cannot be parsed."""


class ConfigurationError(KnotError):
    """Base class for failures on crossing subsets."""


class EmptyConfigurationError(ConfigurationError):
    """Raised when an operation needs a nonempty crossing subset."""


class NonAlternatingError(ConfigurationError):
    """Raised when a smoothing or contribution is requested for a non-alternating subset."""


class SizeLimitError(KnotError):
    """Raised when an oracle would exceed its configured cost guard."""


class ModulusMismatchError(KnotError):
    """Raised when comparing V residues taken modulo different writhe polynomials."""


class MoveError(KnotError):
    """Base class for move application failures."""


class PatternViolationError(MoveError):
    """Raised when an inserted move pattern fails its post-conditions."""


class PatternNotFoundError(MoveError):
    """Raised when the requested chords do not form a III_a pattern."""


class MixedEndpointsError(MoveError):
    """Raised when a forbidden move is asked to swap a head with a tail.

    Moving a head past a tail takes one forbidden move of each type.
    """
