"""Exception types raised across the package."""


class PizzaError(Exception):
    """Base class for all library errors."""


class ArityError(PizzaError):
    pass


class DomainError(PizzaError):
    """An exponent lies outside the domain of an affine width function."""


class NotNormalized(PizzaError):
    pass


class ExponentBelowOne(PizzaError):
    pass


class DimensionMismatch(PizzaError):
    pass


class DegeneratePatch(PizzaError):
    pass


class NotNormallyEmbedded(PizzaError):
    pass


class RulingOutOfRange(PizzaError):
    pass


class IrrationalBreakpoint(PizzaError):
    """A cancellation locus of the ruling parameter is irrational."""


class DeepBreakpoint(PizzaError):
    """A cancellation locus is a non-constant ruling ``c0 ± c·t^δ``, not a constant one."""


class SigmaViolation(PizzaError):
    pass


class AmbiguousSigma(PizzaError):
    pass


class TauViolation(PizzaError):
    pass


class AmbiguousTau(PizzaError):
    pass


class Undetermined(PizzaError):
    """The combinatorial sign rules do not cover a slice pair."""


class ValidationError(PizzaError):
    """A scene failed semantic validation."""


class OracleMismatch(PizzaError):
    pass


class SceneParseError(PizzaError):
    """Base for scene-file problems; carries a JSON-path style location."""

    def __init__(self, message, location=""):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


class SceneSyntaxError(SceneParseError):
    pass


class UnknownField(SceneParseError):
    pass


class InvalidRational(SceneParseError):
    pass
