"""Exception hierarchy of the verified-numerics engine.

Everything derives from ``ValueError`` so callers can keep a single
``except ValueError`` for bad input, as the API views do.
"""


class NumericsError(ValueError):
    """Base class for all engine errors."""


class ZeroDenominatorError(NumericsError):
    """A rational was built or divided with a zero denominator."""


class DomainError(NumericsError):
    """An argument lies outside the domain of an operation."""


class ExpressionSyntaxError(NumericsError):
    """Concrete syntax could not be parsed."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class UnboundVariableError(NumericsError):
    """An expression mentions a variable the context does not bind."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"Variable '{name}' is not bound in the context.")


class UnsupportedDerivativeError(NumericsError):
    """Symbolic differentiation hit a non-differentiable node."""


class ConfigurationError(NumericsError):
    """Prover configuration is inconsistent with the proposition."""


class ScriptError(NumericsError):
    """A proposition script is malformed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CertificateError(NumericsError):
    """A certificate is malformed and cannot be replayed."""
