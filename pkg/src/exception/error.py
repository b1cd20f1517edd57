class FinslerError(Exception):
    """Base class for every error raised by the library"""

    exit_code = 1

    def __init__(self, message, logger=None):
        super().__init__(message)
        self.message = message
        self.logged = logger is not None
        if self.logged:
            logger.log_error(f"{type(self).__name__}: {message}")

    def dict(self) -> dict[str, str]:
        return {"type": self.__class__.__name__, "message": str(self.message)}


class DimensionError(FinslerError):
    """Index or vector length does not match the ambient dimension"""

    pass


class SingularityError(FinslerError):
    """Division by a jet whose value is zero"""

    pass


class DomainError(FinslerError):
    """Argument outside the domain of a function (sqrt of a nonpositive value, the zero vector)"""

    pass


class NormValidationError(FinslerError):
    """Norm data violates its invariants (A not SPD, Randers bound, nonpositive profile)"""

    pass


class ConvexityError(FinslerError):
    """The fundamental tensor is singular or not positive definite at a direction"""

    def __init__(self, message, y=None, logger=None):
        super().__init__(message, logger)
        self.y = y


class LieAlgebraError(FinslerError):
    """Malformed structure constants or split g = h + m"""

    pass


class UnsupportedCaseError(FinslerError):
    """The requested computation is not defined for the given input class"""

    pass


class ConfigParseError(FinslerError):
    """The space configuration document could not be parsed"""

    exit_code = 2

    def __init__(self, message, context: str | None = None, logger=None):
        if context:
            message = f"{context}: {message}"
        super().__init__(message, logger)
        self.context = context
