from src.exception.error import (
    FinslerError,
    DimensionError,
    SingularityError,
    DomainError,
    NormValidationError,
    ConvexityError,
    LieAlgebraError,
    UnsupportedCaseError,
    ConfigParseError,
)

__all__ = [
    "FinslerError",
    "DimensionError",
    "SingularityError",
    "DomainError",
    "NormValidationError",
    "ConvexityError",
    "LieAlgebraError",
    "UnsupportedCaseError",
    "ConfigParseError",
]
