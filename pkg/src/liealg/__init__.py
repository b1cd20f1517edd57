from src.liealg.algebra import (
    LieAlgebraData,
    KillingConstants,
    Violation,
    bracket,
    bracket_m,
    killing_constants,
    jacobi_residual,
    validate,
    direct_sum,
)
from src.liealg.invariance import check_isotropy_invariance
from src.liealg.builtin import (
    abelian,
    heisenberg3,
    so3,
    solvable2,
    e2,
    e2xr1,
    random_bianchi,
    build_algebra,
)

__all__ = [
    "LieAlgebraData",
    "KillingConstants",
    "Violation",
    "bracket",
    "bracket_m",
    "killing_constants",
    "jacobi_residual",
    "validate",
    "direct_sum",
    "check_isotropy_invariance",
    "abelian",
    "heisenberg3",
    "so3",
    "solvable2",
    "e2",
    "e2xr1",
    "random_bianchi",
    "build_algebra",
]
