"""Minkowski norms on the model space m: Riemannian, Randers and (alpha, beta)."""

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Optional

import numpy as np

from src.exception import DimensionError, DomainError, NormValidationError
from src.jets import Jet3, compose1, linear, quadratic, sqrt
from src.norms.profiles import Profile, RandersProfile

# |y|_A below this multiple of the scale of A counts as the zero vector
ZERO_THRESHOLD = 1e-12


class Family(str, Enum):
    RIEMANNIAN = "riemannian"
    RANDERS = "randers"
    ALPHA_BETA = "alpha_beta"


@dataclass(frozen=True, eq=False)
class NormSpec:
    """alpha(y) = sqrt(y^T A y), beta(y) = <y, u>_A, F built per family.

    Immutable after construction; evaluations are pure.
    """

    family: Family
    A: np.ndarray
    u: np.ndarray
    phi: Optional[Profile] = None
    beta_covector: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        family = Family(self.family)
        a = np.array(self.A, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
            raise DimensionError(f"A must be a nonempty square matrix, got shape {a.shape}")
        n = a.shape[0]
        u = np.zeros(n) if self.u is None else np.array(self.u, dtype=float)
        if u.shape != (n,):
            raise DimensionError(f"u must have length {n}, got shape {u.shape}")
        if not np.allclose(a, a.T, rtol=0.0, atol=1e-14 * max(1.0, np.abs(a).max())):
            raise NormValidationError("A must be symmetric")
        a = 0.5 * (a + a.T)
        phi = self.phi
        if family is Family.RIEMANNIAN and np.any(u != 0.0):
            raise NormValidationError("a Riemannian norm carries no vector u")
        if family is Family.ALPHA_BETA and phi is None:
            raise NormValidationError("an (alpha, beta) norm needs a profile phi")
        if family is not Family.ALPHA_BETA:
            phi = None
        for arr in (a, u):
            arr.setflags(write=False)
        covector = a @ u
        covector.setflags(write=False)
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "A", a)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "beta_covector", covector)

    @classmethod
    def riemannian(cls, a) -> "NormSpec":
        a = np.asarray(a, dtype=float)
        return cls(Family.RIEMANNIAN, a, np.zeros(a.shape[0]))

    @classmethod
    def randers(cls, a, u) -> "NormSpec":
        return cls(Family.RANDERS, a, u)

    @classmethod
    def alpha_beta(cls, a, u, phi: Profile) -> "NormSpec":
        return cls(Family.ALPHA_BETA, a, u, phi)

    @property
    def n(self) -> int:
        return self.A.shape[0]

    @cached_property
    def scale(self) -> float:
        return float(np.sqrt(np.max(np.abs(np.diag(self.A)))))

    @cached_property
    def alpha_norm_u(self) -> float:
        """|u|_A, the bound on |beta / alpha|."""
        return float(np.sqrt(max(self.u @ self.A @ self.u, 0.0)))

    @cached_property
    def validity_problems(self) -> tuple[str, ...]:
        problems = []
        eigenvalues = np.linalg.eigvalsh(self.A)
        if eigenvalues.min() <= 0.0:
            problems.append(f"A is not positive definite (min eigenvalue {eigenvalues.min():.6g})")
            return tuple(problems)
        if self.family is Family.RANDERS and self.alpha_norm_u >= 1.0:
            problems.append(f"Randers bound violated: |u|_A = {self.alpha_norm_u:.6g} is not less than 1")
        if self.family is Family.ALPHA_BETA:
            s = np.linspace(-self.alpha_norm_u, self.alpha_norm_u, 201)
            if np.any(self.phi.values(s) <= 0.0):
                problems.append("phi(s) is not positive on |s| <= |u|_A")
        return tuple(problems)

    @property
    def is_valid(self) -> bool:
        return not self.validity_problems

    def ensure_valid(self) -> None:
        if self.validity_problems:
            raise NormValidationError("; ".join(self.validity_problems))

    def same_as(self, other: "NormSpec") -> bool:
        """Structural equality, used by configuration round trips."""
        same_phi = (self.phi is None and other.phi is None) or (
            self.phi is not None and other.phi is not None and self.phi.descriptor() == other.phi.descriptor())
        return (self.family is other.family and np.array_equal(self.A, other.A)
                and np.array_equal(self.u, other.u) and same_phi)

    def dict(self):
        out = {"family": self.family.value, "A": self.A, "u": self.u}
        if self.phi is not None:
            out["phi"] = self.phi.descriptor()
        return out

    # evaluation helpers
    def _check_point(self, y) -> np.ndarray:
        y = np.asarray(y, dtype=float)
        if y.shape != (self.n,):
            raise DimensionError(f"expected a vector of length {self.n}, got shape {y.shape}")
        self.ensure_valid()
        alpha2 = float(y @ self.A @ y)
        if alpha2 <= (ZERO_THRESHOLD * self.scale) ** 2:
            raise DomainError("Finsler quantities are undefined at the zero vector")
        return y


def f_value(spec: NormSpec, y) -> float:
    """F(y) for a single nonzero vector."""
    y = spec._check_point(y)
    return float(f_values(spec, y[None, :])[0])


def f_values(spec: NormSpec, ys: np.ndarray) -> np.ndarray:
    """Vectorized F over the rows of ys; the zero row maps to 0."""
    ys = np.atleast_2d(np.asarray(ys, dtype=float))
    alpha = np.sqrt(np.maximum(np.einsum("ki,ij,kj->k", ys, spec.A, ys), 0.0))
    if spec.family is Family.RIEMANNIAN:
        return alpha
    beta = ys @ spec.beta_covector
    if spec.family is Family.RANDERS:
        return alpha + beta
    with np.errstate(invalid="ignore", divide="ignore"):
        s = np.where(alpha > 0.0, beta / np.where(alpha > 0.0, alpha, 1.0), 0.0)
    return np.where(alpha > 0.0, alpha * spec.phi.values(s), 0.0)


def f_squared_jet(spec: NormSpec, y) -> Jet3:
    """Order-3 jet of F^2 at y: grad = [F^2]_y, hess = [F^2]_yy, third = [F^2]_yyy."""
    y = spec._check_point(y)
    alpha2 = quadratic(spec.A, y)
    if spec.family is Family.RIEMANNIAN:
        return alpha2
    alpha = sqrt(alpha2)
    beta = linear(spec.beta_covector, y)
    if spec.family is Family.RANDERS:
        f = alpha + beta
    else:
        f = alpha * compose1(spec.phi, beta / alpha)
    return f * f


def as_alpha_beta(spec: NormSpec) -> NormSpec:
    """The Randers norm re-expressed through the profile phi(s) = 1 + s."""
    if spec.family is not Family.RANDERS:
        raise NormValidationError("only Randers norms have a built-in (alpha, beta) form")
    return NormSpec.alpha_beta(spec.A, spec.u, RandersProfile())
