"""Profiles phi(s) for (alpha, beta) norms F = alpha * phi(beta / alpha)."""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict, Tuple

import numpy as np
from numpy.polynomial import Polynomial

from src.registry import PROFILE


class Profile(ABC):
    """A scalar profile supplied with derivatives to order 3."""

    name: str = "profile"

    @abstractmethod
    def derivatives(self, s: float) -> Tuple[float, float, float, float]:
        """(phi, phi', phi'', phi''') at s."""

    @abstractmethod
    def values(self, s: np.ndarray) -> np.ndarray:
        """Vectorized phi(s)."""

    @abstractmethod
    def descriptor(self) -> Dict[str, Any]:
        """Serializable form used by the space configuration document."""

    def __call__(self, s: float) -> Tuple[float, float, float, float]:
        return self.derivatives(s)


@PROFILE.register_module(name="randers", force=True)
@dataclass(frozen=True)
class RandersProfile(Profile):
    """phi(s) = 1 + s, so that alpha * phi(beta / alpha) = alpha + beta."""

    name: str = field(default="randers", init=False)

    def derivatives(self, s: float) -> Tuple[float, float, float, float]:
        return 1.0 + s, 1.0, 0.0, 0.0

    def values(self, s: np.ndarray) -> np.ndarray:
        return 1.0 + np.asarray(s, dtype=float)

    def descriptor(self) -> Dict[str, Any]:
        return {"name": "randers"}


@PROFILE.register_module(name="polynomial", force=True)
@dataclass(frozen=True)
class PolynomialProfile(Profile):
    """phi(s) = sum_k coefficients[k] * s**k."""

    coefficients: Tuple[float, ...] = (1.0,)
    name: str = field(default="polynomial", init=False)

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(float(c) for c in self.coefficients))
        if not self.coefficients:
            raise ValueError("polynomial profile needs at least one coefficient")

    @property
    def _polys(self) -> Tuple[Polynomial, Polynomial, Polynomial, Polynomial]:
        p = Polynomial(self.coefficients)
        return p, p.deriv(1), p.deriv(2), p.deriv(3)

    def derivatives(self, s: float) -> Tuple[float, float, float, float]:
        return tuple(float(q(s)) for q in self._polys)

    def values(self, s: np.ndarray) -> np.ndarray:
        return Polynomial(self.coefficients)(np.asarray(s, dtype=float))

    def descriptor(self) -> Dict[str, Any]:
        return {"name": "polynomial", "coefficients": list(self.coefficients)}


def build_profile(descriptor: Dict[str, Any] | str) -> Profile:
    """Build a profile from its descriptor, e.g. ``{"name": "polynomial", "coefficients": [1, 0.1]}``."""
    if isinstance(descriptor, str):
        descriptor = {"name": descriptor}
    cfg = dict(descriptor)
    cfg["type"] = cfg.pop("name")
    if "coefficients" in cfg:
        cfg["coefficients"] = tuple(cfg["coefficients"])
    return PROFILE.build(cfg)
