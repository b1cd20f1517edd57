"""Fundamental tensor, mean Cartan torsion, spray coefficients and S-curvature.

All quantities are taken at a nonzero y in m, in the Killing frame given by the
basis of m. Two independent S-curvature formulas are provided:

  frame form:    S = 1/2 g^il c^k_lj [F^2]_k y^j I_i
  bracket form:  S = < [y, grad ln sqrt det g (y)]_m , y >_y

which agree exactly under the sign convention [v_i, v_j]_m = -c^k_ij v_k.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.linalg import LinAlgError, cho_factor, cho_solve

from src.exception import ConvexityError
from src.jets import Jet3
from src.liealg import KillingConstants, LieAlgebraData, bracket_m, killing_constants
from src.norms import NormSpec, f_squared_jet


class FundamentalTensor(NamedTuple):
    g: np.ndarray
    g_inv: np.ndarray
    dg: np.ndarray


@dataclass(frozen=True, eq=False)
class _Local:
    """Everything derived from one F^2 jet and one Cholesky factorization."""

    y: np.ndarray
    jet: Jet3
    g: np.ndarray
    g_inv: np.ndarray
    dg: np.ndarray
    log_sqrt_det: float

    @property
    def f(self) -> float:
        return float(np.sqrt(self.jet.value))

    @property
    def cartan(self) -> np.ndarray:
        # I_i = 1/2 g^pq dg_pqi
        return 0.5 * np.einsum("pq,pqi->i", self.g_inv, self.dg)

    def spray(self, kc: KillingConstants) -> np.ndarray:
        t = np.einsum("ljk,k,j->l", kc.c, self.jet.grad, self.y)
        return 0.5 * self.g_inv @ t


def _local(spec: NormSpec, y) -> _Local:
    jet = f_squared_jet(spec, y)
    y = np.asarray(y, dtype=float)
    g = 0.5 * jet.hess
    try:
        factor = cho_factor(g, lower=True, check_finite=True)
    except (LinAlgError, ValueError) as e:
        raise ConvexityError(f"fundamental tensor is not positive definite at y = {y.tolist()}: {e}", y=y)
    g_inv = cho_solve(factor, np.eye(spec.n))
    g_inv = 0.5 * (g_inv + g_inv.T)
    log_sqrt_det = float(np.sum(np.log(np.diag(factor[0]))))
    return _Local(y, jet, g, g_inv, 0.5 * jet.third, log_sqrt_det)


def fundamental_tensor(spec: NormSpec, y) -> FundamentalTensor:
    """g = 1/2 [F^2]_yy, its inverse, and dg_ij/dy^k = 1/2 [F^2]_yyy."""
    local = _local(spec, y)
    return FundamentalTensor(local.g, local.g_inv, local.dg)


def log_sqrt_det(spec: NormSpec, y) -> float:
    """ln sqrt det g(y), from the Cholesky factor."""
    return _local(spec, y).log_sqrt_det


def distortion(spec: NormSpec, y, sigma: float) -> float:
    """tau(y) = ln( sqrt det g(y) / sigma ) for a Busemann-Hausdorff coefficient sigma."""
    return log_sqrt_det(spec, y) - float(np.log(sigma))


def mean_cartan_torsion(spec: NormSpec, y) -> np.ndarray:
    """I_i = [ln sqrt det g]_{y^i}."""
    return _local(spec, y).cartan


def distortion_gradient(spec: NormSpec, y) -> np.ndarray:
    """w^l = g^il I_i, the g-gradient of ln sqrt det g."""
    local = _local(spec, y)
    return local.g_inv @ local.cartan


def spray_vertical(spec: NormSpec, kc: KillingConstants, y) -> np.ndarray:
    """V^i = 1/2 g^il c^k_lj [F^2]_k y^j, the vertical part of the spray in the Killing frame."""
    return _local(spec, y).spray(kc)


def s_curvature_frame(spec: NormSpec, kc: KillingConstants, y) -> float:
    local = _local(spec, y)
    return float(local.spray(kc) @ local.cartan)


def s_curvature_bracket(spec: NormSpec, data: LieAlgebraData, y) -> float:
    local = _local(spec, y)
    w = local.g_inv @ local.cartan
    z = bracket_m(data, local.y, w)
    return float(z @ local.g @ local.y)


def s_homogeneity_check(spec: NormSpec, kc: KillingConstants, y, lam: float) -> float:
    """S(lam y) - lam S(y); zero up to rounding for lam > 0."""
    if lam <= 0:
        raise ValueError(f"homogeneity factor must be positive, got {lam}")
    y = np.asarray(y, dtype=float)
    if lam == 1.0:
        return 0.0
    return s_curvature_frame(spec, kc, lam * y) - lam * s_curvature_frame(spec, kc, y)


def isotropy_factor(s: float, f: float, n: int) -> float:
    """c in S = (n + 1) c F."""
    return s / ((n + 1) * f)


@dataclass(frozen=True, eq=False)
class CurvatureAt:
    y: np.ndarray
    F: float
    g: np.ndarray
    g_inv: np.ndarray
    dg: np.ndarray
    I: np.ndarray
    w: np.ndarray
    V: np.ndarray
    S_frame: float
    S_bracket: float
    log_sqrt_det: float
    grad_f2: np.ndarray

    @property
    def S(self) -> float:
        return self.S_frame

    def check(self) -> dict[str, float]:
        """Residuals of the pointwise invariants, each relative to max(1, scale)."""
        n = self.y.shape[0]
        f2 = self.F * self.F
        gy = self.g @ self.y
        return {
            "g_symmetry": float(np.abs(self.g - self.g.T).max()),
            "g_inverse": float(np.abs(self.g @ self.g_inv - np.eye(n)).max()),
            "euler_f2": abs(float(self.y @ gy) - f2) / max(1.0, f2),
            "euler_grad": float(np.abs(gy - 0.5 * self.grad_f2).max()) / max(1.0, float(np.abs(gy).max())),
            "cartan_y": abs(float(self.I @ self.y)) / max(1.0, float(np.abs(self.I).max() * np.abs(self.y).max())),
            "spray_g_orthogonal": abs(float(self.V @ gy)) / max(1.0, float(np.abs(self.V).max() * np.abs(gy).max())),
            "s_formulas": abs(self.S_frame - self.S_bracket) / max(1.0, abs(self.S_frame)),
        }

    def dict(self):
        return {
            "y": self.y,
            "F": self.F,
            "I": self.I,
            "w": self.w,
            "V": self.V,
            "S_frame": self.S_frame,
            "S_bracket": self.S_bracket,
            "log_sqrt_det": self.log_sqrt_det,
            "g": self.g,
            "g_inv": self.g_inv,
        }


def curvature_at(spec: NormSpec, data: LieAlgebraData, y, kc: KillingConstants | None = None) -> CurvatureAt:
    """Every pointwise quantity at y from a single jet and factorization."""
    kc = kc or killing_constants(data)
    local = _local(spec, y)
    cartan = local.cartan
    w = local.g_inv @ cartan
    v = local.spray(kc)
    s_bracket = float(bracket_m(data, local.y, w) @ local.g @ local.y)
    return CurvatureAt(
        y=local.y,
        F=local.f,
        g=local.g,
        g_inv=local.g_inv,
        dg=local.dg,
        I=cartan,
        w=w,
        V=v,
        S_frame=float(v @ cartan),
        S_bracket=s_bracket,
        log_sqrt_det=local.log_sqrt_det,
        grad_f2=local.jet.grad,
    )
