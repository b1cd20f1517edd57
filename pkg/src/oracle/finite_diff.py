"""S-curvature from finite differences of F alone.

No jet is involved: [F^2]_y, g_ij and I_i all come from 7-point central
stencils applied to vectorized evaluations of F. A derivative of order k uses
the step |y|_A * h**(1/(k+1)), which keeps rounding and truncation of the
nested stencils balanced for h around 1e-5.
"""

import numpy as np

from src.liealg import KillingConstants
from src.norms import NormSpec, f_values

_D1_OFFSETS = np.array([-3.0, -2.0, -1.0, 1.0, 2.0, 3.0])
_D1_WEIGHTS = np.array([-1.0, 9.0, -45.0, 45.0, -9.0, 1.0]) / 60.0
_D2_OFFSETS = np.arange(-3.0, 4.0)
_D2_WEIGHTS = np.array([2.0, -27.0, 270.0, -490.0, 270.0, -27.0, 2.0]) / 180.0


def _f2(spec: NormSpec, points: np.ndarray) -> np.ndarray:
    return f_values(spec, points) ** 2


def _gradient_f2(spec: NormSpec, y: np.ndarray, step: float) -> np.ndarray:
    n = y.shape[0]
    eye = np.eye(n)
    points = y[None, None, :] + step * _D1_OFFSETS[None, :, None] * eye[:, None, :]
    values = _f2(spec, points.reshape(-1, n)).reshape(n, -1)
    return values @ _D1_WEIGHTS / step


def _tensor_f2(spec: NormSpec, y: np.ndarray, step: float) -> np.ndarray:
    """g = 1/2 Hessian of F^2 from second directional derivatives along e_i and e_i + e_j."""
    n = y.shape[0]
    eye = np.eye(n)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    directions = np.vstack([eye] + [eye[i] + eye[j] for i, j in pairs]) if pairs else eye
    points = y[None, None, :] + step * _D2_OFFSETS[None, :, None] * directions[:, None, :]
    values = _f2(spec, points.reshape(-1, n)).reshape(directions.shape[0], -1)
    second = values @ _D2_WEIGHTS / (step * step)
    hess = np.diag(second[:n])
    for (i, j), d2 in zip(pairs, second[n:]):
        hess[i, j] = hess[j, i] = 0.5 * (d2 - second[i] - second[j])
    return 0.5 * hess


def _log_sqrt_det(g: np.ndarray) -> float:
    return 0.5 * float(np.linalg.slogdet(g)[1])


def fd_scurvature(spec: NormSpec, kc: KillingConstants, y, h: float = 1e-5) -> float:
    """S = V . I with every derivative taken by finite differences."""
    if h <= 0:
        raise ValueError(f"finite-difference step must be positive, got {h}")
    spec.ensure_valid()
    y = np.asarray(y, dtype=float)
    n = y.shape[0]
    scale = float(np.sqrt(y @ spec.A @ y))
    step1, step2, step3 = (scale * h ** (1.0 / (k + 1)) for k in (1, 2, 3))

    grad = _gradient_f2(spec, y, step1)
    g = _tensor_f2(spec, y, step2)

    cartan = np.empty(n)
    for i in range(n):
        samples = [_log_sqrt_det(_tensor_f2(spec, y + step3 * o * np.eye(n)[i], step2)) for o in _D1_OFFSETS]
        cartan[i] = float(np.dot(_D1_WEIGHTS, samples)) / step3

    t = np.einsum("ljk,k,j->l", kc.c, grad, y)
    spray = 0.5 * np.linalg.solve(g, t)
    return float(spray @ cartan)
