"""Indicatrix-wide scans of the S-curvature and the isotropy verdict.

On a homogeneous space S = (n + 1) c F forces c = 0: ln sqrt det g is
homogeneous of degree 0, so it has a maximum on the sphere where its gradient,
and with it the bracket form of S, vanishes. The scan checks this numerically.
"""

import csv
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import List, Tuple

import numpy as np

from src.curvature import CurvatureAt, curvature_at
from src.liealg import KillingConstants, LieAlgebraData, killing_constants
from src.logger import logger
from src.norms import NormSpec, sphere_directions
from src.utils import parallel_map


class Verdict(str, Enum):
    VANISHING = "vanishing"
    VIOLATION = "isotropic-hence-vanishing-violation"
    NON_ISOTROPIC = "non-isotropic"


@dataclass
class ArgmaxResult:
    y: np.ndarray
    log_sqrt_det: float
    gradient_norm: float
    iterations: int


@dataclass
class ScanReport:
    sample_count: int
    max_abs_S: float
    max_F: float
    mean_S_over_F: float
    var_S_over_F: float
    mean_isotropy_factor: float
    var_isotropy_factor: float
    argmax_distortion: np.ndarray
    log_sqrt_det_max: float
    argmax_gradient_norm: float
    argmax_iterations: int
    S_at_argmax: float
    verdict: Verdict
    directions: np.ndarray = field(repr=False)
    F: np.ndarray = field(repr=False)
    S: np.ndarray = field(repr=False)
    log_sqrt_det: np.ndarray = field(repr=False)
    vanish_tol: float = 1e-8

    @property
    def S_over_F(self) -> np.ndarray:
        return self.S / self.F

    @property
    def corollary_holds(self) -> bool:
        """S vanishes at the distortion maximum and S/F is never a nonzero constant."""
        at_argmax = abs(self.S_at_argmax) <= self.vanish_tol * max(1.0, self.max_abs_S)
        return at_argmax and self.verdict is not Verdict.VIOLATION

    def write_csv(self, path: str | Path) -> Path:
        """Per-sample rows: direction components, F, S, S/F, ln sqrt det g."""
        path = Path(path)
        n = self.directions.shape[1]
        header = [f"y{i + 1}" for i in range(n)] + ["F", "S", "S_over_F", "log_sqrt_det"]
        with open(path, "w", newline="", encoding="utf-8") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(header)
            for y, fv, sv, lv in zip(self.directions, self.F, self.S, self.log_sqrt_det):
                writer.writerow([f"{x:.17g}" for x in (*y, fv, sv, sv / fv, lv)])
        return path

    def dict(self):
        return {
            "sample_count": self.sample_count,
            "verdict": self.verdict.value,
            "corollary_holds": self.corollary_holds,
            "max_abs_S": self.max_abs_S,
            "max_F": self.max_F,
            "mean_S_over_F": self.mean_S_over_F,
            "var_S_over_F": self.var_S_over_F,
            "mean_isotropy_factor": self.mean_isotropy_factor,
            "var_isotropy_factor": self.var_isotropy_factor,
            "argmax_distortion": self.argmax_distortion,
            "log_sqrt_det_max": self.log_sqrt_det_max,
            "argmax_gradient_norm": self.argmax_gradient_norm,
            "argmax_iterations": self.argmax_iterations,
            "S_at_argmax": self.S_at_argmax,
        }


def _a_normalize(a: np.ndarray, y: np.ndarray) -> np.ndarray:
    return y / np.sqrt(y @ a @ y)


def _tangent(a: np.ndarray, here: CurvatureAt) -> Tuple[np.ndarray, float]:
    t = here.w - (here.y @ a @ here.w) * here.y
    return t, float(np.sqrt(t @ a @ t))


def refine_distortion_argmax(spec: NormSpec,
                             data: LieAlgebraData,
                             start: np.ndarray,
                             max_iter: int = 200,
                             grad_tol: float = 1e-10,
                             kc: KillingConstants | None = None) -> ArgmaxResult:
    """Projected gradient ascent of ln sqrt det g on the A-unit sphere.

    The ascent direction is the g-gradient w projected to the tangent space of
    the sphere. After an accepted move the step is the Barzilai-Borwein estimate
    from the change in position and gradient; a rejected move halves it.
    Near the top, where ln sqrt det g no longer resolves the improvement, a move
    is also accepted when it keeps the value and shrinks the gradient.
    """
    kc = kc or killing_constants(data)
    a = spec.A
    here = curvature_at(spec, data, _a_normalize(a, np.asarray(start, dtype=float)), kc)
    tangent, gradient_norm = _tangent(a, here)
    step = 1.0
    iterations = 0
    while iterations < max_iter and gradient_norm >= grad_tol:
        iterations += 1
        flat = 8.0 * np.finfo(float).eps * max(1.0, abs(here.log_sqrt_det))
        while step > 1e-16:
            there = curvature_at(spec, data, _a_normalize(a, here.y + step * tangent), kc)
            there_tangent, there_norm = _tangent(a, there)
            if there.log_sqrt_det > here.log_sqrt_det or (
                    there.log_sqrt_det >= here.log_sqrt_det - flat and there_norm < gradient_norm):
                dy = there.y - here.y
                curvature = -float(dy @ a @ (there_tangent - tangent))
                step = float(dy @ a @ dy) / curvature if curvature > 0.0 else 2.0 * step
                here, tangent, gradient_norm = there, there_tangent, there_norm
                break
            step *= 0.5
        else:
            break
    return ArgmaxResult(here.y, here.log_sqrt_det, gradient_norm, iterations)


def sphere_scan(spec: NormSpec,
                data: LieAlgebraData,
                samples: int = 1000,
                seed: int = 0,
                threads: int | None = None,
                tol_iso: float = 1e-8,
                vanish_tol: float = 1e-8,
                variance_tol: float = 1e-10,
                max_iter: int = 200,
                grad_tol: float = 1e-10) -> ScanReport:
    """S, F, S/F and ln sqrt det g over quasi-uniform A-unit directions, plus the verdict.

    vanishing: max|S| / max F < tol_iso; non-isotropic: var(S/F) > variance_tol;
    anything else is a constant nonzero S/F, which the corollary rules out.
    """
    if samples < 100:
        raise ValueError(f"a sphere scan needs at least 100 samples, got {samples}")
    if data.dim_m != spec.n:
        raise ValueError(f"norm dimension {spec.n} does not match dim m = {data.dim_m}")
    kc = killing_constants(data)
    directions = sphere_directions(spec.A, samples, seed)
    bundles: List[CurvatureAt] = parallel_map(lambda y: curvature_at(spec, data, y, kc), directions, threads)

    f = np.array([b.F for b in bundles])
    s = np.array([b.S_frame for b in bundles])
    lsd = np.array([b.log_sqrt_det for b in bundles])
    ratio = s / f
    factor = ratio / (spec.n + 1)

    max_abs_s = float(np.abs(s).max())
    max_f = float(f.max())
    mean_ratio = float(np.mean(ratio))
    var_ratio = float(np.var(ratio))
    if max_abs_s / max_f < tol_iso:
        verdict = Verdict.VANISHING
    elif var_ratio > variance_tol:
        verdict = Verdict.NON_ISOTROPIC
    else:
        verdict = Verdict.VIOLATION
        logger.warning(f"| constant nonzero S/F = {mean_ratio:.6g} contradicts the isotropy corollary")

    best = refine_distortion_argmax(spec, data, directions[int(np.argmax(lsd))], max_iter, grad_tol, kc)
    s_at_argmax = curvature_at(spec, data, best.y, kc).S_frame
    logger.debug(f"| distortion argmax after {best.iterations} steps, gradient {best.gradient_norm:.3g}")

    return ScanReport(
        sample_count=samples,
        max_abs_S=max_abs_s,
        max_F=max_f,
        mean_S_over_F=mean_ratio,
        var_S_over_F=var_ratio,
        mean_isotropy_factor=float(np.mean(factor)),
        var_isotropy_factor=float(np.var(factor)),
        argmax_distortion=best.y,
        log_sqrt_det_max=best.log_sqrt_det,
        argmax_gradient_norm=best.gradient_norm,
        argmax_iterations=best.iterations,
        S_at_argmax=float(s_at_argmax),
        verdict=verdict,
        directions=directions,
        F=f,
        S=s,
        log_sqrt_det=lsd,
        vanish_tol=vanish_tol,
    )


def einstein_check(spec: NormSpec, data: LieAlgebraData, samples: int = 1000, seed: int = 0,
                   threads: int | None = None) -> bool:
    """Homogeneous Einstein metrics have constant, hence isotropic, S-curvature; it must vanish.

    True when the scan is consistent with that: either S/F varies or S vanishes.
    """
    return sphere_scan(spec, data, samples, seed, threads).corollary_holds
