"""Busemann-Hausdorff volume coefficient sigma = Vol(B^n) / Vol{ y : F(y) < 1 }."""

from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from src.exception import DomainError
from src.logger import logger
from src.norms import Family, NormSpec, f_values, sphere_directions
from src.utils import parallel_map

CHUNK = 100_000


@dataclass
class SigmaEstimate:
    sigma: float
    standard_error: float
    samples: int
    inside_fraction: float
    box_volume: float
    radius: float

    def dict(self):
        return {
            "sigma": self.sigma,
            "standard_error": self.standard_error,
            "samples": self.samples,
            "inside_fraction": self.inside_fraction,
            "box_volume": self.box_volume,
            "radius": self.radius,
        }


def unit_ball_volume(n: int) -> float:
    return float(np.exp(0.5 * n * np.log(np.pi) - gammaln(0.5 * n + 1.0)))


def exact_sigma_randers(b: float, n: int, det_a: float = 1.0) -> float:
    """sigma = (1 - b^2)^((n + 1) / 2) sqrt(det A) for F = alpha + beta with |u|_A = b.

    b = 0 gives the Riemannian value sqrt(det A).
    """
    if not 0.0 <= b < 1.0:
        raise DomainError(f"b must lie in [0, 1), got {b}")
    return float((1.0 - b * b) ** (0.5 * (n + 1)) * np.sqrt(det_a))


def indicatrix_radius(spec: NormSpec, margin: float = 1.05, directions: int = 2000, seed: int = 0) -> float:
    """An alpha-radius containing the unit ball of F.

    Exact for Riemannian and Randers norms; otherwise 1 / min F over the
    alpha-sphere, estimated from samples and widened by `margin`.
    """
    if spec.family is Family.RIEMANNIAN:
        return 1.0
    if spec.family is Family.RANDERS:
        return 1.0 / (1.0 - spec.alpha_norm_u)
    ys = sphere_directions(spec.A, directions, seed)
    return margin / float(f_values(spec, ys).min())


def _count_inside(spec: NormSpec, half_widths: np.ndarray, seed: np.random.SeedSequence, count: int) -> int:
    rng = np.random.default_rng(seed)
    points = rng.uniform(-1.0, 1.0, size=(count, half_widths.shape[0])) * half_widths
    values = f_values(spec, points)
    return int(np.count_nonzero(values < 1.0))


def bh_sigma(spec: NormSpec,
             mc_samples: int = 1_000_000,
             seed: int = 0,
             threads: int | None = None,
             margin: float = 1.05) -> SigmaEstimate:
    """Monte Carlo estimate of sigma with its standard error.

    Points are uniform in the box |y_i| <= R sqrt((A^-1)_ii), which contains
    the alpha-ball of radius R and hence the indicatrix. Chunks draw from
    spawned seed sequences, so the estimate depends on the seed only.
    """
    if mc_samples < 10_000:
        raise ValueError(f"sigma needs at least 10000 Monte Carlo samples, got {mc_samples}")
    spec.ensure_valid()
    n = spec.n
    radius = indicatrix_radius(spec, margin, seed=seed)
    half_widths = radius * np.sqrt(np.diag(np.linalg.inv(spec.A)))
    box_volume = float(np.prod(2.0 * half_widths))

    sizes = [CHUNK] * (mc_samples // CHUNK)
    if mc_samples % CHUNK:
        sizes.append(mc_samples % CHUNK)
    streams = np.random.SeedSequence(seed).spawn(len(sizes))
    counts = parallel_map(lambda job: _count_inside(spec, half_widths, *job), list(zip(streams, sizes)), threads)

    inside = sum(counts)
    if inside == 0:
        raise DomainError("no Monte Carlo sample fell inside the indicatrix")
    p = inside / mc_samples
    sigma = unit_ball_volume(n) / (box_volume * p)
    standard_error = sigma * float(np.sqrt((1.0 - p) / (mc_samples * p)))
    logger.debug(f"| sigma: {inside}/{mc_samples} inside a box of volume {box_volume:.6g}")
    return SigmaEstimate(sigma, standard_error, mc_samples, p, box_volume, radius)
