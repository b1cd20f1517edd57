"""Deterministic low-discrepancy directions on the unit sphere of an inner product."""

import numpy as np
from scipy.stats import norm, qmc


def halton_gaussian(count: int, dim: int, seed: int) -> np.ndarray:
    """Scrambled Halton points pushed through the normal quantile function."""
    sampler = qmc.Halton(d=dim, scramble=True, seed=seed)
    points = np.clip(sampler.random(count), 1e-12, 1.0 - 1e-12)
    return norm.ppf(points)


def sphere_directions(a: np.ndarray, count: int, seed: int = 0) -> np.ndarray:
    """`count` quasi-uniform directions y with y^T A y = 1, shape (count, n)."""
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    z = halton_gaussian(count, n, seed)
    z /= np.linalg.norm(z, axis=1, keepdims=True)
    # A = L L^T, y = L^{-T} z  =>  y^T A y = |z|^2 = 1
    lower = np.linalg.cholesky(a)
    return np.linalg.solve(lower.T, z.T).T
