"""Hypothesis strategies for random valid norms, algebras and directions."""

import numpy as np
from hypothesis import strategies as st

from src.liealg import LieAlgebraData, abelian, heisenberg3, random_bianchi, so3, solvable2, e2
from src.norms import NormSpec, PolynomialProfile

# phi(s) = 1 + s + 0.2 s^2 is strongly convex for |s| <= 1
POLYNOMIAL_PHI = PolynomialProfile((1.0, 1.0, 0.2))

seeds = st.integers(min_value=0, max_value=2 ** 32 - 1)


def random_spd(rng: np.random.Generator, n: int) -> np.ndarray:
    m = rng.normal(size=(n, n))
    return m @ m.T / n + 0.5 * np.eye(n)


def random_u(rng: np.random.Generator, a: np.ndarray, b: float) -> np.ndarray:
    """A vector with |u|_A = b."""
    u = rng.normal(size=a.shape[0])
    return b * u / np.sqrt(u @ a @ u)


def random_direction(rng: np.random.Generator, n: int) -> np.ndarray:
    y = rng.normal(size=n)
    while np.linalg.norm(y) < 1e-3:
        y = rng.normal(size=n)
    return y


def random_norm(rng: np.random.Generator, n: int, family: str) -> NormSpec:
    a = random_spd(rng, n)
    if family == "riemannian":
        return NormSpec.riemannian(a)
    if family == "randers":
        return NormSpec.randers(a, random_u(rng, a, rng.uniform(0.0, 0.8)))
    return NormSpec.alpha_beta(a, random_u(rng, a, rng.uniform(0.0, 0.5)), POLYNOMIAL_PHI)


def random_algebra(rng: np.random.Generator, kind: str) -> LieAlgebraData:
    if kind == "abelian":
        return abelian(int(rng.integers(2, 5)))
    if kind == "bianchi":
        return random_bianchi(int(rng.integers(0, 2 ** 31)))
    return {"heisenberg3": heisenberg3, "so3": so3, "solvable2": solvable2, "e2": e2}[kind]()


families = st.sampled_from(["riemannian", "randers", "alpha_beta"])
algebra_kinds = st.sampled_from(["abelian", "heisenberg3", "so3", "solvable2", "e2", "bianchi"])


@st.composite
def norms(draw, n: int | None = None):
    rng = np.random.default_rng(draw(seeds))
    n = n or draw(st.integers(min_value=2, max_value=5))
    return random_norm(rng, n, draw(families))


@st.composite
def triples(draw):
    """(algebra, norm on m, nonzero direction)."""
    rng = np.random.default_rng(draw(seeds))
    data = random_algebra(rng, draw(algebra_kinds))
    spec = random_norm(rng, data.dim_m, draw(families))
    return data, spec, random_direction(rng, data.dim_m)
