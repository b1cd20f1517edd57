"""Built-in Lie algebras with a designated split g = h + m."""

import numpy as np

from src.liealg.algebra import LieAlgebraData, direct_sum
from src.registry import ALGEBRA


@ALGEBRA.register_module(name="abelian", force=True)
def abelian(n: int = 3) -> LieAlgebraData:
    return LieAlgebraData(0, n, np.zeros((n, n, n)), f"abelian{n}")


@ALGEBRA.register_module(name="heisenberg3", force=True)
def heisenberg3() -> LieAlgebraData:
    # [e1, e2] = e3
    return LieAlgebraData.from_entries(0, 3, [(1, 2, 3, 1.0)], "heisenberg3")


@ALGEBRA.register_module(name="so3", force=True)
def so3() -> LieAlgebraData:
    # [e1, e2] = e3 cyclically
    return LieAlgebraData.from_entries(0, 3, [(1, 2, 3, 1.0), (2, 3, 1, 1.0), (3, 1, 2, 1.0)], "so3")


@ALGEBRA.register_module(name="solvable2", force=True)
def solvable2() -> LieAlgebraData:
    # [e1, e2] = e2
    return LieAlgebraData.from_entries(0, 2, [(1, 2, 2, 1.0)], "solvable2")


@ALGEBRA.register_module(name="e2", force=True)
def e2() -> LieAlgebraData:
    """Euclidean motions of the plane: h = rotations r, m = translations t1, t2.

    Basis order (r, t1, t2): [r, t1] = t2, [r, t2] = -t1, [t1, t2] = 0.
    """
    return LieAlgebraData.from_entries(1, 2, [(1, 2, 3, 1.0), (1, 3, 2, -1.0)], "e2")


@ALGEBRA.register_module(name="e2xr1", force=True)
def e2xr1() -> LieAlgebraData:
    """e2 + R; the central direction of m is fixed by the rotations."""
    return direct_sum(e2(), abelian(1), "e2xr1")


@ALGEBRA.register_module(name="direct_sum", force=True)
def direct_sum_of(parts: list) -> LieAlgebraData:
    """Direct sum of registered algebras, e.g. ``parts=["so3", "solvable2"]``."""
    algebras = [build_algebra(part) for part in parts]
    out = algebras[0]
    for other in algebras[1:]:
        out = direct_sum(out, other)
    return out


@ALGEBRA.register_module(name="bianchi", force=True)
def random_bianchi(seed: int = 0, scale: float = 1.0) -> LieAlgebraData:
    """A random 3-dimensional Lie algebra in Bianchi form.

    [e_i, e_j] = eps_ijk N^kl e_l + a_j e_i - a_i e_j with N symmetric and N a = 0,
    which is exactly the condition for the Jacobi identity.
    """
    rng = np.random.default_rng(seed)
    a = rng.normal(size=3) * scale
    if rng.random() < 0.5:
        a[:] = 0.0
    n = rng.normal(size=(3, 3)) * scale
    n = 0.5 * (n + n.T)
    if np.any(a):
        p = np.eye(3) - np.outer(a, a) / (a @ a)
        n = p @ n @ p
    eps = np.zeros((3, 3, 3))
    eps[0, 1, 2] = eps[1, 2, 0] = eps[2, 0, 1] = 1.0
    eps[0, 2, 1] = eps[2, 1, 0] = eps[1, 0, 2] = -1.0
    c = np.einsum("ijk,kl->ijl", eps, n)
    delta = np.eye(3)
    c += np.einsum("j,il->ijl", a, delta) - np.einsum("i,jl->ijl", a, delta)
    return LieAlgebraData(0, 3, c, f"bianchi{seed}")


def build_algebra(descriptor) -> LieAlgebraData:
    """Build from a registry name (``"so3"``, ``"abelian3"``) or a dict with ``type``."""
    if isinstance(descriptor, LieAlgebraData):
        return descriptor
    if isinstance(descriptor, str):
        if descriptor.startswith("abelian") and descriptor[len("abelian"):].isdigit():
            return abelian(int(descriptor[len("abelian"):]))
        descriptor = {"type": descriptor}
    return ALGEBRA.build(dict(descriptor))
