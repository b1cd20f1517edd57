"""Structure constants of g = h + m and the Killing-frame constants on m.

Storage convention: ``C[i, j, k]`` is the k-th component of ``[e_i, e_j]``.
The first ``dim_h`` basis vectors span h, the last ``dim_m`` span m.
"""

from dataclasses import dataclass, field
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from src.exception import DimensionError, LieAlgebraError

TOLERANCE = 1e-12

BracketEntry = Tuple[int, int, int, float]


@dataclass(frozen=True, eq=False)
class LieAlgebraData:
    dim_h: int
    dim_m: int
    C: np.ndarray
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.dim_h < 0 or self.dim_m < 1:
            raise LieAlgebraError(f"need dim_h >= 0 and dim_m >= 1, got {self.dim_h}, {self.dim_m}")
        c = np.array(self.C, dtype=float)
        g = self.dim_h + self.dim_m
        if c.shape != (g, g, g):
            raise DimensionError(f"structure constants must have shape {(g, g, g)}, got {c.shape}")
        c.setflags(write=False)
        object.__setattr__(self, "C", c)

    @property
    def dim_g(self) -> int:
        return self.dim_h + self.dim_m

    @property
    def m_slice(self) -> slice:
        return slice(self.dim_h, self.dim_g)

    @classmethod
    def from_entries(cls, dim_h: int, dim_m: int, entries: Iterable[BracketEntry], name: str = "") -> "LieAlgebraData":
        """Densify sparse 1-based (i, j, k, value) entries with antisymmetric completion.

        Supplying both (i, j, k) and (j, i, k) is accepted only when the values are
        negatives of each other; (i, i, k) must be zero.
        """
        dim_g = dim_h + dim_m
        c = np.zeros((dim_g, dim_g, dim_g))
        given = {}
        for position, (i, j, k, value) in enumerate(entries):
            for index in (i, j, k):
                if not 1 <= int(index) <= dim_g:
                    raise LieAlgebraError(f"bracket entry {position}: index {index} outside 1..{dim_g}")
            i, j, k, value = int(i) - 1, int(j) - 1, int(k) - 1, float(value)
            if i == j:
                if value != 0.0:
                    raise LieAlgebraError(f"bracket entry {position}: [e{i + 1}, e{i + 1}] must vanish")
                continue
            if (i, j, k) in given and given[(i, j, k)] != value:
                raise LieAlgebraError(f"bracket entry {position}: ({i + 1}, {j + 1}, {k + 1}) given twice")
            if (j, i, k) in given and given[(j, i, k)] != -value:
                raise LieAlgebraError(
                    f"bracket entry {position}: ({i + 1}, {j + 1}, {k + 1}) conflicts with ({j + 1}, {i + 1}, {k + 1})")
            given[(i, j, k)] = value
            c[i, j, k] = value
            c[j, i, k] = -value
        return cls(dim_h, dim_m, c, name)

    def entries(self) -> List[BracketEntry]:
        """Sparse 1-based entries with i < j, the inverse of `from_entries`."""
        out = []
        for i, j, k in zip(*np.nonzero(self.C)):
            if i < j:
                out.append((int(i) + 1, int(j) + 1, int(k) + 1, float(self.C[i, j, k])))
        return out

    def same_as(self, other: "LieAlgebraData") -> bool:
        return self.dim_h == other.dim_h and self.dim_m == other.dim_m and np.array_equal(self.C, other.C)

    def isotropy_action(self) -> np.ndarray:
        """ad(h_a) projected to m: ``M[a] @ y = [h_a, y]_m`` for y in m, shape (dim_h, dim_m, dim_m)."""
        m = self.m_slice
        return np.ascontiguousarray(self.C[: self.dim_h, m, m].transpose(0, 2, 1))

    def dict(self):
        return {"name": self.name, "dim_h": self.dim_h, "dim_m": self.dim_m, "brackets": self.entries()}


@dataclass(frozen=True, eq=False)
class KillingConstants:
    """``c[l, j, k] = c^k_{lj}`` with [v_l, v_j]_m = -c^k_{lj} v_k."""

    c: np.ndarray

    @property
    def n(self) -> int:
        return self.c.shape[0]


@dataclass
class Violation:
    kind: str
    max_residual: float

    def dict(self):
        return {"kind": self.kind, "max_residual": self.max_residual}


def _check_length(vector, length: int, label: str) -> np.ndarray:
    vector = np.asarray(vector, dtype=float)
    if vector.shape != (length,):
        raise DimensionError(f"{label} must have length {length}, got shape {vector.shape}")
    return vector


def bracket(data: LieAlgebraData, x: Sequence[float], y: Sequence[float]) -> np.ndarray:
    """[X, Y]^k = C^k_{ij} X^i Y^j on g."""
    x = _check_length(x, data.dim_g, "X")
    y = _check_length(y, data.dim_g, "Y")
    return np.einsum("ijk,i,j->k", data.C, x, y)


def bracket_m(data: LieAlgebraData, y1: Sequence[float], y2: Sequence[float]) -> np.ndarray:
    """pr_m [y1, y2] for y1, y2 in m."""
    y1 = _check_length(y1, data.dim_m, "y1")
    y2 = _check_length(y2, data.dim_m, "y2")
    m = data.m_slice
    return np.einsum("ijk,i,j->k", data.C[m, m, m], y1, y2)


def killing_constants(data: LieAlgebraData) -> KillingConstants:
    m = data.m_slice
    c = -np.array(data.C[m, m, m])
    c.setflags(write=False)
    return KillingConstants(c)


def jacobi_residual(c: np.ndarray) -> float:
    """max over i, j, k, l of the cyclic sum C^m_ij C^l_mk + C^m_jk C^l_mi + C^m_ki C^l_mj."""
    if c.size == 0:
        return 0.0
    j = (np.einsum("ijm,mkl->ijkl", c, c)
         + np.einsum("jkm,mil->ijkl", c, c)
         + np.einsum("kim,mjl->ijkl", c, c))
    return float(np.abs(j).max())


def validate(data: LieAlgebraData, tol: float = TOLERANCE) -> List[Violation]:
    """Antisymmetry, Jacobi and subalgebra checks; empty iff all hold within tol."""
    c = data.C
    violations = []
    antisym = float(np.abs(c + c.transpose(1, 0, 2)).max()) if c.size else 0.0
    if antisym > tol:
        violations.append(Violation("antisymmetry", antisym))
    jacobi = jacobi_residual(c)
    if jacobi > tol:
        violations.append(Violation("jacobi", jacobi))
    h = data.dim_h
    if h:
        leak = float(np.abs(c[:h, :h, h:]).max())
        if leak > tol:
            violations.append(Violation("subalgebra", leak))
    return violations


def direct_sum(a: LieAlgebraData, b: LieAlgebraData, name: str = "") -> LieAlgebraData:
    """a + b with the h-first basis order: (h_a, h_b, m_a, m_b)."""
    ga, gb = a.dim_g, b.dim_g
    # new index of every old basis vector
    order_a = list(range(a.dim_h)) + list(range(a.dim_h + b.dim_h, a.dim_h + b.dim_h + a.dim_m))
    order_b = list(range(a.dim_h, a.dim_h + b.dim_h)) + list(range(a.dim_h + b.dim_h + a.dim_m, ga + gb))
    c = np.zeros((ga + gb,) * 3)
    ia = np.array(order_a, dtype=int)
    ib = np.array(order_b, dtype=int)
    c[np.ix_(ia, ia, ia)] = a.C
    c[np.ix_(ib, ib, ib)] = b.C
    return LieAlgebraData(a.dim_h + b.dim_h, a.dim_m + b.dim_m, c, name or f"{a.name}+{b.name}")
