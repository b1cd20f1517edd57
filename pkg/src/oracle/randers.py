"""Closed forms for Randers norms F = alpha + beta in an adapted orthonormal frame.

For a direction v with alpha(v) = 1 choose an alpha-orthonormal basis
v_1, ..., v_n of m with u = b v_1 and v = a v_1 + a' v_2. In that frame the
fundamental tensor, its inverse, the mean Cartan torsion and the distortion
gradient at v have short closed forms; they serve as an independent oracle
for the generic jet pipeline.
"""

from dataclasses import dataclass
from typing import NamedTuple, Tuple

import numpy as np

from src.exception import DomainError, UnsupportedCaseError
from src.liealg import LieAlgebraData, bracket_m
from src.norms import Family, NormSpec, f_value


@dataclass(frozen=True)
class RandersAdapted:
    b: float
    a: float
    a_prime: float
    n: int

    def __post_init__(self):
        if not 0.0 <= self.b < 1.0:
            raise DomainError(f"b must lie in [0, 1), got {self.b}")
        if abs(self.a * self.a + self.a_prime * self.a_prime - 1.0) > 1e-12:
            raise DomainError(f"a^2 + a'^2 must equal 1, got {self.a ** 2 + self.a_prime ** 2}")
        if self.n < 2:
            raise DomainError(f"the adapted frame needs n >= 2, got {self.n}")

    @classmethod
    def from_angle(cls, b: float, a: float, n: int) -> "RandersAdapted":
        """a' >= 0 completed from a."""
        return cls(b, a, float(np.sqrt(max(0.0, 1.0 - a * a))), n)

    def spec(self) -> NormSpec:
        """The norm in adapted coordinates: A = identity, u = b e_1."""
        u = np.zeros(self.n)
        u[0] = self.b
        return NormSpec.randers(np.eye(self.n), u)

    def direction(self) -> np.ndarray:
        v = np.zeros(self.n)
        v[0], v[1] = self.a, self.a_prime
        return v


class BlockEntries(NamedTuple):
    e11: float
    e12: float
    e22: float
    eii: float


def randers_g_closed(p: RandersAdapted) -> BlockEntries:
    b, a, ap = p.b, p.a, p.a_prime
    return BlockEntries(
        e11=1.0 + b * b + 3.0 * b * a - b * a ** 3,
        e12=b * ap ** 3,
        e22=1.0 + b * a ** 3,
        eii=1.0 + b * a,
    )


def randers_ginv_closed(p: RandersAdapted) -> BlockEntries:
    b, a, ap = p.b, p.a, p.a_prime
    k = (1.0 + b * a) ** -3
    return BlockEntries(
        e11=k * (1.0 + b * a ** 3),
        e12=-k * b * ap ** 3,
        e22=k * (1.0 + b * b + 3.0 * b * a - b * a ** 3),
        eii=1.0 / (1.0 + b * a),
    )


def randers_cartan_closed(p: RandersAdapted) -> Tuple[float, float]:
    """(I_1, I_2); every other component vanishes."""
    b, a, ap, n = p.b, p.a, p.a_prime, p.n
    k = (n + 1) / (2.0 * (1.0 + b * a))
    return k * b * ap * ap, -k * b * a * ap


def randers_w_closed(p: RandersAdapted) -> Tuple[float, float]:
    """Components of the distortion gradient along v_1 and v_2."""
    b, a, ap, n = p.b, p.a, p.a_prime, p.n
    k = (n + 1) / (2.0 * (1.0 + b * a) ** 3)
    return k * b * ap * ap, -k * b * ap * (a + b)


def block_matrix(entries: BlockEntries, n: int) -> np.ndarray:
    """Full n x n matrix from the (1,2)-block and the repeated diagonal entry."""
    out = np.eye(n) * entries.eii
    out[0, 0], out[0, 1], out[1, 0], out[1, 1] = entries.e11, entries.e12, entries.e12, entries.e22
    return out


def _a_inner(a: np.ndarray, x: np.ndarray, y: np.ndarray) -> float:
    return float(x @ a @ y)


def _orthonormal_complement(a: np.ndarray, basis: list) -> list:
    """Extend an A-orthonormal list to a full basis by Gram-Schmidt over the standard basis."""
    n = a.shape[0]
    out = list(basis)
    for k in range(n):
        if len(out) == n:
            break
        e = np.zeros(n)
        e[k] = 1.0
        for q in out:
            e = e - _a_inner(a, e, q) * q
        length = np.sqrt(max(_a_inner(a, e, e), 0.0))
        if length > 1e-8:
            out.append(e / length)
    return out


def adapt_randers(spec: NormSpec, v) -> Tuple[RandersAdapted, np.ndarray]:
    """Rotate (A, u, v) into the adapted frame.

    Returns the adapted scalars and the frame E whose columns are A-orthonormal
    with u = b E[:, 0] and v / alpha(v) = a E[:, 0] + a' E[:, 1]. When v is
    parallel to u any unit vector A-orthogonal to u serves as E[:, 1].
    """
    if spec.family is not Family.RANDERS:
        raise UnsupportedCaseError("no closed-form oracle: the norm is not Randers")
    a_mat = spec.A
    v = np.asarray(v, dtype=float)
    alpha_v = np.sqrt(_a_inner(a_mat, v, v))
    if alpha_v == 0.0:
        raise DomainError("cannot adapt a frame to the zero vector")
    v_unit = v / alpha_v
    b = spec.alpha_norm_u
    e1 = spec.u / b if b > 0.0 else v_unit
    a = float(np.clip(_a_inner(a_mat, v_unit, e1), -1.0, 1.0))
    rest = v_unit - a * e1
    a_prime = float(np.sqrt(max(_a_inner(a_mat, rest, rest), 0.0)))
    basis = [e1]
    if a_prime > 1e-10:
        basis.append(rest / a_prime)
    else:
        a_prime = 0.0
    frame = np.column_stack(_orthonormal_complement(a_mat, basis))
    a_prime = float(np.sqrt(max(0.0, 1.0 - a * a))) if a_prime > 0.0 else 0.0
    return RandersAdapted(b, a, a_prime, spec.n), frame


def randers_s_closed(spec: NormSpec, data: LieAlgebraData, v) -> float:
    """S(v) = (n + 1) / (2 F(v)) * (alpha(v) <[v, u]_m, u> + <[v, u]_m, v>), alpha inner products."""
    if spec.family is not Family.RANDERS:
        raise UnsupportedCaseError("no closed-form oracle: the norm is not Randers")
    v = np.asarray(v, dtype=float)
    f = f_value(spec, v)
    alpha = float(np.sqrt(_a_inner(spec.A, v, v)))
    z = bracket_m(data, v, spec.u)
    return (spec.n + 1) / (2.0 * f) * (alpha * _a_inner(spec.A, z, spec.u) + _a_inner(spec.A, z, v))
