"""Truncated Taylor jets of order 3 in n real variables.

A `Jet3` carries the value, gradient, Hessian and third-derivative tensor of a
scalar expression at a fixed point. Arithmetic propagates all four parts
exactly through the Leibniz rule and the order-3 Faa di Bruno formula, so the
derivatives of F^2 needed for g_ij and dg_ij/dy^k are exact up to rounding.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence, Tuple, Union

import numpy as np

from src.exception import DimensionError, DomainError, SingularityError

# outer(x) -> (f(x), f'(x), f''(x), f'''(x))
Derivatives3 = Tuple[float, float, float, float]
Outer = Callable[[float], Derivatives3]


@lru_cache(maxsize=None)
def _canonical_index3(n: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    idx = np.sort(np.stack(np.indices((n, n, n))), axis=0)
    return idx[0], idx[1], idx[2]


def _sym2(h: np.ndarray) -> np.ndarray:
    # copy the upper triangle onto the lower one: exact symmetry
    return np.triu(h) + np.triu(h, 1).T


def _sym3(t: np.ndarray) -> np.ndarray:
    i, j, k = _canonical_index3(t.shape[0])
    return t[i, j, k]


def _outer3(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> np.ndarray:
    return np.einsum("i,j,k->ijk", a, b, c)


def _hess_times_grad(h: np.ndarray, g: np.ndarray) -> np.ndarray:
    """H_ij g_k + H_ik g_j + H_jk g_i."""
    hg = np.einsum("ij,k->ijk", h, g)
    return hg + hg.transpose(0, 2, 1) + hg.transpose(2, 1, 0)


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class Jet3:
    value: float
    grad: np.ndarray
    hess: np.ndarray
    third: np.ndarray

    def __post_init__(self):
        n = self.grad.shape[0]
        if self.hess.shape != (n, n) or self.third.shape != (n, n, n):
            raise DimensionError(
                f"inconsistent jet shapes: grad {self.grad.shape}, hess {self.hess.shape}, third {self.third.shape}"
            )
        object.__setattr__(self, "value", float(self.value))
        _frozen(self.grad)
        _frozen(self.hess)
        _frozen(self.third)
        if __debug__:
            assert self.is_symmetric(), "jet hess and third must be exactly symmetric"

    @property
    def n(self) -> int:
        return self.grad.shape[0]

    @classmethod
    def build(cls, value: float, grad: np.ndarray, hess: np.ndarray, third: np.ndarray) -> "Jet3":
        """Construct from raw parts, enforcing exact index symmetry."""
        return cls(float(value), np.array(grad, dtype=float), _sym2(np.asarray(hess, dtype=float)),
                   _sym3(np.asarray(third, dtype=float)))

    def is_symmetric(self) -> bool:
        if not np.array_equal(self.hess, self.hess.T):
            return False
        t = self.third
        return all(np.array_equal(t, t.transpose(p)) for p in [(0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)])

    def dict(self):
        return {"value": self.value, "grad": self.grad, "hess": self.hess, "third": self.third}

    def __repr__(self) -> str:
        return f"Jet3(n={self.n}, value={self.value!r})"

    # operator sugar so the same expression works on floats and jets
    def __add__(self, other):
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        return sub(self, other)

    def __rsub__(self, other):
        return sub(other, self)

    def __mul__(self, other):
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return div(self, other)

    def __rtruediv__(self, other):
        return div(other, self)

    def __neg__(self):
        return scale(self, -1.0)

    def __pos__(self):
        return self

    def __pow__(self, exponent):
        if isinstance(exponent, (int, np.integer)):
            return powi(self, int(exponent))
        return powf(self, float(exponent))


Scalar = Union[float, int, Jet3]


def constant(value: float, n: int) -> Jet3:
    return Jet3(float(value), np.zeros(n), np.zeros((n, n)), np.zeros((n, n, n)))


def seed(index: int, value: float, n: int) -> Jet3:
    """Jet of the coordinate function y^index at a point whose index-th coordinate is `value`."""
    if n < 1 or not 0 <= index < n:
        raise DimensionError(f"seed index {index} out of range for dimension {n}")
    grad = np.zeros(n)
    grad[index] = 1.0
    return Jet3(float(value), grad, np.zeros((n, n)), np.zeros((n, n, n)))


def variables(y: Sequence[float]) -> list[Jet3]:
    """Seeded jets for every coordinate of the point y."""
    y = np.asarray(y, dtype=float)
    return [seed(i, y[i], y.shape[0]) for i in range(y.shape[0])]


def linear(c: np.ndarray, y: np.ndarray) -> Jet3:
    """Jet of the linear form y -> <c, y>."""
    c = np.asarray(c, dtype=float)
    n = c.shape[0]
    return Jet3(float(c @ y), c.copy(), np.zeros((n, n)), np.zeros((n, n, n)))


def quadratic(a: np.ndarray, y: np.ndarray) -> Jet3:
    """Jet of the quadratic form y -> y^T A y for symmetric A."""
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    ay = a @ y
    return Jet3(float(y @ ay), 2.0 * ay, _sym2(2.0 * a), np.zeros((n, n, n)))


def _promote(x: Scalar, n: int) -> Jet3:
    if isinstance(x, Jet3):
        if x.n != n:
            raise DimensionError(f"jet dimension mismatch: {x.n} != {n}")
        return x
    return constant(float(x), n)


def _pair(f: Scalar, g: Scalar) -> Tuple[Jet3, Jet3]:
    if isinstance(f, Jet3):
        return f, _promote(g, f.n)
    if isinstance(g, Jet3):
        return _promote(f, g.n), g
    raise TypeError("at least one operand must be a Jet3")


def add(f: Scalar, g: Scalar) -> Jet3:
    f, g = _pair(f, g)
    return Jet3(f.value + g.value, f.grad + g.grad, f.hess + g.hess, f.third + g.third)


def sub(f: Scalar, g: Scalar) -> Jet3:
    f, g = _pair(f, g)
    return Jet3(f.value - g.value, f.grad - g.grad, f.hess - g.hess, f.third - g.third)


def scale(f: Jet3, c: float) -> Jet3:
    c = float(c)
    return Jet3(c * f.value, c * f.grad, c * f.hess, c * f.third)


def mul(f: Scalar, g: Scalar) -> Jet3:
    if not isinstance(g, Jet3):
        return scale(f, g)
    if not isinstance(f, Jet3):
        return scale(g, f)
    f, g = _pair(f, g)
    fg = np.outer(f.grad, g.grad)
    hess = f.hess * g.value + fg + fg.T + f.value * g.hess
    third = (f.third * g.value
             + _hess_times_grad(f.hess, g.grad)
             + _hess_times_grad(g.hess, f.grad)
             + f.value * g.third)
    return Jet3(f.value * g.value, f.grad * g.value + f.value * g.grad, _sym2(hess), _sym3(third))


def compose1(outer: Outer, inner: Jet3) -> Jet3:
    """Jet of outer(inner) by the order-3 chain rule.

    `outer` maps a real x to (f, f', f'', f''') evaluated at x.
    """
    d0, d1, d2, d3 = (float(d) for d in outer(inner.value))
    g, h = inner.grad, inner.hess
    hess = d2 * np.outer(g, g) + d1 * h
    third = d3 * _outer3(g, g, g) + d2 * _hess_times_grad(h, g) + d1 * inner.third
    return Jet3(d0, d1 * g, _sym2(hess), _sym3(third))


def _reciprocal(x: float) -> Derivatives3:
    r = 1.0 / x
    return r, -r * r, 2.0 * r ** 3, -6.0 * r ** 4


def div(f: Scalar, g: Scalar) -> Jet3:
    f, g = _pair(f, g)
    if g.value == 0.0:
        raise SingularityError("division by a jet with zero value")
    return mul(f, compose1(_reciprocal, g))


def _sqrt(x: float) -> Derivatives3:
    s = np.sqrt(x)
    return s, 0.5 / s, -0.25 / (s * x), 0.375 / (s * x * x)


def sqrt(f: Scalar) -> Scalar:
    if not isinstance(f, Jet3):
        if f <= 0:
            raise DomainError(f"sqrt of nonpositive value {f}")
        return float(np.sqrt(f))
    if f.value <= 0.0:
        raise DomainError(f"sqrt of jet with nonpositive value {f.value}")
    return compose1(_sqrt, f)


def powi(f: Jet3, k: int) -> Jet3:
    """Integer power; negative exponents require a nonzero value."""
    k = int(k)
    if k == 0:
        return constant(1.0, f.n)
    if k < 0 and f.value == 0.0:
        raise SingularityError("negative power of a jet with zero value")

    def outer(x: float) -> Derivatives3:
        def term(m: int, c: float) -> float:
            return 0.0 if c == 0.0 else c * x ** m
        return (x ** k, term(k - 1, k), term(k - 2, k * (k - 1)), term(k - 3, k * (k - 1) * (k - 2)))

    return compose1(outer, f)


def powf(f: Jet3, p: float) -> Jet3:
    """Real power of a jet with positive value."""
    p = float(p)
    if f.value <= 0.0:
        raise DomainError(f"fractional power of jet with nonpositive value {f.value}")

    def outer(x: float) -> Derivatives3:
        return (x ** p, p * x ** (p - 1), p * (p - 1) * x ** (p - 2), p * (p - 1) * (p - 2) * x ** (p - 3))

    return compose1(outer, f)


def log(f: Jet3) -> Jet3:
    if f.value <= 0.0:
        raise DomainError(f"log of jet with nonpositive value {f.value}")

    def outer(x: float) -> Derivatives3:
        r = 1.0 / x
        return np.log(x), r, -r * r, 2.0 * r ** 3

    return compose1(outer, f)
