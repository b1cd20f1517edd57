"""Central finite differences as an independent check on jet derivatives."""

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from src.exception import DomainError
from src.jets.jet import Jet3, constant, variables

ScalarFn = Callable[[Sequence], object]


@dataclass
class FdDiscrepancy:
    """Largest absolute discrepancy between jet and finite-difference derivatives, per order."""

    order1: float
    order2: float
    order3: float

    @property
    def max(self) -> float:
        return max(self.order1, self.order2, self.order3)

    def dict(self):
        return {"order1": self.order1, "order2": self.order2, "order3": self.order3}


def _default_jet(f: ScalarFn) -> Callable[[np.ndarray], Jet3]:
    def jet_fn(y: np.ndarray) -> Jet3:
        out = f(variables(y))
        if not isinstance(out, Jet3):
            # constant expression
            out = constant(float(out), y.shape[0])
        return out
    return jet_fn


def fd_check(f: ScalarFn,
             y: Sequence[float],
             h: float = 1e-5,
             jet_fn: Callable[[np.ndarray], Jet3] | None = None) -> FdDiscrepancy:
    """Compare jet derivatives of f at y with central differences of step h.

    `f` is evaluated on plain float vectors; its jet comes from `jet_fn`, or from
    running `f` itself on seeded jets when `jet_fn` is None. Order 1 differences
    values of f, order 2 differences the jet gradient and order 3 the jet Hessian,
    so every order is checked against the one below it with O(h^2) error.
    """
    if h <= 0:
        raise DomainError(f"finite-difference step must be positive, got {h}")
    y = np.asarray(y, dtype=float)
    n = y.shape[0]
    jet_fn = jet_fn or _default_jet(f)
    center = jet_fn(y)

    grad = np.empty(n)
    hess = np.empty((n, n))
    third = np.empty((n, n, n))
    for k in range(n):
        step = np.zeros(n)
        step[k] = h
        grad[k] = (float(f(y + step)) - float(f(y - step))) / (2.0 * h)
        plus, minus = jet_fn(y + step), jet_fn(y - step)
        hess[:, k] = (plus.grad - minus.grad) / (2.0 * h)
        third[:, :, k] = (plus.hess - minus.hess) / (2.0 * h)

    return FdDiscrepancy(
        order1=float(np.max(np.abs(grad - center.grad))),
        order2=float(np.max(np.abs(hess - center.hess))),
        order3=float(np.max(np.abs(third - center.third))),
    )
