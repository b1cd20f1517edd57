from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np

from src.exception import DomainError
from src.norms.sampling import sphere_directions
from src.norms.spec import Family, NormSpec, f_squared_jet, f_values


@dataclass
class NormDiagnostics:
    spd_ok: bool
    randers_bound_ok: bool
    alpha_norm_u: float
    phi_positive_ok: bool = True
    convexity_samples: List[Tuple[np.ndarray, float]] = field(default_factory=list)

    @property
    def min_eigenvalue(self) -> float:
        if not self.convexity_samples:
            return float("nan")
        return min(eig for _, eig in self.convexity_samples)

    @property
    def convex_ok(self) -> bool:
        return bool(self.convexity_samples) and self.min_eigenvalue > 0.0

    @property
    def ok(self) -> bool:
        return self.spd_ok and self.randers_bound_ok and self.phi_positive_ok and self.convex_ok

    def violations(self) -> List[Tuple[str, float]]:
        """(check name, offending quantity) for every failed check."""
        out = []
        if not self.spd_ok:
            out.append(("A positive definite", float("nan")))
        if not self.randers_bound_ok:
            out.append(("Randers bound |u|_A < 1", self.alpha_norm_u))
        if not self.phi_positive_ok:
            out.append(("phi > 0 on |s| <= |u|_A", self.alpha_norm_u))
        if self.spd_ok and not self.convex_ok:
            out.append(("g_ij positive definite", self.min_eigenvalue))
        return out

    def dict(self):
        return {
            "spd_ok": self.spd_ok,
            "randers_bound_ok": self.randers_bound_ok,
            "alpha_norm_u": self.alpha_norm_u,
            "phi_positive_ok": self.phi_positive_ok,
            "convexity_sample_count": len(self.convexity_samples),
            "min_eigenvalue": self.min_eigenvalue,
        }


def validate(spec: NormSpec, sample_count: int = 1000, seed: int = 0) -> NormDiagnostics:
    """SPD check of A, the Randers bound, and strong convexity of g_ij on sampled indicatrix directions.

    Returns diagnostics; callers decide whether to abort.
    """
    if sample_count < 1:
        raise ValueError("sample_count must be at least 1")

    eigenvalues = np.linalg.eigvalsh(spec.A)
    spd_ok = bool(np.allclose(spec.A, spec.A.T) and eigenvalues.min() > 0.0)
    alpha_norm_u = spec.alpha_norm_u if spd_ok else float("nan")
    randers_bound_ok = True
    if spec.family is Family.RANDERS:
        randers_bound_ok = spd_ok and alpha_norm_u < 1.0
    phi_positive_ok = True
    if spec.family is Family.ALPHA_BETA and spd_ok:
        s = np.linspace(-alpha_norm_u, alpha_norm_u, 201)
        phi_positive_ok = bool(np.all(spec.phi.values(s) > 0.0))

    diagnostics = NormDiagnostics(spd_ok, randers_bound_ok, alpha_norm_u, phi_positive_ok)
    if not spd_ok:
        return diagnostics

    # sampling goes through the raw formulas, so it also reports on invalid u
    probe = spec if spec.is_valid else _unchecked(spec)
    directions = sphere_directions(spec.A, sample_count, seed)
    norms = f_values(spec, directions)
    for y, f in zip(directions, norms):
        if f > 0.0:
            y = y / f
        try:
            hess = f_squared_jet(probe, y).hess
        except DomainError:
            diagnostics.convexity_samples.append((y, float("-inf")))
            continue
        diagnostics.convexity_samples.append((y, float(np.linalg.eigvalsh(0.5 * hess).min())))
    return diagnostics


class _Unchecked(NormSpec):
    """A NormSpec whose validity gate is open; used only to probe invalid norms."""

    @property
    def validity_problems(self):
        return ()


def _unchecked(spec: NormSpec) -> NormSpec:
    return _Unchecked(spec.family, spec.A, spec.u, spec.phi)
