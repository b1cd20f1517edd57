import numpy as np

from src.liealg.algebra import LieAlgebraData
from src.norms import NormSpec, f_squared_jet, f_values, sphere_directions


def check_isotropy_invariance(data: LieAlgebraData, spec: NormSpec, samples: int = 200, seed: int = 0) -> float:
    """Largest |dF_y([h_a, y]_m)| over the h basis and sampled indicatrix directions.

    Zero certifies that F is infinitesimally Ad(H)-invariant, i.e. that it descends
    to a G-invariant metric on G/H for this split.
    """
    if data.dim_m != spec.n:
        raise ValueError(f"norm dimension {spec.n} does not match dim m = {data.dim_m}")
    if data.dim_h == 0:
        return 0.0
    spec.ensure_valid()
    action = data.isotropy_action()
    directions = sphere_directions(spec.A, samples, seed)
    directions = directions / f_values(spec, directions)[:, None]
    residual = 0.0
    for y in directions:
        jet = f_squared_jet(spec, y)
        # F = 1 on the indicatrix, so dF = d(F^2) / 2
        d_f = 0.5 * jet.grad / np.sqrt(jet.value)
        residual = max(residual, float(np.abs(action @ y @ d_f).max()))
    return residual
