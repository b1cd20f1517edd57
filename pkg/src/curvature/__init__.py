from src.curvature.pipeline import (
    FundamentalTensor,
    CurvatureAt,
    fundamental_tensor,
    log_sqrt_det,
    distortion,
    mean_cartan_torsion,
    distortion_gradient,
    spray_vertical,
    s_curvature_frame,
    s_curvature_bracket,
    s_homogeneity_check,
    isotropy_factor,
    curvature_at,
)

__all__ = [
    "FundamentalTensor",
    "CurvatureAt",
    "fundamental_tensor",
    "log_sqrt_det",
    "distortion",
    "mean_cartan_torsion",
    "distortion_gradient",
    "spray_vertical",
    "s_curvature_frame",
    "s_curvature_bracket",
    "s_homogeneity_check",
    "isotropy_factor",
    "curvature_at",
]
