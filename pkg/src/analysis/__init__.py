from src.analysis.scan import ArgmaxResult, ScanReport, Verdict, einstein_check, refine_distortion_argmax, sphere_scan
from src.analysis.sigma import SigmaEstimate, bh_sigma, exact_sigma_randers, indicatrix_radius, unit_ball_volume
from src.analysis.geodesic import OrderCheck, Trajectory, geodesic_integrate, geodesic_order_check

__all__ = [
    "ArgmaxResult",
    "ScanReport",
    "Verdict",
    "einstein_check",
    "refine_distortion_argmax",
    "sphere_scan",
    "SigmaEstimate",
    "bh_sigma",
    "exact_sigma_randers",
    "indicatrix_radius",
    "unit_ball_volume",
    "OrderCheck",
    "Trajectory",
    "geodesic_integrate",
    "geodesic_order_check",
]
