"""
finsler_scurv: S-curvature of homogeneous Finsler spaces.
"""
