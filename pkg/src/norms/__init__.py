from src.norms.profiles import Profile, RandersProfile, PolynomialProfile, build_profile
from src.norms.spec import Family, NormSpec, f_value, f_values, f_squared_jet, as_alpha_beta
from src.norms.sampling import sphere_directions, halton_gaussian
from src.norms.validate import NormDiagnostics, validate

__all__ = [
    "Profile",
    "RandersProfile",
    "PolynomialProfile",
    "build_profile",
    "Family",
    "NormSpec",
    "f_value",
    "f_values",
    "f_squared_jet",
    "as_alpha_beta",
    "sphere_directions",
    "halton_gaussian",
    "NormDiagnostics",
    "validate",
]
