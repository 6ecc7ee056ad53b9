"""Exact computations for covers by diagonalizable groups and for S3-covers."""

__version__ = "0.1.0"

from .abelian_group import FiniteAbelianGroup, GroupHom, make_group, two_generator_group
from .catalog import delta_ray, omega_set, pardini_ray, sigma_enumerate, theta2
from .graded_algebra import MGradedAlgebra, from_ray, verify
from .rays import Ray, enumerate_extremal_rays, h_of_ray
from .rings import DUAL, GF, QQ

__all__ = [
    "DUAL",
    "GF",
    "QQ",
    "FiniteAbelianGroup",
    "GroupHom",
    "MGradedAlgebra",
    "Ray",
    "__version__",
    "delta_ray",
    "enumerate_extremal_rays",
    "from_ray",
    "h_of_ray",
    "make_group",
    "omega_set",
    "pardini_ray",
    "sigma_enumerate",
    "theta2",
    "two_generator_group",
    "verify",
]
