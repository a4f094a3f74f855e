"""Z/2-gradings of Lie algebras in characteristic 2 and their superizations."""

from __future__ import annotations

from .field import GF, Field, FieldElement, FieldError, parse_field
from .liealg import LieAlgebra, LieError, Report, Subspace, validate_lie
from .superalg import LieSuperalgebra, ResourceError, fingerprint, make_known_super, superize, validate_super
from .divpow import GeneratingFunction, make_vect, vect_superization
from .classical import BilinearForm, make_classical, projection_reps, verify_projection

__version__ = "0.1.0"

__all__ = [
    "GF", "Field", "FieldElement", "FieldError", "parse_field",
    "LieAlgebra", "LieError", "Report", "Subspace", "validate_lie",
    "LieSuperalgebra", "ResourceError", "fingerprint", "make_known_super", "superize", "validate_super",
    "GeneratingFunction", "make_vect", "vect_superization",
    "BilinearForm", "make_classical", "projection_reps", "verify_projection",
]
