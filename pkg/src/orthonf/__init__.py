"""Normal forms modulo vanishing ideals over finite fields, computed as
orthogonal solutions of the interpolation system and cross-checked by
Groebner division."""

from .errors import AlgebraError
from .estimators import OrthogonalInterpolator, VanishingIdealNormalizer
from .field import FiniteField, field_of_order
from .linalg import Matrix
from .orders import GREVLEX, GRLEX, LEX, MonomialBasis, MonomialOrder, get_order
from .ortho import (
    BilinearForm,
    OrthogonalSystem,
    OrthonormalFrame,
    fourier_coefficients,
    gram_matrix,
    interpolate_orthogonal,
    normal_form,
    normal_form_via_division,
    orthogonal_solution,
    standard_orthonormalization,
)
from .poly import (
    Polynomial,
    buchberger_check,
    divide,
    format_polynomial,
    parse_polynomial,
    phi_coordinates,
    phi_inverse,
    s_polynomial,
)
from .vanishing import (
    PointSet,
    VanishingBasis,
    cleaned_kernel_basis,
    evaluation_matrix,
    field_equations,
    vanishes_on,
    vanishing_groebner_basis,
)

__version__ = "0.1.0"
