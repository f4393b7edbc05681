"""Exact computations with plane foliations and periodic birational maps.

Quadratic foliations give involutions (the second tangency point along the
line through m in the direction X(m)); cubic foliations whose tangency
discriminant is a square give trivolutions.  Everything is computed over
Q(zeta_N) with exact rational coefficients.
"""

from .cyclotomic import DEFAULT_CONDUCTOR, CycNumber, field_sqrt
from .errors import (
    ConductorMismatch,
    DegenerateInput,
    ExtensionRequired,
    FolcremonaError,
    NotDivisible,
    ParseError,
)
from .poly import (
    MultiPoly,
    RationalFunction,
    exact_div,
    gcd,
    gens,
    perfect_square_decompose,
    proportional,
    resultant,
    squarefree_decomposition,
)
from .parsing import parse_expression, parse_polynomial, parse_scalar
from .foliation import (
    Foliation,
    foliation_degree,
    foliation_from_involution,
    inflection_polynomial,
    is_singular_point,
    is_symmetry,
    singular_elimination,
    tangency_polynomial,
)
from .birational import (
    BirationalMap,
    compose,
    conjugate,
    fixed_curve,
    indeterminacy_certificate,
    indeterminacy_check,
    is_identity,
    jacobian,
    map_degree,
    power,
    projective_equal,
    verify_period,
)
from .quadratic import geiser_closed_form, involution_from_quadratic, seven_points_solve
from .cubic import (
    HomogeneousFamilyParams,
    alignment_check,
    family_parameter_scan,
    homogeneous_family_build,
    quartic_square_test,
    r_closed_forms,
    trivolution_discriminant,
    trivolution_from_cubic,
)
from .webs import WebTriple, abelian_relation, pullback, relation_residual

__version__ = "0.1.0"
