from HigherPowerSums.utils.errors import SingularSystem, InconsistentSystem, InstanceTooLarge, InternalInconsistency
from HigherPowerSums.utils.polynomials import (
    Polynomial,
    LaurentPolynomial,
    TrivariatePolynomial,
    FaulhaberForm,
    poly_mul,
    poly_compose,
    poly_derivative,
    root_multiplicity,
    rational_roots,
    binomial_poly,
    central_binomial_poly,
    to_faulhaber_form,
    laurent_mul,
    laurent_substitute_w
)
from HigherPowerSums.utils.linalg import solve_linear_system, solve_overdetermined
