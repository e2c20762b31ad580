"""Exact average weights of oscillating tableaux and the operator Psi."""
from osctab.errors import CoefficientCheckError, EmptySetError, UnknownFormula, ValidationError
from osctab.formulas import asymptotic_coefficient, closed_form, leading_coefficient_checks
from osctab.partitions import (
    Cell,
    Partition,
    cells,
    down_neighbors,
    make_partition,
    syt_count,
    up_neighbors,
)
from osctab.polyring import Poly, binomial_poly, parse_poly
from osctab.psi import (
    PsiMatrix,
    average_weight_formula,
    psi_apply,
    psi_inverse,
    psi_matrix,
    q_polynomial,
)
from osctab.tableaux import (
    ContentWeight,
    HookWeight,
    OscillatingTableau,
    WeightSpec,
    average_weight_bruteforce,
    content_product_weight,
    count_oscillating,
    count_oscillating_dp,
    enumerate_oscillating,
    hook_product_weight,
    make_tableau,
    weight,
)

__version__ = "0.1.0"
