"""Exact arithmetic for two-variable q-series invariants of
negative-definite plumbed 3-manifolds.
"""

from .exact import (
    RationalPhase,
    bernoulli_number,
    bernoulli_poly,
    binomial,
    parse_phase,
)
from .cyclotomic import CycloNumber, cyclotomic_polynomial, euler_phi
from .laurent import LaurentPoly
from .plumbing import (
    PlumbingError,
    PlumbingGraph,
    blow_down,
    blow_up_edge,
    blow_up_vertex,
    det_and_inverse,
    det_int,
    inverse_fraction,
    is_negative_definite,
    smith_normal_form,
    spinc_equivalent,
    spinc_representatives,
    vertex_deleted_h,
)
from .brieskorn import (
    BrieskornData,
    TripleError,
    alphas,
    chi_fn,
    delta,
    negative_continued_fraction,
    phi,
    phi_at_one,
    phi_prime,
    plumbing_tree,
    psi,
    validate_triple,
    w_class,
)
from .qseries import QSeries, QSeriesError
from .engine import (
    EngineError,
    brieskorn_k,
    fhat,
    normalize,
    parity_spinc,
    term_exponents,
    zhathat_closed_form,
    zhathat_derivative,
    zhathat_gppv,
    zhathat_lattice,
)
from .limits import (
    LimitError,
    LSeriesValue,
    PeriodicSequence,
    asymptotic_check,
    asymptotic_coeffs,
    build_C,
    eval_along_ray,
    l_value,
    numeric_series_eval,
    radial_limit,
    radial_limit_consistency,
    radial_limit_derivative,
    radial_series_value,
)
from .verify import SUITES, run_suite


# aliases matching the functional naming used in the interface contract
def cyclo_from_phase(phase: RationalPhase) -> CycloNumber:
    return CycloNumber.from_phase(phase)


def cyclo_real_part(z: CycloNumber) -> CycloNumber:
    return z.real_part()


def cyclo_to_complex(z: CycloNumber, precision: int = 17) -> complex:
    return z.to_complex(precision)


def laurent_evaluate(poly: LaurentPoly, zeta: RationalPhase) -> CycloNumber:
    return poly.evaluate(zeta)


def laurent_t_derivative(poly: LaurentPoly) -> LaurentPoly:
    return poly.t_derivative()


def build_matrix(graph: PlumbingGraph) -> list:
    return graph.matrix()


__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
