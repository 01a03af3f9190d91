"""Exact arithmetic for q-commuting variables, quantum 2x2 matrices and their trace identities."""

from .qmatrix import Matrix2, WordSpec, build_word, formal_inverse, mat_trace, t_zero, validate_sl2q, word_product, word_shift
from .qplane import PlaneElement, RhoMatrix, apply_point, rho_closed_triangular, rho_matrix, rho_trace
from .qscalar import (
    ContextMismatch,
    CycloContext,
    IntPoly,
    QLaurent,
    cheb,
    cyclo_poly,
    cyclo_reduce,
    poly_eval,
    qbinom,
    qint,
    valid_root_orders,
)
from .qtensor import TAlgebra, TElement, TMonomial, eval_counting, frobenius_shift, is_nonneg, tadd, tmul
from .sl2q import PBWMonomial, SL2qElement, antipode, coproduct, counit, gen, hopf, pbw_mul, pbw_nf_word, tautological_point
from .theorems import (
    Report,
    check_count,
    check_frobenius,
    check_main,
    check_positivity,
    check_qbinom_vanishing,
    check_rho_oracle,
    check_sn_trace,
)

__version__ = "0.1.0"
