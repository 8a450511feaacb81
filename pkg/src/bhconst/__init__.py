"""Bohnenblust-Hille constant sequences, norm oracles, and KSZ experiments."""

from .forms import (
    CapacityError,
    DegenerateError,
    HomogeneousPolynomial,
    MultilinearForm,
    bh_ratio,
    coeff_lq_norm,
    littlewood_form,
    norm_p2_complex,
    norm_p2_real,
    sup_norm_complex_estimate,
    sup_norm_real_exact,
)
from .report import Check, ExperimentReport
from .sequences import (
    D_COMPLEX,
    D_REAL,
    Family,
    ScalarField,
    SequenceSpec,
    c_complex,
    c_real,
    closed_bound,
    constant_table,
    r_seq,
)
from .special_fn import DomainError, find_p0, khinchine_complex, khinchine_real

__version__ = "0.1.0"
