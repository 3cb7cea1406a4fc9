"""Exact algebra for C[SU_q(2)], its T_n-invariant subalgebras and the quantum disk."""

from .disk import (
    DiskElement,
    DiskMonomial,
    brute_force_commutation_oracle,
    disk_tn_member,
    f_q,
    monomial_exponent,
    proportionality_constant,
    q_commutation_exponent,
)
from .lie import (
    RootDatum,
    SubgroupData,
    distinguish,
    invariant_exponent,
    is_two_cell,
    n_i,
    symmetrizers,
)
from .parsing import ParseError, parse_expression
from .rep import (
    TruncatedRep,
    compact_ideal_check,
    edge_residual,
    faithfulness_rank,
    kernel_membership,
    relation_residuals,
    rep_matrix,
    shift_degree,
)
from .scalars import GaussianRational, QScalar
from .spectrum import SpectrumReport, commutator_spectrum_search
from .suq2 import (
    ALPHA,
    ALPHA_STAR,
    GAMMA,
    GAMMA_STAR,
    INF,
    SUq2Element,
    SUq2Monomial,
    normalize,
    quotient_by_gamma,
    tn_member,
)

__version__ = "0.1.0"
