"""Exact symplectic cohomology ranks and contact invariants for the links of
invertible cA_n singularities (chain, loop and Fermat families)."""

__version__ = "0.1.0"

from .classify import Verdict, contactomorphic, deformation_relation, signature_table
from .closedform import (
    BigradedProfile,
    bigraded_profile,
    contribution_sets,
    loop_set_cardinalities,
    residue_q,
    sh_rank,
    sh_rank_piecewise,
)
from .invariants import (
    InvariantSignature,
    WindowError,
    check_EL_conjecture,
    check_rank_relation,
    check_refined_conjecture,
    fcd_from_profile,
    formal_period,
    kappa_sigma,
    lct,
    q_factorialization,
    rho_lambda,
    search_formal_period,
    signature,
)
from .oracle import (
    GoodPair,
    enumerate_good_pairs,
    fixed_data,
    jacobian_basis,
    kernel_elements,
    oracle_profile,
    validate_pair,
)
from .polyspec import (
    CHAIN,
    FERMAT,
    KINDS,
    LOOP,
    PolySpec,
    WeightSystem,
    exponent_matrix,
    format_poly,
    group_order_dw,
    milnor_number,
    normalize,
    parse_poly,
    small_resolution,
    spec_from_dict,
    spec_to_dict,
    weight_system,
)

__all__ = [name for name in dir() if not name.startswith("_")]
