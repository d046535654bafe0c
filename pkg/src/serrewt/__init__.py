"""Minimal weights of mod-p Galois representations: the classical recipe,
the Buzzard-Diamond-Jarvis weight set, and the crystalline-lift weight from
the Breuil-Mezard multiplicity formula, with exhaustive per-prime
verification that the three agree."""

from .errors import (
    InternalInvariantError,
    LevelOneError,
    ParamError,
    UnsupportedPrimeError,
)
from .galois_params import (
    InertialParam,
    Irreducible,
    Reducible,
    enumerate_params,
    normalize_level2,
    param_twist,
    parse_param,
    serialize_param,
)
from .oracle import (
    CyclotomicElement,
    brauer_char_sym,
    brauer_char_weight,
    cyclotomic_poly,
    k_min_search,
    p_regular_classes,
    verify_decomposition,
)
from .recipes import (
    MuTable,
    bdj_weight_set,
    bm_multiplicity,
    bm_set,
    k_cris,
    k_min_of_set,
    kisin_mu,
    mu_support,
    mu_table,
    serre_k,
    weight_report,
)
from .verify import (
    VerificationReport,
    check_bm_equals_bdj,
    check_kmin_formula,
    check_main_theorem,
    check_recursion_lemma,
    run_suite,
)
from .weights import (
    SerreWeight,
    VirtualClass,
    decompose_sym,
    jh_multiplicity,
    k_min_closed,
    sym_class,
    twist_weight,
    weight_dim,
)

__version__ = "0.1.0"

__all__ = [
    "CyclotomicElement",
    "InertialParam",
    "InternalInvariantError",
    "Irreducible",
    "LevelOneError",
    "MuTable",
    "ParamError",
    "Reducible",
    "SerreWeight",
    "UnsupportedPrimeError",
    "VerificationReport",
    "VirtualClass",
    "bdj_weight_set",
    "bm_multiplicity",
    "bm_set",
    "brauer_char_sym",
    "brauer_char_weight",
    "check_bm_equals_bdj",
    "check_kmin_formula",
    "check_main_theorem",
    "check_recursion_lemma",
    "cyclotomic_poly",
    "decompose_sym",
    "enumerate_params",
    "jh_multiplicity",
    "k_cris",
    "k_min_closed",
    "k_min_of_set",
    "k_min_search",
    "kisin_mu",
    "mu_support",
    "mu_table",
    "normalize_level2",
    "p_regular_classes",
    "param_twist",
    "parse_param",
    "run_suite",
    "serialize_param",
    "serre_k",
    "sym_class",
    "twist_weight",
    "verify_decomposition",
    "weight_dim",
    "weight_report",
]
