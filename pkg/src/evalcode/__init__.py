"""Evaluation-code algebra: Schur products, combinatorial duals, subfield subcodes,
and their application to CSS-T quantum code pairs and PIR scheme parameters.

The submodules ``csst`` and ``pir`` each expose a ``table(kind)`` that rebuilds
one of the stored benchmark tables; import the submodule to disambiguate.
"""

from evalcode import csst, pir
from evalcode.cartesian import (
    DefiningSet,
    JAffineFamily,
    delta_dual,
    delta_hyperbolic,
    delta_rm,
    delta_wrm,
    dual_is_exact,
    evaluate,
    field_from_order,
    footprint_bound,
    footprint_witness,
    full_affine_family,
    is_decreasing,
    minkowski_schur,
    rm_distance,
    wrm_nesting,
)
from evalcode.csst import (
    CssTParams,
    css_params,
    csst_product_construction,
    hyperbolic_dual_certificate,
    is_csst_pair,
    jaffine_csst,
    jaffine_csst_strict,
    wrm_csst,
)
from evalcode.cyclotomic import (
    CyclotomicSet,
    closure,
    consecutive_union,
    dual_bch_bound,
    is_coset_closed,
    orbit_of,
    representatives,
    schur_subfield,
    subfield_code,
)
from evalcode.galois import (
    FieldElement,
    FieldSpec,
    arith,
    make_field,
    primitive_element,
    subgroup_roots,
    trace_to_prime,
)
from evalcode.linear_code import (
    DistanceResult,
    LinearCode,
    SearchBudget,
    contains,
    cyclic_min_weight_upto,
    dual,
    exhaustive_min_weight,
    find_weight_witness,
    is_cyclic,
    low_weight_search,
    min_distance,
    puncture,
    schur,
    shorten,
    subfield_subcode,
    syndrome_split_search,
)
from evalcode.pir import (
    PirScheme,
    one_var_scheme,
    pir_params,
    te_pir_subfield,
    transitivity_premises,
    verify_transitive,
)

__all__ = [
    "CssTParams",
    "CyclotomicSet",
    "DefiningSet",
    "DistanceResult",
    "FieldElement",
    "FieldSpec",
    "JAffineFamily",
    "LinearCode",
    "PirScheme",
    "SearchBudget",
    "arith",
    "closure",
    "consecutive_union",
    "contains",
    "css_params",
    "csst",
    "csst_product_construction",
    "cyclic_min_weight_upto",
    "delta_dual",
    "delta_hyperbolic",
    "delta_rm",
    "delta_wrm",
    "dual",
    "dual_bch_bound",
    "dual_is_exact",
    "evaluate",
    "exhaustive_min_weight",
    "field_from_order",
    "find_weight_witness",
    "footprint_bound",
    "footprint_witness",
    "full_affine_family",
    "hyperbolic_dual_certificate",
    "is_coset_closed",
    "is_csst_pair",
    "is_cyclic",
    "is_decreasing",
    "jaffine_csst",
    "jaffine_csst_strict",
    "low_weight_search",
    "make_field",
    "min_distance",
    "minkowski_schur",
    "one_var_scheme",
    "orbit_of",
    "pir",
    "pir_params",
    "primitive_element",
    "puncture",
    "representatives",
    "rm_distance",
    "schur",
    "schur_subfield",
    "shorten",
    "subfield_code",
    "subfield_subcode",
    "subgroup_roots",
    "syndrome_split_search",
    "te_pir_subfield",
    "trace_to_prime",
    "transitivity_premises",
    "verify_transitive",
    "wrm_csst",
    "wrm_nesting",
]

__version__ = "0.1.0"
