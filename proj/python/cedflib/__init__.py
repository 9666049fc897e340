"""Circular external difference families over cyclic groups."""

from ._cedf import (
    Cedf,
    CedfParams,
    VerifyReport,
    canonical_form,
    cedf_from_json,
    check_coset_condition,
    construct_l2,
    construct_m3,
    construct_prime_field,
    count_canonical,
    decompose_alpha,
    develop_and_check,
    existence_query,
    external_differences,
    find_primitive_element,
    interval,
    is_prime,
    psi,
    reverse,
    rotate,
    scale,
    search,
    solve_congruence_box,
    subgroup,
    translate,
    verify,
)

__all__ = [
    "Cedf",
    "CedfParams",
    "VerifyReport",
    "canonical_form",
    "cedf_from_json",
    "check_coset_condition",
    "construct_l2",
    "construct_m3",
    "construct_prime_field",
    "count_canonical",
    "decompose_alpha",
    "develop_and_check",
    "existence_query",
    "external_differences",
    "find_primitive_element",
    "interval",
    "is_prime",
    "psi",
    "reverse",
    "rotate",
    "scale",
    "search",
    "solve_congruence_box",
    "subgroup",
    "translate",
    "verify",
]
