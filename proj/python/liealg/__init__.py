"""Exact-arithmetic Lie algebra contractions and Casimir invariants."""

from ._liealg import (  # noqa: F401
    Element,
    IllDefinedContractionError,
    LieAlgebra,
    LiealgError,
    Poly,
    Rational,
    apply_coadjoint,
    coadjoint_operator_text,
    contract_and_compare,
    contract_invariant,
    contraction_limit,
    element,
    evaluate_at_rest,
    expected_invariant_count,
    generator,
    invariant_count,
    invariant_space,
    is_invariant,
    list_builtins,
    load_builtin,
    new_invariants,
    parse_algebra,
    parse_scale_spec,
    poly_const,
    poly_var,
    reference_invariants,
    rescale_exponents,
    same_structure,
    save_algebra,
    subalgebra,
    trivial_central_extension,
    verify_paper,
)

__all__ = [name for name in dir() if not name.startswith("_")]
