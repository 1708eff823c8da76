//! Lie polynomials in `A`, `B` at a root of unity.

mod bracket;
mod classify;
mod closure;
mod construct;
mod verify;

pub use bracket::BracketExpr;
pub use classify::{
    classify_monomial, classify_with, in_n, is_lie_polynomial, is_lie_polynomial_with, project_n,
    ClassificationRule, MonomialClass, MonomialTag,
};
pub use closure::{lie_closure, lie_closure_layers, Closure, SubspaceBasis, Window};
pub use construct::{
    base_a, base_a_closed, base_a_expr, base_b, base_b_closed, base_b_expr, base_g, base_g_closed,
    base_g_direct, base_g_expr, base_g_sum, combase_bc, combase_bc_np, combase_c_kappa,
    combase_c_sum, combase_ca, combase_ca_np, construct_basis_element, obase_a, obase_a_expr,
    obase_b, obase_b_expr, obase_g, obase_g_expr, special_a_expr, special_b_expr, Construction,
    Recipe,
};
pub use verify::{
    constructor_identity_names, displayed_mixed_commutator, is_n_monomial, random_element,
    verify_closure_matches_classification, verify_closure_soundness, verify_constructor_identities,
    verify_derived_algebra, verify_displayed_products, verify_fastpath, verify_gradation,
    verify_mixed_coefficients, verify_mixed_support, verify_no_central_c_power,
    verify_no_n_leakage, verify_oracle_equivalence, verify_power_products, verify_reachability,
    verify_reduce_ab, Report,
};
