//! Zeta functions of finite categories: series, closed forms, special-class
//! oracles, the conjecture checker and the digraph identities.

mod closed_form;
mod conjecture;
mod identities;
mod oracle;
mod synth;

pub use closed_form::{AnyClosedForm, ExpTerm, Factor, ScalarForm, ZetaClosedForm};
pub use conjecture::{
    check_conjecture, check_conjecture_with, ConjectureReport, EigenCheck, EulerCheck, ExponentSum,
    ShapeCheck, Verdict,
};
pub use identities::{
    covering_divides, graph_zeta, verify_coproduct, verify_exchange, verify_free_category_relation,
    verify_integral_expression, CoveringCheck, GraphZeta, IdentityCheck,
};
pub use oracle::{oracle_acyclic, oracle_constant_sum, oracle_groupoid, oracle_two_object};
pub use synth::{expansion_error, synthesize_closed_form, zeta_series};

/// Tolerance for approximate-tier comparisons.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;
