//! Number-theoretic helpers, representation predicates, and machine
//! verification of congruence families and parity characterizations.

pub mod arith;
pub mod catalog;
pub mod check;
pub mod evaluator;
pub mod predicates;
pub mod spec;

pub use arith::{delta, is_prime, jacobi_symbol, mod_inverse, smallest_nonresidue_prime};
pub use catalog::{family_catalog, Family, FinalBranch};
pub use check::{
    calibrate_pentagonal_convention, check_conditional, check_conditional_parity, check_eta_form,
    check_mex_identity, check_parity_bridge, check_parity_characterization, check_progression,
    check_progression_capped, ConditionalFamily, ParityCharacterization,
};
pub use evaluator::Evaluator;
pub use predicates::PentagonalConvention;
pub use spec::{FunctionId, ProgressionSpec};
