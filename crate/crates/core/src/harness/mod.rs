//! Executable checks for numeral systems: well-formedness, the Successor,
//! Predecessor and Zero-Test contracts, λ-definability, and the
//! constructions relating a Zero Test and the function `k` to the three
//! unary combinators.

mod checks;
mod definability;
mod report;

pub use checks::{
    check_combinator, check_definable, check_predecessor, check_successor, check_system,
    check_zero_test,
};
pub use definability::{
    church_k_term, church_one_zero_discriminator, flip_discriminator, grid, k, k_function,
    phi_from_zero_test, spz_from_k, zero_test_from_phi, NumericFunction,
};
pub use report::{Case, CheckReport, Counts, Overall, Verdict};
