//! An untyped λ-calculus workbench for numeral systems.
//!
//! Terms are parsed from a small concrete syntax, reduced in normal order
//! under an explicit [`Fuel`] budget, and compared up to α-equivalence of
//! their βη-normal forms. On top of the engine sit the built-in numeral
//! systems ([`numerals`]) and the checks that verify their combinators
//! ([`harness`]).
//!
//! ```
//! use numerals_core::{beta_eta_eq, church, numerals::church_successor, EqVerdict, Fuel, Term};
//!
//! let two = Term::app(church_successor(), church(1));
//! assert_eq!(beta_eta_eq(&two, &church(2), Fuel::default()), EqVerdict::Equal);
//! ```

pub mod combinators;
pub mod harness;
mod nameless;
pub mod numerals;
pub mod parser;
mod pretty;
pub mod reduce;
pub mod term;

pub use combinators::{mk_f, mk_i, mk_pair, mk_t, mk_tuple};
pub use harness::{CheckReport, NumericFunction, Overall};
pub use nameless::{to_indexed, IndexTerm};
pub use numerals::{
    a_numeral, b_numeral, barendregt, bprime_numeral, builtin_system, c_numeral, church,
    tilde_numeral, NumeralSystem, SequenceSpec, SystemName, UnknownSystem,
};
pub use parser::{parse, parse_program, parse_term, ParseError, Position, Program};
pub use pretty::pretty;
pub use reduce::{
    beta_eta_eq, beta_eta_normalize, beta_normalize, beta_step_normal_order, eta_normalize,
    head_position, head_reduce, is_beta_eta_normal, is_solvable, EqVerdict, Fuel,
    ReductionOutcome,
};
pub use term::{alpha_eq, substitute, Ident, Substitution, Term};
