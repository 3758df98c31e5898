//! The numeral-system definition and the three combinator contracts, run
//! case by case.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::combinators::{mk_f, mk_t};
use crate::nameless::{IndexTerm, Node};
use crate::numerals::{Combinator, NumeralSystem};
use crate::reduce::{compare_nodes, is_beta_eta_normal, Fuel};
use crate::term::Term;

use super::definability::NumericFunction;
use super::report::{Case, CheckReport};

/// `d_n` is closed, βη-normal and α-distinct from every `d_m`, `m < n`,
/// for all `n < upto`.
///
/// # Panics
/// If `upto < 2`.
pub fn check_system(sys: &NumeralSystem, upto: u64) -> CheckReport {
    assert!(upto >= 2, "check_system needs upto >= 2");
    let numerals: Vec<Term> = (0..upto).into_par_iter().map(|n| sys.numeral(n)).collect();
    let indexed: Vec<IndexTerm> = numerals.par_iter().map(Term::to_indexed).collect();

    let mut cases = Vec::with_capacity(3 * numerals.len());
    let mut first_seen: HashMap<&IndexTerm, u64> = HashMap::new();
    for (n, (d, ix)) in numerals.iter().zip(&indexed).enumerate() {
        let n = n as u64;
        let closed = d.is_closed();
        cases.push(Case::boolean(
            format!("d_{n} closed"),
            closed,
            (!closed).then(|| d.to_string()),
        ));
        let normal = is_beta_eta_normal(d);
        cases.push(Case::boolean(
            format!("d_{n} beta-eta-normal"),
            normal,
            (!normal).then(|| d.to_string()),
        ));
        let clash = first_seen.get(ix).copied();
        cases.push(Case::boolean(
            format!("d_{n} distinct from earlier numerals"),
            clash.is_none(),
            clash.map(|m| format!("d_{m} = {d}")),
        ));
        first_seen.entry(ix).or_insert(n);
    }
    CheckReport::new(format!("{} is a numeral system (n < {upto})", sys.name), cases)
}

fn compare_case(label: String, lhs: Term, rhs: &Term, fuel: Fuel) -> Case {
    let (cmp, left) = compare_nodes(Node::from_term(&lhs), Node::from_term(rhs), fuel);
    Case::from_comparison(label, cmp, &left)
}

/// `(s d_n) ≃ d_{n+1}` for every `n < upto`.
pub fn check_successor(sys: &NumeralSystem, s: &Term, upto: u64, fuel: Fuel) -> CheckReport {
    let cases = (0..upto)
        .into_par_iter()
        .map(|n| {
            compare_case(
                format!("S d_{n} = d_{}", n + 1),
                Term::app(s.clone(), sys.numeral(n)),
                &sys.numeral(n + 1),
                fuel,
            )
        })
        .collect();
    CheckReport::new(format!("{} successor (n < {upto})", sys.name), cases)
}

/// `(p d_{n+1}) ≃ d_n` for every `n < upto`.
pub fn check_predecessor(sys: &NumeralSystem, p: &Term, upto: u64, fuel: Fuel) -> CheckReport {
    let cases = (0..upto)
        .into_par_iter()
        .map(|n| {
            compare_case(
                format!("P d_{} = d_{n}", n + 1),
                Term::app(p.clone(), sys.numeral(n + 1)),
                &sys.numeral(n),
                fuel,
            )
        })
        .collect();
    CheckReport::new(format!("{} predecessor (n < {upto})", sys.name), cases)
}

/// `(z d_0) ≃ T` and `(z d_{n+1}) ≃ F` for every `n < upto`.
pub fn check_zero_test(sys: &NumeralSystem, z: &Term, upto: u64, fuel: Fuel) -> CheckReport {
    let (t, f) = (mk_t(), mk_f());
    let cases = (0..=upto)
        .into_par_iter()
        .map(|n| {
            let (expected, name) = if n == 0 { (&t, "T") } else { (&f, "F") };
            compare_case(
                format!("Z d_{n} = {name}"),
                Term::app(z.clone(), sys.numeral(n)),
                expected,
                fuel,
            )
        })
        .collect();
    CheckReport::new(format!("{} zero test (n < {upto})", sys.name), cases)
}

/// Runs the contract for `which` against the system's own combinator, or
/// `None` when the system has none.
pub fn check_combinator(
    sys: &NumeralSystem,
    which: Combinator,
    upto: u64,
    fuel: Fuel,
) -> Option<CheckReport> {
    let term = sys.combinator(which)?;
    Some(match which {
        Combinator::Successor => check_successor(sys, term, upto, fuel),
        Combinator::Predecessor => check_predecessor(sys, term, upto, fuel),
        Combinator::ZeroTest => check_zero_test(sys, term, upto, fuel),
    })
}

/// `(fterm d_{n1} … d_{np}) ≃ d_{phi(n1,…,np)}` at each point.
///
/// # Panics
/// If a point does not have `phi.arity()` components.
pub fn check_definable(
    sys: &NumeralSystem,
    fterm: &Term,
    phi: &NumericFunction,
    points: &[Vec<u64>],
    fuel: Fuel,
) -> CheckReport {
    let cases = points
        .par_iter()
        .map(|point| {
            assert_eq!(point.len(), phi.arity(), "point {point:?} has the wrong arity");
            let value = phi.eval(point);
            let lhs = Term::apps(fterm.clone(), point.iter().map(|&n| sys.numeral(n)));
            let args = point.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
            compare_case(
                format!("{}({args}) = {value}", phi.name()),
                lhs,
                &sys.numeral(value),
                fuel,
            )
        })
        .collect();
    CheckReport::new(
        format!("{} defines {} over {}", fterm_label(fterm), phi.name(), sys.name),
        cases,
    )
}

fn fterm_label(t: &Term) -> String {
    let s = t.to_string();
    if s.len() <= 60 {
        s
    } else {
        "term".to_owned()
    }
}
