//! Numeric functions and the term constructions that move between a Zero
//! Test, the 0/1 indicator function, and the binary function `k`.

use std::fmt;
use std::sync::Arc;

use crate::combinators::{mk_f, mk_t};
use crate::numerals::{church_predecessor, church_successor, church_zero_test, NumeralSystem};
use crate::parser::{parse_term, Program};
use crate::term::Term;

type Eval = Arc<dyn Fn(&[u64]) -> u64 + Send + Sync>;

/// A total function `N^arity → N`.
#[derive(Clone)]
pub struct NumericFunction {
    name: String,
    arity: usize,
    eval: Eval,
}

impl NumericFunction {
    /// # Panics
    /// If `arity` is 0.
    pub fn new(
        name: impl Into<String>,
        arity: usize,
        eval: impl Fn(&[u64]) -> u64 + Send + Sync + 'static,
    ) -> Self {
        assert!(arity >= 1, "numeric functions take at least one argument");
        NumericFunction {
            name: name.into(),
            arity,
            eval: Arc::new(eval),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// # Panics
    /// If `args.len()` differs from the arity.
    pub fn eval(&self, args: &[u64]) -> u64 {
        assert_eq!(args.len(), self.arity);
        (self.eval)(args)
    }

    pub fn identity() -> Self {
        NumericFunction::new("id", 1, |a| a[0])
    }

    pub fn successor() -> Self {
        NumericFunction::new("succ", 1, |a| a[0] + 1)
    }

    /// Truncated predecessor: 0 maps to 0.
    pub fn predecessor() -> Self {
        NumericFunction::new("pred", 1, |a| a[0].saturating_sub(1))
    }

    /// 0 at 0 and 1 everywhere else.
    pub fn zero_indicator() -> Self {
        NumericFunction::new("nonzero", 1, |a| u64::from(a[0] != 0))
    }

    /// `k(n, 0) = n + 1` and `k(n, m) = |n − m|` for `m ≠ 0`.
    pub fn k() -> Self {
        NumericFunction::new("k", 2, |a| k(a[0], a[1]))
    }

    pub fn by_name(name: &str) -> Option<Self> {
        match name {
            "id" => Some(Self::identity()),
            "succ" => Some(Self::successor()),
            "pred" => Some(Self::predecessor()),
            "nonzero" => Some(Self::zero_indicator()),
            "k" => Some(Self::k()),
            _ => None,
        }
    }
}

impl fmt::Debug for NumericFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NumericFunction")
            .field("name", &self.name)
            .field("arity", &self.arity)
            .finish()
    }
}

pub fn k(n: u64, m: u64) -> u64 {
    if m == 0 {
        n + 1
    } else {
        n.abs_diff(m)
    }
}

pub fn k_function() -> NumericFunction {
    NumericFunction::k()
}

/// Every point of `{0, …, upto-1}^arity`, in lexicographic order.
pub fn grid(arity: usize, upto: u64) -> Vec<Vec<u64>> {
    (0..arity).fold(vec![Vec::new()], |acc, _| {
        acc.into_iter()
            .flat_map(|prefix| {
                (0..upto).map(move |i| {
                    let mut p = prefix.clone();
                    p.push(i);
                    p
                })
            })
            .collect()
    })
}

/// `λn.(z n d_0 d_1)`: defines the 0/1 indicator from a Zero Test.
pub fn phi_from_zero_test(sys: &NumeralSystem, z: &Term) -> Term {
    Term::lam(
        "n",
        Term::apps(z.clone(), [Term::var("n"), sys.numeral(0), sys.numeral(1)]),
    )
}

/// `λn.(w01 (fphi n))`: a Zero Test from a definition of the 0/1 indicator
/// and a term `w01` sending `d_0` to `T` and `d_1` to `F`.
pub fn zero_test_from_phi(_sys: &NumeralSystem, fphi: &Term, w01: &Term) -> Term {
    Term::lam(
        "n",
        Term::app(w01.clone(), Term::app(fphi.clone(), Term::var("n"))),
    )
}

/// `λn.(w n F T)`: turns a `d_0 ↦ T, d_1 ↦ F` discriminator into one
/// sending `d_1` to `T` and `d_0` to `F`.
pub fn flip_discriminator(w: &Term) -> Term {
    Term::lam("n", Term::apps(w.clone(), [Term::var("n"), mk_f(), mk_t()]))
}

/// `λn.n (λx.T) F`: sends ⌜1⌝ to `T` and ⌜0⌝ to `F`.
pub fn church_one_zero_discriminator() -> Term {
    Term::lam(
        "n",
        Term::apps(Term::var("n"), [Term::lam("x", mk_t()), mk_f()]),
    )
}

/// A λ-definition of `k` over Church numerals:
/// `λn.λm.Z m (S n) (ADD (SUB n m) (SUB m n))` where `SUB a b` applies the
/// predecessor `b` times to `a`.
pub fn church_k_term() -> Term {
    let mut env = Program::new();
    let defs = [
        ("T", mk_t()),
        ("S", church_successor()),
        ("P", church_predecessor()),
        ("Z", church_zero_test()),
    ];
    for (name, body) in defs {
        env.define(name, body).expect("distinct names");
    }
    let helpers = [
        ("SUB", "\\a.\\b.b P a"),
        ("ADD", "\\a.\\b.\\f.\\x.a f (b f x)"),
    ];
    for (name, src) in helpers {
        let body = parse_term(src, &env).expect("helper parses");
        env.define(name, body).expect("distinct names");
    }
    parse_term("\\n.\\m.Z m (S n) (ADD (SUB n m) (SUB m n))", &env).expect("k-term parses")
}

/// Successor, Predecessor and Zero Test obtained from a definition of `k`:
/// `s = λn.(k n d_0)`, `p = λn.(k n d_1)` and `z = λn.(w10 (k n n))`, where
/// `w10` sends `d_1` to `T` and `d_0` to `F`.
pub fn spz_from_k(sys: &NumeralSystem, kterm: &Term, w10: &Term) -> (Term, Term, Term) {
    let n = || Term::var("n");
    let s = Term::lam("n", Term::apps(kterm.clone(), [n(), sys.numeral(0)]));
    let p = Term::lam("n", Term::apps(kterm.clone(), [n(), sys.numeral(1)]));
    let z = Term::lam(
        "n",
        Term::app(w10.clone(), Term::apps(kterm.clone(), [n(), n()])),
    );
    (s, p, z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::checks::{check_definable, check_predecessor, check_successor, check_zero_test};
    use crate::numerals::{builtin_system, church};
    use crate::reduce::{beta_eta_eq, EqVerdict, Fuel};

    #[test]
    fn k_values() {
        assert_eq!(k(4, 0), 5);
        assert_eq!(k(0, 0), 1);
        assert_eq!(k(3, 3), 0);
        assert_eq!(k(2, 5), 3);
        assert_eq!(k(7, 1), 6);
        for n in 0..20 {
            assert_eq!(k(n, 0), n + 1);
            assert_eq!(k(n, n), u64::from(n == 0));
            if n > 0 {
                assert_eq!(k(n, 1), n - 1);
            }
        }
    }

    #[test]
    fn grid_points() {
        assert_eq!(grid(1, 3), vec![vec![0], vec![1], vec![2]]);
        let g = grid(2, 11);
        assert_eq!(g.len(), 121);
        assert_eq!(g[12], vec![1, 1]);
    }

    #[test]
    fn function_registry() {
        assert_eq!(NumericFunction::by_name("k").unwrap().eval(&[2, 5]), 3);
        assert_eq!(NumericFunction::by_name("pred").unwrap().eval(&[0]), 0);
        assert_eq!(NumericFunction::by_name("nonzero").unwrap().eval(&[9]), 1);
        assert!(NumericFunction::by_name("nope").is_none());
    }

    #[test]
    fn church_k_term_spot_values() {
        let kt = church_k_term();
        assert!(kt.is_closed());
        let fuel = Fuel::default();
        for (n, m) in [(4, 0), (2, 5), (7, 7), (0, 0), (5, 1)] {
            let lhs = Term::apps(kt.clone(), [church(n), church(m)]);
            assert_eq!(beta_eta_eq(&lhs, &church(k(n, m)), fuel), EqVerdict::Equal, "k({n},{m})");
        }
    }

    #[test]
    fn zero_test_indicator_round_trip_over_barendregt() {
        let sys = builtin_system("barendregt").unwrap();
        let fuel = Fuel::default();
        let fphi = phi_from_zero_test(&sys, sys.zero_test.as_ref().unwrap());
        let r = check_definable(&sys, &fphi, &NumericFunction::zero_indicator(), &grid(1, 21), fuel);
        assert!(r.passed(), "{r}");
        let z = zero_test_from_phi(&sys, &fphi, sys.discriminator.as_ref().unwrap());
        assert!(check_zero_test(&sys, &z, 20, fuel).passed());
    }

    #[test]
    fn non_discriminator_breaks_the_zero_test() {
        let sys = builtin_system("church").unwrap();
        let fuel = Fuel::default();
        let fphi = phi_from_zero_test(&sys, sys.zero_test.as_ref().unwrap());
        let z = zero_test_from_phi(&sys, &fphi, &Term::lam("x", mk_t()));
        let r = check_zero_test(&sys, &z, 5, fuel);
        assert!(r.cases[0].passed());
        assert!(r.cases[1..].iter().all(|c| c.failed()));
    }

    #[test]
    fn discriminator_flip() {
        let sys = builtin_system("church").unwrap();
        let fuel = Fuel::default();
        for w in [
            church_one_zero_discriminator(),
            flip_discriminator(sys.discriminator.as_ref().unwrap()),
        ] {
            let at = |n| beta_eta_eq(&Term::app(w.clone(), church(n)), &mk_t(), fuel);
            assert_eq!(at(1), EqVerdict::Equal);
            assert_eq!(at(0), EqVerdict::Distinct);
        }
    }

    #[test]
    fn spz_from_church_k() {
        let sys = builtin_system("church").unwrap();
        let fuel = Fuel::default();
        let (s, p, z) = spz_from_k(&sys, &church_k_term(), &church_one_zero_discriminator());
        assert_eq!(beta_eta_eq(&Term::app(z.clone(), church(0)), &mk_t(), fuel), EqVerdict::Equal);
        assert_eq!(beta_eta_eq(&Term::app(s.clone(), church(6)), &church(7), fuel), EqVerdict::Equal);
        assert!(check_successor(&sys, &s, 8, fuel).passed());
        assert!(check_predecessor(&sys, &p, 8, fuel).passed());
        assert!(check_zero_test(&sys, &z, 8, fuel).passed());
    }
}
