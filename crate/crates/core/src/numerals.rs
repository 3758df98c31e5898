//! Integer encodings and their Successor, Predecessor and Zero-Test terms.
//!
//! | system       | d_0       | d_{n+1}                          | S | P | Z |
//! |--------------|-----------|----------------------------------|---|---|---|
//! | `church`     | `λf.λx.x` | `λf.λx.f (… (f x))`              | ✓ | ✓ | ✓ |
//! | `barendregt` | `I`       | `⟨F, d_n⟩`                       | ✓ | ✓ | ✓ |
//! | `a`          | `I`       | `λx1…λx{n+1}.I`                  | ✓ | ✓ |   |
//! | `b`          | `⟨T, I⟩`  | `⟨F, a_n⟩`                       | ✓ |   | ✓ |
//! | `bprime`     | `b_1`     | `b_0`, then `b_n` for n ≥ 2      |   |   |   |
//! | `tilde`      | `I`       | `λx.x x … x` (n+2 occurrences)   | ✓ | ✓ | ✓ |
//! | `c`          | `I`       | `⟨d_n, e_{n+1}⟩`                 |   | ✓ | ✓ |

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::combinators::{mk_f, mk_i, mk_pair, mk_t, mk_tuple};
use crate::harness::{Case, CheckReport};
use crate::nameless::Node;
use crate::parser::{parse_term, Program};
use crate::reduce::{compare_nodes, Fuel};
use crate::term::{Ident, Term};

/// `λf.λx.f (f … (f x))` with `n` occurrences of `f`.
pub fn church(n: u64) -> Term {
    let body = (0..n).fold(Term::var("x"), |acc, _| Term::app(Term::var("f"), acc));
    Term::lams(["f", "x"], body)
}

/// `0 = I`, `n+1 = ⟨F, n⟩`.
pub fn barendregt(n: u64) -> Term {
    (0..n).fold(mk_i(), |acc, _| mk_pair(mk_f(), acc))
}

/// `λx1.λx2.…λxn.I`.
pub fn a_numeral(n: u64) -> Term {
    Term::lams((1..=n).map(|i| Ident::from(format!("x{i}"))), mk_i())
}

/// `b_0 = ⟨T, I⟩`, `b_n = ⟨F, a_{n-1}⟩`.
pub fn b_numeral(n: u64) -> Term {
    match n {
        0 => mk_pair(mk_t(), mk_i()),
        n => mk_pair(mk_f(), a_numeral(n - 1)),
    }
}

/// The b system with its first two elements swapped.
pub fn bprime_numeral(n: u64) -> Term {
    match n {
        0 => b_numeral(1),
        1 => b_numeral(0),
        n => b_numeral(n),
    }
}

/// `0 = I`, `n = λx.x x … x` with `n+1` occurrences of `x`.
pub fn tilde_numeral(n: u64) -> Term {
    match n {
        0 => mk_i(),
        n => {
            let body = (0..n).fold(Term::var("x"), |acc, _| Term::app(acc, Term::var("x")));
            Term::lam("x", body)
        }
    }
}

/// `c_0 = I`, `c_n = ⟨c_{n-1}, e_n⟩`, i.e. the tuple `⟨e_1, …, e_n⟩`.
pub fn c_numeral(n: u64, e: &SequenceSpec) -> Term {
    mk_tuple((1..=n).map(|i| e.element(i)))
}

/// A sequence `U_1, U_2, …` of closed normal terms, indexed from 1.
#[derive(Clone)]
pub struct SequenceSpec {
    name: String,
    element: Arc<dyn Fn(u64) -> Term + Send + Sync>,
}

impl SequenceSpec {
    pub fn new(name: impl Into<String>, element: impl Fn(u64) -> Term + Send + Sync + 'static) -> Self {
        SequenceSpec {
            name: name.into(),
            element: Arc::new(element),
        }
    }

    /// `e_n = ⌜n⌝`, the default sequence of the c system.
    pub fn church() -> Self {
        SequenceSpec::new("church", church)
    }

    /// `e_n = n̄` in the Barendregt encoding.
    pub fn barendregt() -> Self {
        SequenceSpec::new("barendregt", barendregt)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// # Panics
    /// If `n` is 0; sequences start at index 1.
    pub fn element(&self, n: u64) -> Term {
        assert!(n >= 1, "sequence elements are indexed from 1");
        (self.element)(n)
    }
}

impl fmt::Debug for SequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SequenceSpec").field("name", &self.name).finish()
    }
}

/// An integer encoding together with whichever combinators it is known to have.
#[derive(Clone)]
pub struct NumeralSystem {
    pub name: String,
    numeral: Arc<dyn Fn(u64) -> Term + Send + Sync>,
    pub successor: Option<Term>,
    pub predecessor: Option<Term>,
    pub zero_test: Option<Term>,
    /// A closed term sending `d_0` to `T` and `d_1` to `F`.
    pub discriminator: Option<Term>,
}

impl NumeralSystem {
    pub fn new(name: impl Into<String>, numeral: impl Fn(u64) -> Term + Send + Sync + 'static) -> Self {
        NumeralSystem {
            name: name.into(),
            numeral: Arc::new(numeral),
            successor: None,
            predecessor: None,
            zero_test: None,
            discriminator: None,
        }
    }

    pub fn numeral(&self, n: u64) -> Term {
        (self.numeral)(n)
    }

    pub fn with_successor(mut self, s: Term) -> Self {
        self.successor = Some(s);
        self
    }

    pub fn with_predecessor(mut self, p: Term) -> Self {
        self.predecessor = Some(p);
        self
    }

    pub fn with_zero_test(mut self, z: Term) -> Self {
        self.zero_test = Some(z);
        self
    }

    pub fn with_discriminator(mut self, w: Term) -> Self {
        self.discriminator = Some(w);
        self
    }

    pub fn combinator(&self, which: Combinator) -> Option<&Term> {
        match which {
            Combinator::Successor => self.successor.as_ref(),
            Combinator::Predecessor => self.predecessor.as_ref(),
            Combinator::ZeroTest => self.zero_test.as_ref(),
        }
    }

    /// Successor, Predecessor and Zero Test are all present.
    pub fn is_adequate(&self) -> bool {
        self.successor.is_some() && self.predecessor.is_some() && self.zero_test.is_some()
    }
}

impl fmt::Debug for NumeralSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NumeralSystem")
            .field("name", &self.name)
            .field("successor", &self.successor)
            .field("predecessor", &self.predecessor)
            .field("zero_test", &self.zero_test)
            .field("discriminator", &self.discriminator)
            .finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Combinator {
    Successor,
    Predecessor,
    ZeroTest,
}

impl fmt::Display for Combinator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Combinator::Successor => "successor",
            Combinator::Predecessor => "predecessor",
            Combinator::ZeroTest => "zero_test",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SystemName {
    Church,
    Barendregt,
    A,
    B,
    Bprime,
    Tilde,
    C,
}

impl SystemName {
    pub const ALL: [SystemName; 7] = [
        SystemName::Church,
        SystemName::Barendregt,
        SystemName::A,
        SystemName::B,
        SystemName::Bprime,
        SystemName::Tilde,
        SystemName::C,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SystemName::Church => "church",
            SystemName::Barendregt => "barendregt",
            SystemName::A => "a",
            SystemName::B => "b",
            SystemName::Bprime => "bprime",
            SystemName::Tilde => "tilde",
            SystemName::C => "c",
        }
    }

    pub fn system(self) -> NumeralSystem {
        match self {
            SystemName::Church => NumeralSystem::new("church", church)
                .with_successor(church_successor())
                .with_predecessor(church_predecessor())
                .with_zero_test(church_zero_test())
                .with_discriminator(church_zero_test()),
            SystemName::Barendregt => NumeralSystem::new("barendregt", barendregt)
                .with_successor(barendregt_successor())
                .with_predecessor(barendregt_predecessor())
                .with_zero_test(barendregt_zero_test())
                .with_discriminator(barendregt_zero_test()),
            SystemName::A => NumeralSystem::new("a", a_numeral)
                .with_successor(a_successor())
                .with_predecessor(a_predecessor())
                .with_discriminator(lib("\\n.n (\\y.\\z.T) (\\z.F) I")),
            SystemName::B => NumeralSystem::new("b", b_numeral)
                .with_successor(b_successor())
                .with_zero_test(b_zero_test())
                .with_discriminator(b_zero_test()),
            SystemName::Bprime => NumeralSystem::new("bprime", bprime_numeral)
                .with_discriminator(lib("\\n.n T F T")),
            SystemName::Tilde => NumeralSystem::new("tilde", tilde_numeral)
                .with_successor(tilde_successor())
                .with_predecessor(tilde_predecessor())
                .with_zero_test(tilde_zero_test())
                .with_discriminator(tilde_zero_test()),
            SystemName::C => c_system(SequenceSpec::church()),
        }
    }
}

impl fmt::Display for SystemName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown numeral system `{0}` (expected one of church, barendregt, a, b, bprime, tilde, c)")]
pub struct UnknownSystem(pub String);

impl FromStr for SystemName {
    type Err = UnknownSystem;

    fn from_str(s: &str) -> Result<Self, UnknownSystem> {
        SystemName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| UnknownSystem(s.to_owned()))
    }
}

pub fn builtin_system(name: &str) -> Result<NumeralSystem, UnknownSystem> {
    Ok(name.parse::<SystemName>()?.system())
}

/// The c system over the sequence `e`.
pub fn c_system(e: SequenceSpec) -> NumeralSystem {
    NumeralSystem::new("c", move |n| c_numeral(n, &e))
        .with_predecessor(c_predecessor())
        .with_zero_test(c_zero_test())
        .with_discriminator(c_zero_test())
}

fn base_env() -> &'static Program {
    static ENV: OnceLock<Program> = OnceLock::new();
    ENV.get_or_init(|| {
        let mut env = Program::new();
        for (name, body) in [("I", mk_i()), ("T", mk_t()), ("F", mk_f())] {
            env.define(name, body).expect("distinct names");
        }
        env
    })
}

/// Parses a built-in term with `I`, `T` and `F` in scope.
fn lib(src: &str) -> Term {
    parse_term(src, base_env()).unwrap_or_else(|e| panic!("built-in term {src:?}: {e}"))
}

/// `λn.λf.λx.f (n f x)`
pub fn church_successor() -> Term {
    lib("\\n.\\f.\\x.f (n f x)")
}

/// `λn.n U ⟨⌜0⌝, ⌜0⌝⟩ F` with `U = λa.⟨S (a T), (a T)⟩`.
///
/// `U` sends `⟨p, q⟩` to `⟨p+1, p⟩`, so after n iterations from `⟨0, 0⟩`
/// the second component holds n−1 (or 0 when n = 0).
pub fn church_predecessor() -> Term {
    let s = church_successor();
    let u = Term::lam(
        "a",
        mk_pair(
            Term::app(s, lib("a T")),
            lib("a T"),
        ),
    );
    Term::lam(
        "n",
        Term::apps(Term::var("n"), [u, mk_pair(church(0), church(0)), mk_f()]),
    )
}

/// The pair-iteration predecessor exactly as it is usually printed,
/// `λn.n U ⟨⌜0⌝, ⌜0⌝⟩ T` with `U = λa.⟨S (a T), (a F)⟩`.
///
/// Here `U ⟨p, q⟩ = ⟨p+1, q⟩`, so the result on ⌜n⌝ is ⌜n⌝ itself: this term
/// is not a predecessor. Kept so the discrepancy stays checkable.
pub fn church_predecessor_as_printed() -> Term {
    let s = church_successor();
    let u = Term::lam("a", mk_pair(Term::app(s, lib("a T")), lib("a F")));
    Term::lam(
        "n",
        Term::apps(Term::var("n"), [u, mk_pair(church(0), church(0)), mk_t()]),
    )
}

/// `λn.n (λx.F) T`
pub fn church_zero_test() -> Term {
    lib("\\n.n (\\x.F) T")
}

/// `λx.⟨F, x⟩`
pub fn barendregt_successor() -> Term {
    lib("\\x.<F, x>")
}

/// `λx.x F`
pub fn barendregt_predecessor() -> Term {
    lib("\\x.x F")
}

/// `λx.x T`
pub fn barendregt_zero_test() -> Term {
    lib("\\x.x T")
}

/// `λn.λx.n`
pub fn a_successor() -> Term {
    lib("\\n.\\x.n")
}

/// `λn.n I`
pub fn a_predecessor() -> Term {
    lib("\\n.n I")
}

/// `λn.⟨F, (n T) a_0 (λx.n F)⟩`
pub fn b_successor() -> Term {
    let body = Term::apps(lib("n T"), [a_numeral(0), lib("\\x.n F")]);
    Term::lam("n", mk_pair(mk_f(), body))
}

/// `λn.n T`
pub fn b_zero_test() -> Term {
    lib("\\n.n T")
}

/// `λn.λx.n x x`
pub fn tilde_successor() -> Term {
    lib("\\n.\\x.n x x")
}

/// `λn.n A I I T` with `A = λx.λy.y x`.
pub fn tilde_zero_test() -> Term {
    lib("\\n.n (\\x.\\y.y x) I I T")
}

/// `λn.λx.n U F` with `U = λy.y V I` and `V = λa.λb.λc.λd.d a (c x)`.
///
/// The `x` inside `V` is bound by the outer `λx`, so `U` and `V` are built
/// inside that scope.
pub fn tilde_predecessor() -> Term {
    let v = lib("\\a.\\b.\\c.\\d.d a (c x)");
    let u = Term::lam("y", Term::apps(Term::var("y"), [v, mk_i()]));
    Term::lams(["n", "x"], Term::apps(Term::var("n"), [u, mk_f()]))
}

/// `λn.n T`
pub fn c_predecessor() -> Term {
    lib("\\n.n T")
}

/// `λn.n (λx.λy.I) T F T`
pub fn c_zero_test() -> Term {
    lib("\\n.n (\\x.\\y.I) T F T")
}

/// Checks that `generator` produces `u` from its prefixes:
/// `(A I) ≃ U_1` and `(A ⟨U_1, …, U_n⟩) ≃ U_{n+1}` for `1 ≤ n < upto`.
pub fn is_generator(generator: &Term, u: &SequenceSpec, upto: u64, fuel: Fuel) -> CheckReport {
    let a = Node::from_term(generator);
    let cases = (0..upto.max(1))
        .into_par_iter()
        .map(|n| {
            let prefix = mk_tuple((1..=n).map(|i| u.element(i)));
            let lhs = Node::app(a.clone(), Node::from_term(&prefix));
            let label = if n == 0 {
                "A I = U_1".to_owned()
            } else {
                format!("A <U_1..U_{n}> = U_{}", n + 1)
            };
            let (cmp, left) = compare_nodes(lhs, Node::from_term(&u.element(n + 1)), fuel);
            Case::from_comparison(label, cmp, &left)
        })
        .collect();
    CheckReport::new(format!("generator for sequence {}", u.name()), cases)
}
