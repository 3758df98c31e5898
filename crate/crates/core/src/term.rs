//! Named λ-terms, the input/output form of every term in the crate.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::nameless::{self, Node};

/// A variable name matching `[A-Za-z_][A-Za-z0-9_']*`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ident(Arc<str>);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid identifier {0:?}")]
pub struct InvalidIdent(pub String);

impl Ident {
    pub fn new(name: &str) -> Result<Self, InvalidIdent> {
        if is_valid_ident(name) {
            Ok(Ident(Arc::from(name)))
        } else {
            Err(InvalidIdent(name.to_owned()))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// The same name with one more trailing prime.
    pub fn primed(&self) -> Ident {
        Ident(Arc::from(format!("{}'", self.0)))
    }

    /// First of `self`, `self'`, `self''`, ... for which `taken` is false.
    pub fn fresh(&self, mut taken: impl FnMut(&Ident) -> bool) -> Ident {
        let mut candidate = self.clone();
        while taken(&candidate) {
            candidate = candidate.primed();
        }
        candidate
    }
}

pub fn is_valid_ident(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

/// Panics on names that are not valid identifiers; use [`Ident::new`] for
/// untrusted input.
impl From<&str> for Ident {
    fn from(name: &str) -> Self {
        Ident::new(name).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl From<String> for Ident {
    fn from(name: String) -> Self {
        Ident::from(name.as_str())
    }
}

impl fmt::Display for Ident {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Ident {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(Ident),
    Lam(Ident, Box<Term>),
    App(Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(name: impl Into<Ident>) -> Term {
        Term::Var(name.into())
    }

    pub fn lam(binder: impl Into<Ident>, body: Term) -> Term {
        Term::Lam(binder.into(), Box::new(body))
    }

    /// `λx1.λx2.…λxn.body`.
    pub fn lams<I, S>(binders: I, body: Term) -> Term
    where
        I: IntoIterator<Item = S>,
        I::IntoIter: DoubleEndedIterator,
        S: Into<Ident>,
    {
        binders
            .into_iter()
            .rev()
            .fold(body, |acc, b| Term::lam(b, acc))
    }

    pub fn app(function: Term, argument: Term) -> Term {
        Term::App(Box::new(function), Box::new(argument))
    }

    /// Left-nested application `(…((head a1) a2)… an)`.
    pub fn apps(head: Term, args: impl IntoIterator<Item = Term>) -> Term {
        args.into_iter().fold(head, Term::app)
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) => 1,
            Term::Lam(_, body) => 1 + body.size(),
            Term::App(f, a) => 1 + f.size() + a.size(),
        }
    }

    pub fn free_vars(&self) -> BTreeSet<Ident> {
        let mut out = BTreeSet::new();
        collect_free(self, &mut Vec::new(), &mut out);
        out
    }

    pub fn is_closed(&self) -> bool {
        self.free_vars().is_empty()
    }

    pub fn occurs_free(&self, name: &Ident) -> bool {
        match self {
            Term::Var(x) => x == name,
            Term::Lam(x, body) => x != name && body.occurs_free(name),
            Term::App(f, a) => f.occurs_free(name) || a.occurs_free(name),
        }
    }

    /// α-equivalence: equality of the nameless forms.
    pub fn alpha_eq(&self, other: &Term) -> bool {
        self.to_indexed() == other.to_indexed()
    }

    pub fn substitute(&self, sub: &Substitution) -> Term {
        substitute(self, sub)
    }
}

fn collect_free(t: &Term, bound: &mut Vec<Ident>, out: &mut BTreeSet<Ident>) {
    match t {
        Term::Var(x) => {
            if !bound.contains(x) {
                out.insert(x.clone());
            }
        }
        Term::Lam(x, body) => {
            bound.push(x.clone());
            collect_free(body, bound, out);
            bound.pop();
        }
        Term::App(f, a) => {
            collect_free(f, bound, out);
            collect_free(a, bound, out);
        }
    }
}

pub fn alpha_eq(t1: &Term, t2: &Term) -> bool {
    t1.alpha_eq(t2)
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::pretty::pretty(self))
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{self}`")
    }
}

/// A simultaneous substitution of terms for free variables.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Substitution(BTreeMap<Ident, Term>);

impl Substitution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(name: impl Into<Ident>, replacement: Term) -> Self {
        let mut s = Self::new();
        s.insert(name, replacement);
        s
    }

    /// Returns the previous replacement when `name` was already mapped.
    pub fn insert(&mut self, name: impl Into<Ident>, replacement: Term) -> Option<Term> {
        self.0.insert(name.into(), replacement)
    }

    pub fn get(&self, name: &Ident) -> Option<&Term> {
        self.0.get(name)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn domain(&self) -> impl Iterator<Item = &Ident> {
        self.0.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Ident, &Term)> {
        self.0.iter()
    }
}

impl<K: Into<Ident>> FromIterator<(K, Term)> for Substitution {
    fn from_iter<I: IntoIterator<Item = (K, Term)>>(iter: I) -> Self {
        Substitution(iter.into_iter().map(|(k, v)| (k.into(), v)).collect())
    }
}

/// Capture-avoiding simultaneous substitution of the free variables of `t`.
///
/// Bound variables keep their names unless keeping them would capture a free
/// variable of a replacement, in which case they are primed until fresh.
pub fn substitute(t: &Term, sub: &Substitution) -> Term {
    if sub.is_empty() {
        return t.clone();
    }
    let node = Node::from_term(t);
    let replaced = nameless::replace_free(&node, &|name| sub.get(name).map(Node::from_term));
    replaced.to_term()
}
