//! Binder-depth indexed terms.
//!
//! [`IndexTerm`] is the canonical form used for α-equivalence. The crate's
//! reduction engine works on [`Node`], the same representation with each
//! binder carrying its original name as a hint so that results can be read
//! back into readable named terms.

use std::collections::BTreeSet;

use crate::term::{Ident, Term};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum IndexTerm {
    /// Distance to the binding λ; 0 is the innermost.
    BoundVar(usize),
    FreeVar(Ident),
    Lam(Box<IndexTerm>),
    App(Box<IndexTerm>, Box<IndexTerm>),
}

impl Term {
    pub fn to_indexed(&self) -> IndexTerm {
        fn go<'a>(t: &'a Term, scope: &mut Vec<&'a Ident>) -> IndexTerm {
            match t {
                Term::Var(x) => match scope.iter().rev().position(|b| *b == x) {
                    Some(i) => IndexTerm::BoundVar(i),
                    None => IndexTerm::FreeVar(x.clone()),
                },
                Term::Lam(x, body) => {
                    scope.push(x);
                    let body = go(body, scope);
                    scope.pop();
                    IndexTerm::Lam(Box::new(body))
                }
                Term::App(f, a) => {
                    IndexTerm::App(Box::new(go(f, scope)), Box::new(go(a, scope)))
                }
            }
        }
        go(self, &mut Vec::new())
    }
}

pub fn to_indexed(t: &Term) -> IndexTerm {
    t.to_indexed()
}

#[derive(Debug, Clone)]
pub(crate) enum Node {
    Bound(usize),
    Free(Ident),
    Lam(Ident, Box<Node>),
    App(Box<Node>, Box<Node>),
}

impl Node {
    pub(crate) fn from_term(t: &Term) -> Node {
        fn go<'a>(t: &'a Term, scope: &mut Vec<&'a Ident>) -> Node {
            match t {
                Term::Var(x) => match scope.iter().rev().position(|b| *b == x) {
                    Some(i) => Node::Bound(i),
                    None => Node::Free(x.clone()),
                },
                Term::Lam(x, body) => {
                    scope.push(x);
                    let body = go(body, scope);
                    scope.pop();
                    Node::Lam(x.clone(), Box::new(body))
                }
                Term::App(f, a) => Node::App(Box::new(go(f, scope)), Box::new(go(a, scope))),
            }
        }
        go(t, &mut Vec::new())
    }

    /// Reads a node with no loose indices back into a named term.
    ///
    /// Each binder keeps its hint, primed only as far as needed to avoid
    /// capturing a free name or an outer binder referenced in its body.
    pub(crate) fn to_term(&self) -> Term {
        fn referenced(node: &Node, depth: usize, scope: &[Ident], out: &mut BTreeSet<Ident>) {
            match node {
                Node::Bound(i) if *i > depth => {
                    out.insert(scope[scope.len() - (i - depth)].clone());
                }
                Node::Bound(_) => {}
                Node::Free(x) => {
                    out.insert(x.clone());
                }
                Node::Lam(_, body) => referenced(body, depth + 1, scope, out),
                Node::App(f, a) => {
                    referenced(f, depth, scope, out);
                    referenced(a, depth, scope, out);
                }
            }
        }

        fn go(node: &Node, scope: &mut Vec<Ident>) -> Term {
            match node {
                Node::Bound(i) => Term::Var(scope[scope.len() - 1 - i].clone()),
                Node::Free(x) => Term::Var(x.clone()),
                Node::Lam(hint, body) => {
                    let mut avoid = BTreeSet::new();
                    referenced(body, 0, scope, &mut avoid);
                    let name = hint.fresh(|c| avoid.contains(c));
                    scope.push(name.clone());
                    let body = go(body, scope);
                    scope.pop();
                    Term::Lam(name, Box::new(body))
                }
                Node::App(f, a) => Term::app(go(f, scope), go(a, scope)),
            }
        }
        go(self, &mut Vec::new())
    }

    pub(crate) fn to_indexed(&self) -> IndexTerm {
        match self {
            Node::Bound(i) => IndexTerm::BoundVar(*i),
            Node::Free(x) => IndexTerm::FreeVar(x.clone()),
            Node::Lam(_, body) => IndexTerm::Lam(Box::new(body.to_indexed())),
            Node::App(f, a) => IndexTerm::App(Box::new(f.to_indexed()), Box::new(a.to_indexed())),
        }
    }

    pub(crate) fn app(f: Node, a: Node) -> Node {
        Node::App(Box::new(f), Box::new(a))
    }

    /// True if some index reaches past `depth` enclosing binders.
    pub(crate) fn has_loose(&self, depth: usize) -> bool {
        match self {
            Node::Bound(i) => *i >= depth,
            Node::Free(_) => false,
            Node::Lam(_, b) => b.has_loose(depth + 1),
            Node::App(f, a) => f.has_loose(depth) || a.has_loose(depth),
        }
    }

    /// Adds `by` to every index at or above `cutoff`.
    fn shift(&mut self, by: usize, cutoff: usize) {
        match self {
            Node::Bound(i) if *i >= cutoff => *i += by,
            Node::Bound(_) | Node::Free(_) => {}
            Node::Lam(_, b) => b.shift(by, cutoff + 1),
            Node::App(f, a) => {
                f.shift(by, cutoff);
                a.shift(by, cutoff);
            }
        }
    }

    /// Subtracts one from every index above `cutoff`; index `cutoff` must not occur.
    fn unshift(&mut self, cutoff: usize) {
        match self {
            Node::Bound(i) if *i > cutoff => *i -= 1,
            Node::Bound(_) | Node::Free(_) => {}
            Node::Lam(_, b) => b.unshift(cutoff + 1),
            Node::App(f, a) => {
                f.unshift(cutoff);
                a.unshift(cutoff);
            }
        }
    }

    pub(crate) fn mentions(&self, index: usize) -> bool {
        match self {
            Node::Bound(i) => *i == index,
            Node::Free(_) => false,
            Node::Lam(_, b) => b.mentions(index + 1),
            Node::App(f, a) => f.mentions(index) || a.mentions(index),
        }
    }
}

/// Contracts `(λ.body) arg`: replaces index 0 of `body` with `arg`.
pub(crate) fn instantiate(mut body: Node, arg: &Node) -> Node {
    fn go(node: &mut Node, depth: usize, arg: &Node, arg_loose: bool) {
        match node {
            Node::Bound(i) if *i == depth => {
                let mut replacement = arg.clone();
                if arg_loose && depth > 0 {
                    replacement.shift(depth, 0);
                }
                *node = replacement;
            }
            Node::Bound(i) if *i > depth => *i -= 1,
            Node::Bound(_) | Node::Free(_) => {}
            Node::Lam(_, b) => go(b, depth + 1, arg, arg_loose),
            Node::App(f, a) => {
                go(f, depth, arg, arg_loose);
                go(a, depth, arg, arg_loose);
            }
        }
    }
    let arg_loose = arg.has_loose(0);
    go(&mut body, 0, arg, arg_loose);
    body
}

/// Strips an η-redex body `(M 0)` under a binder into `M` at the outer level.
/// The caller has checked that index 0 does not occur in `m`.
pub(crate) fn eta_lower(mut m: Node) -> Node {
    m.unshift(0);
    m
}

/// Replaces free names by terms that have no loose indices.
pub(crate) fn replace_free(node: &Node, f: &dyn Fn(&Ident) -> Option<Node>) -> Node {
    match node {
        Node::Free(x) => f(x).unwrap_or_else(|| node.clone()),
        Node::Bound(_) => node.clone(),
        Node::Lam(h, b) => Node::Lam(h.clone(), Box::new(replace_free(b, f))),
        Node::App(a, b) => Node::app(replace_free(a, f), replace_free(b, f)),
    }
}
