//! The basic combinators and the pair/tuple encodings.

use crate::term::{Ident, Term};

/// `λx.x`
pub fn mk_i() -> Term {
    Term::lam("x", Term::var("x"))
}

/// `λx.λy.x`
pub fn mk_t() -> Term {
    Term::lams(["x", "y"], Term::var("x"))
}

/// `λx.λy.y`
pub fn mk_f() -> Term {
    Term::lams(["x", "y"], Term::var("y"))
}

/// `⟨m, n⟩ = λx.(x m n)` with `x` primed until it is free in neither component.
pub fn mk_pair(m: Term, n: Term) -> Term {
    let x = Ident::from("x").fresh(|c| m.occurs_free(c) || n.occurs_free(c));
    Term::Lam(x.clone(), Box::new(Term::apps(Term::Var(x), [m, n])))
}

/// `⟨U1, …, Un⟩ = ⟨…⟨⟨I, U1⟩, U2⟩, …, Un⟩`; the empty tuple is `I`.
pub fn mk_tuple(us: impl IntoIterator<Item = Term>) -> Term {
    us.into_iter().fold(mk_i(), mk_pair)
}
