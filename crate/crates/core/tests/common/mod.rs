#![allow(dead_code)]

use std::collections::HashMap;

use numerals_core::{church, mk_f, mk_i, mk_t, Ident, Term};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub const NAMES: [&str; 5] = ["x", "y", "z", "w", "v"];

pub fn rng(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random term with at most `max_size` nodes over a small name pool, so
/// shadowing and would-be captures are common.
pub fn random_term(rng: &mut ChaCha8Rng, max_size: usize) -> Term {
    let target = rng.gen_range(1..=max_size.max(1));
    gen(rng, target)
}

fn gen(rng: &mut ChaCha8Rng, size: usize) -> Term {
    match size {
        0 | 1 => Term::var(pick(rng)),
        2 => Term::lam(pick(rng), Term::var(pick(rng))),
        n => {
            if rng.gen_bool(0.4) {
                Term::lam(pick(rng), gen(rng, n - 1))
            } else {
                let left = rng.gen_range(1..=n - 2);
                Term::app(gen(rng, left), gen(rng, n - 1 - left))
            }
        }
    }
}

fn pick(rng: &mut ChaCha8Rng) -> &'static str {
    NAMES.choose(rng).unwrap()
}

/// A random closed term drawn from a handful of combinators and numerals.
pub fn random_closed(rng: &mut ChaCha8Rng) -> Term {
    match rng.gen_range(0..5) {
        0 => mk_i(),
        1 => mk_t(),
        2 => mk_f(),
        3 => church(rng.gen_range(0..4)),
        _ => {
            let t = random_term(rng, 10);
            let fv: Vec<Ident> = t.free_vars().into_iter().collect();
            Term::lams(fv, t)
        }
    }
}

/// Canonical string for α-comparison: binders renamed `#0`, `#1`, … in
/// traversal order, free variables kept and tagged.
pub fn naive_canonical(t: &Term) -> String {
    fn go(t: &Term, env: &mut HashMap<String, Vec<String>>, counter: &mut usize, out: &mut String) {
        match t {
            Term::Var(x) => match env.get(x.as_str()).and_then(|s| s.last()) {
                Some(c) => out.push_str(c),
                None => {
                    out.push_str("free:");
                    out.push_str(x.as_str());
                }
            },
            Term::Lam(x, body) => {
                let c = format!("#{counter}");
                *counter += 1;
                out.push_str("(lam ");
                out.push_str(&c);
                out.push(' ');
                env.entry(x.as_str().to_owned()).or_default().push(c);
                go(body, env, counter, out);
                env.get_mut(x.as_str()).unwrap().pop();
                out.push(')');
            }
            Term::App(f, a) => {
                out.push_str("(app ");
                go(f, env, counter, out);
                out.push(' ');
                go(a, env, counter, out);
                out.push(')');
            }
        }
    }
    let mut out = String::new();
    go(t, &mut HashMap::new(), &mut 0, &mut out);
    out
}

/// Renames every binder to a random fresh-ish name while keeping the term
/// α-equivalent.
pub fn random_rename(rng: &mut ChaCha8Rng, t: &Term) -> Term {
    fn go(rng: &mut ChaCha8Rng, t: &Term, env: &mut Vec<(Ident, Ident)>, taken: &[Ident]) -> Term {
        match t {
            Term::Var(x) => match env.iter().rev().find(|(from, _)| from == x) {
                Some((_, to)) => Term::Var(to.clone()),
                None => t.clone(),
            },
            Term::Lam(x, body) => {
                let base = Ident::from(format!("r{}", rng.gen_range(0..1000)));
                let fresh = base.fresh(|c| taken.contains(c) || env.iter().any(|(_, to)| to == c));
                env.push((x.clone(), fresh.clone()));
                let body = go(rng, body, env, taken);
                env.pop();
                Term::Lam(fresh, Box::new(body))
            }
            Term::App(f, a) => Term::app(go(rng, f, env, taken), go(rng, a, env, taken)),
        }
    }
    let taken: Vec<Ident> = t.free_vars().into_iter().collect();
    go(rng, t, &mut Vec::new(), &taken)
}
