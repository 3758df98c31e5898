//! Normal-order β-reduction, η-postnormalization and fuel-bounded equality.
//!
//! Normal order contracts the first redex met in a depth-first traversal that
//! visits a node, then its function child, then its argument child. Step
//! counts only ever include β-contractions.

mod head;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::nameless::{self, Node};
use crate::term::Term;

pub use head::{
    head_normal_form, head_position, head_reduce, is_solvable, HeadOutcome, HeadReducer,
    HeadShape, HeadSummary, HeadTrace, Solvability,
};

/// Upper bound on β-contractions for one reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Fuel(u64);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("fuel must be at least 1")]
pub struct ZeroFuel;

impl Fuel {
    pub const DEFAULT: Fuel = Fuel(1_000_000);

    pub fn new(max_steps: u64) -> Result<Fuel, ZeroFuel> {
        if max_steps == 0 {
            Err(ZeroFuel)
        } else {
            Ok(Fuel(max_steps))
        }
    }

    pub fn max_steps(self) -> u64 {
        self.0
    }
}

impl Default for Fuel {
    fn default() -> Self {
        Fuel::DEFAULT
    }
}

impl TryFrom<u64> for Fuel {
    type Error = ZeroFuel;

    fn try_from(n: u64) -> Result<Self, ZeroFuel> {
        Fuel::new(n)
    }
}

impl From<Fuel> for u64 {
    fn from(f: Fuel) -> u64 {
        f.0
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub(crate) fn new(fuel: Fuel) -> Self {
        Budget {
            limit: fuel.0,
            used: 0,
        }
    }

    /// Claims one step; false once the limit has been reached.
    pub(crate) fn tick(&mut self) -> bool {
        if self.used < self.limit {
            self.used += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn used(&self) -> u64 {
        self.used
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReductionOutcome {
    /// `steps` counts β-contractions; `eta_steps` the η-contractions that followed.
    Normal {
        term: Term,
        steps: u64,
        eta_steps: u64,
    },
    OutOfFuel { partial: Term, steps: u64 },
}

impl ReductionOutcome {
    pub fn term(&self) -> &Term {
        match self {
            ReductionOutcome::Normal { term, .. } => term,
            ReductionOutcome::OutOfFuel { partial, .. } => partial,
        }
    }

    pub fn into_term(self) -> Term {
        match self {
            ReductionOutcome::Normal { term, .. } => term,
            ReductionOutcome::OutOfFuel { partial, .. } => partial,
        }
    }

    pub fn steps(&self) -> u64 {
        match self {
            ReductionOutcome::Normal { steps, .. } | ReductionOutcome::OutOfFuel { steps, .. } => {
                *steps
            }
        }
    }

    pub fn is_normal(&self) -> bool {
        matches!(self, ReductionOutcome::Normal { .. })
    }

    pub fn normal_form(&self) -> Option<&Term> {
        match self {
            ReductionOutcome::Normal { term, .. } => Some(term),
            ReductionOutcome::OutOfFuel { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "reason", rename_all = "lowercase")]
pub enum EqVerdict {
    Equal,
    Distinct,
    Unknown(String),
}

impl fmt::Display for EqVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EqVerdict::Equal => f.write_str("Equal"),
            EqVerdict::Distinct => f.write_str("Distinct"),
            EqVerdict::Unknown(reason) => write!(f, "Unknown ({reason})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("term is not β-normal: {0}")]
pub struct NotBetaNormal(pub Term);

/// Contracts the leftmost-outermost β-redex; `None` when `t` is β-normal.
pub fn beta_step_normal_order(t: &Term) -> Option<Term> {
    step(&Node::from_term(t)).map(|n| n.to_term())
}

fn step(t: &Node) -> Option<Node> {
    match t {
        Node::App(f, a) => {
            if let Node::Lam(_, body) = &**f {
                return Some(nameless::instantiate((**body).clone(), a));
            }
            if let Some(f) = step(f) {
                return Some(Node::app(f, (**a).clone()));
            }
            step(a).map(|a| Node::app((**f).clone(), a))
        }
        Node::Lam(h, body) => step(body).map(|b| Node::Lam(h.clone(), Box::new(b))),
        Node::Bound(_) | Node::Free(_) => None,
    }
}

/// Normal-order reduction of `t` within `budget`. Returns the term reached,
/// which is β-normal unless the budget ran out first.
pub(crate) fn normalize_node(t: Node, budget: &mut Budget) -> (Node, bool) {
    let mut out_of_fuel = false;
    let n = normalize(t, budget, &mut out_of_fuel);
    (n, !out_of_fuel)
}

fn normalize(t: Node, budget: &mut Budget, out_of_fuel: &mut bool) -> Node {
    if *out_of_fuel {
        return t;
    }
    let (head, mut args) = match t {
        Node::Lam(h, body) => return Node::Lam(h, Box::new(normalize(*body, budget, out_of_fuel))),
        t => unwind_spine(t, budget, out_of_fuel),
    };
    // `args` holds the leftmost argument last.
    let head = match head {
        lam @ Node::Lam(..) if args.is_empty() => normalize(lam, budget, out_of_fuel),
        other => other,
    };
    let mut acc = head;
    while let Some(arg) = args.pop() {
        let arg = normalize(arg, budget, out_of_fuel);
        acc = Node::app(acc, arg);
    }
    acc
}

/// Contracts head redexes along the application spine until the head is a
/// variable or an unapplied abstraction.
fn unwind_spine(mut t: Node, budget: &mut Budget, out_of_fuel: &mut bool) -> (Node, Vec<Node>) {
    let mut args = Vec::new();
    loop {
        match t {
            Node::App(f, a) => {
                args.push(*a);
                t = *f;
            }
            Node::Lam(h, body) if !args.is_empty() => {
                if !budget.tick() {
                    *out_of_fuel = true;
                    return (Node::Lam(h, body), args);
                }
                let arg = args.pop().expect("nonempty");
                t = nameless::instantiate(*body, &arg);
            }
            other => return (other, args),
        }
    }
}

pub(crate) fn has_beta_redex(t: &Node) -> bool {
    match t {
        Node::App(f, a) => matches!(**f, Node::Lam(..)) || has_beta_redex(f) || has_beta_redex(a),
        Node::Lam(_, b) => has_beta_redex(b),
        Node::Bound(_) | Node::Free(_) => false,
    }
}

fn is_eta_redex_body(body: &Node) -> bool {
    matches!(body, Node::App(m, x) if matches!(**x, Node::Bound(0)) && !m.mentions(0))
}

fn has_eta_redex(t: &Node) -> bool {
    match t {
        Node::Lam(_, b) => is_eta_redex_body(b) || has_eta_redex(b),
        Node::App(f, a) => has_eta_redex(f) || has_eta_redex(a),
        Node::Bound(_) | Node::Free(_) => false,
    }
}

/// Contracts η-redexes bottom-up; the caller guarantees β-normality.
pub(crate) fn eta_node(t: Node, count: &mut u64) -> Node {
    match t {
        Node::Lam(h, body) => {
            let body = eta_node(*body, count);
            if is_eta_redex_body(&body) {
                let Node::App(m, _) = body else { unreachable!() };
                *count += 1;
                nameless::eta_lower(*m)
            } else {
                Node::Lam(h, Box::new(body))
            }
        }
        Node::App(f, a) => Node::app(eta_node(*f, count), eta_node(*a, count)),
        leaf => leaf,
    }
}

/// β-normalization then η-normalization of a node.
pub(crate) struct NodeOutcome {
    pub(crate) node: Node,
    pub(crate) steps: u64,
    pub(crate) eta_steps: u64,
    pub(crate) normal: bool,
}

pub(crate) fn beta_eta_node(t: Node, fuel: Fuel) -> NodeOutcome {
    let mut budget = Budget::new(fuel);
    let (node, normal) = normalize_node(t, &mut budget);
    let mut eta_steps = 0;
    let node = if normal { eta_node(node, &mut eta_steps) } else { node };
    NodeOutcome {
        node,
        steps: budget.used(),
        eta_steps,
        normal,
    }
}

pub fn beta_normalize(t: &Term, fuel: Fuel) -> ReductionOutcome {
    let mut budget = Budget::new(fuel);
    let (node, normal) = normalize_node(Node::from_term(t), &mut budget);
    let steps = budget.used();
    if normal {
        ReductionOutcome::Normal {
            term: node.to_term(),
            steps,
            eta_steps: 0,
        }
    } else {
        ReductionOutcome::OutOfFuel {
            partial: node.to_term(),
            steps,
        }
    }
}

pub fn eta_normalize(t: &Term) -> Result<Term, NotBetaNormal> {
    let node = Node::from_term(t);
    if has_beta_redex(&node) {
        return Err(NotBetaNormal(t.clone()));
    }
    Ok(eta_node(node, &mut 0).to_term())
}

pub fn beta_eta_normalize(t: &Term, fuel: Fuel) -> ReductionOutcome {
    let out = beta_eta_node(Node::from_term(t), fuel);
    if out.normal {
        ReductionOutcome::Normal {
            term: out.node.to_term(),
            steps: out.steps,
            eta_steps: out.eta_steps,
        }
    } else {
        ReductionOutcome::OutOfFuel {
            partial: out.node.to_term(),
            steps: out.steps,
        }
    }
}

/// Syntactic check: neither a β-redex nor an η-redex occurs in `t`.
pub fn is_beta_eta_normal(t: &Term) -> bool {
    let node = Node::from_term(t);
    !has_beta_redex(&node) && !has_eta_redex(&node)
}

/// Result of comparing two terms by normalization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub verdict: EqVerdict,
    /// β-steps spent on the left and right terms.
    pub steps: (u64, u64),
}

pub(crate) fn compare_nodes(left: Node, right: Node, fuel: Fuel) -> (Comparison, NodeOutcome) {
    let l = beta_eta_node(left, fuel);
    let r = beta_eta_node(right, fuel);
    let verdict = match (l.normal, r.normal) {
        (true, true) if l.node.to_indexed() == r.node.to_indexed() => EqVerdict::Equal,
        (true, true) => EqVerdict::Distinct,
        (false, true) => EqVerdict::Unknown(format!("left side out of fuel after {} steps", l.steps)),
        (true, false) => EqVerdict::Unknown(format!("right side out of fuel after {} steps", r.steps)),
        (false, false) => EqVerdict::Unknown(format!(
            "both sides out of fuel after {} steps",
            fuel.max_steps()
        )),
    };
    let steps = (l.steps, r.steps);
    (Comparison { verdict, steps }, l)
}

/// Compares the βη-normal forms of two terms, each reduced within `fuel`.
pub fn beta_eta_compare(t1: &Term, t2: &Term, fuel: Fuel) -> Comparison {
    compare_nodes(Node::from_term(t1), Node::from_term(t2), fuel).0
}

pub fn beta_eta_eq(t1: &Term, t2: &Term, fuel: Fuel) -> EqVerdict {
    beta_eta_compare(t1, t2, fuel).verdict
}
