//! Head reduction: repeated contraction of the head redex of
//! `λx1…λxn.((λx.U) V V1 … Vm)` until the term has the head normal form
//! `λx1…λxn.(x V1 … Vm)`.

use crate::nameless::{self, Node};
use crate::term::{Ident, Term};

use super::Fuel;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HeadShape {
    /// `λbinders.(redex args…)` where `redex` is `(λx.U) V`.
    HeadRedex {
        binders: Vec<Ident>,
        redex: Term,
        args: Vec<Term>,
    },
    /// `λbinders.(head args…)`.
    HeadNormalForm {
        binders: Vec<Ident>,
        head: Ident,
        args: Vec<Term>,
    },
}

pub fn head_position(t: &Term) -> HeadShape {
    let mut binders = Vec::new();
    let mut t = t;
    while let Term::Lam(x, body) = t {
        binders.push(x.clone());
        t = body;
    }
    let mut args = Vec::new();
    loop {
        match t {
            Term::App(f, a) => {
                if let Term::Lam(..) = **f {
                    args.reverse();
                    return HeadShape::HeadRedex {
                        binders,
                        redex: t.clone(),
                        args,
                    };
                }
                args.push((**a).clone());
                t = f;
            }
            Term::Var(x) => {
                args.reverse();
                return HeadShape::HeadNormalForm {
                    binders,
                    head: x.clone(),
                    args,
                };
            }
            Term::Lam(..) => unreachable!("abstraction in function position is a redex"),
        }
    }
}

/// Contracts the head redex, or returns the term unchanged in head normal form.
fn head_step(t: Node) -> Result<Node, Node> {
    match t {
        Node::Lam(h, body) => match head_step(*body) {
            Ok(b) => Ok(Node::Lam(h, Box::new(b))),
            Err(b) => Err(Node::Lam(h, Box::new(b))),
        },
        t => {
            let mut args = Vec::new();
            let mut cur = t;
            while let Node::App(f, a) = cur {
                args.push(*a);
                cur = *f;
            }
            let (mut acc, contracted) = match cur {
                Node::Lam(_, body) => {
                    let arg = args.pop().expect("abstraction in function position");
                    (nameless::instantiate(*body, &arg), true)
                }
                leaf => (leaf, false),
            };
            while let Some(a) = args.pop() {
                acc = Node::app(acc, a);
            }
            if contracted {
                Ok(acc)
            } else {
                Err(acc)
            }
        }
    }
}

/// Steps a term through its head reduction one contraction at a time.
#[derive(Debug, Clone)]
pub struct HeadReducer {
    current: Node,
    steps: u64,
    finished: bool,
}

impl HeadReducer {
    pub fn new(t: &Term) -> Self {
        HeadReducer {
            current: Node::from_term(t),
            steps: 0,
            finished: false,
        }
    }

    /// Contracts the head redex; false once a head normal form is reached.
    pub fn step(&mut self) -> bool {
        if self.finished {
            return false;
        }
        let cur = std::mem::replace(&mut self.current, Node::Bound(0));
        match head_step(cur) {
            Ok(next) => {
                self.current = next;
                self.steps += 1;
                true
            }
            Err(hnf) => {
                self.current = hnf;
                self.finished = true;
                false
            }
        }
    }

    /// Runs until head normal form or until `fuel` total contractions.
    pub fn run(&mut self, fuel: Fuel) -> bool {
        while self.steps < fuel.max_steps() {
            if !self.step() {
                return true;
            }
        }
        self.in_head_normal_form()
    }

    pub fn in_head_normal_form(&mut self) -> bool {
        if !self.finished {
            // one probe; a redex found here is not contracted
            let probe = head_step(self.current.clone());
            self.finished = probe.is_err();
        }
        self.finished
    }

    pub fn steps(&self) -> u64 {
        self.steps
    }

    pub fn term(&self) -> Term {
        self.current.to_term()
    }
}

/// States visited by head reduction; `length()` is the number of contractions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeadTrace {
    states: Vec<Term>,
}

impl HeadTrace {
    pub fn states(&self) -> &[Term] {
        &self.states
    }

    pub fn length(&self) -> usize {
        self.states.len() - 1
    }

    pub fn first(&self) -> &Term {
        &self.states[0]
    }

    pub fn last(&self) -> &Term {
        self.states.last().expect("trace is nonempty")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HeadOutcome {
    Done(HeadTrace),
    OutOfFuel(HeadTrace),
}

impl HeadOutcome {
    pub fn trace(&self) -> &HeadTrace {
        match self {
            HeadOutcome::Done(t) | HeadOutcome::OutOfFuel(t) => t,
        }
    }
}

/// Head-reduces `t`, recording every intermediate state.
pub fn head_reduce(t: &Term, fuel: Fuel) -> HeadOutcome {
    let mut r = HeadReducer::new(t);
    let mut states = vec![t.clone()];
    while r.steps() < fuel.max_steps() {
        if !r.step() {
            return HeadOutcome::Done(HeadTrace { states });
        }
        states.push(r.term());
    }
    let done = r.in_head_normal_form();
    let trace = HeadTrace { states };
    if done {
        HeadOutcome::Done(trace)
    } else {
        HeadOutcome::OutOfFuel(trace)
    }
}

/// Final state of head reduction without the intermediate states.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeadSummary {
    pub term: Term,
    pub length: u64,
    pub finished: bool,
}

pub fn head_normal_form(t: &Term, fuel: Fuel) -> HeadSummary {
    let mut r = HeadReducer::new(t);
    let finished = r.run(fuel);
    HeadSummary {
        term: r.term(),
        length: r.steps(),
        finished,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Solvability {
    /// Head reduction terminated after `h` contractions.
    Solvable { h: u64 },
    /// Head reduction had not terminated when fuel ran out.
    Unknown,
}

pub fn is_solvable(t: &Term, fuel: Fuel) -> Solvability {
    let mut r = HeadReducer::new(t);
    if r.run(fuel) {
        Solvability::Solvable { h: r.steps() }
    } else {
        Solvability::Unknown
    }
}
