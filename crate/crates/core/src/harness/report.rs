use std::fmt;

use serde::{Deserialize, Serialize};

use crate::nameless::Node;
use crate::reduce::{Comparison, EqVerdict, NodeOutcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Equal,
    Distinct,
    Unknown,
    True,
    False,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Case {
    pub label: String,
    /// `equal`/`true` pass, `distinct`/`false` fail, `unknown` is inconclusive.
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub steps: Option<u64>,
    /// Pretty-printed term explaining a failure or an inconclusive result.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
}

impl Case {
    pub fn boolean(label: impl Into<String>, holds: bool, witness: Option<String>) -> Case {
        Case {
            label: label.into(),
            verdict: if holds { Verdict::True } else { Verdict::False },
            steps: None,
            witness,
            reason: None,
        }
    }

    pub fn from_verdict(label: impl Into<String>, verdict: EqVerdict, steps: Option<u64>) -> Case {
        let (verdict, reason) = match verdict {
            EqVerdict::Equal => (Verdict::Equal, None),
            EqVerdict::Distinct => (Verdict::Distinct, None),
            EqVerdict::Unknown(r) => (Verdict::Unknown, Some(r)),
        };
        Case {
            label: label.into(),
            verdict,
            steps,
            witness: None,
            reason,
        }
    }

    /// A comparison case; on anything but `Equal` the left side's
    /// (possibly partial) normal form is kept as the witness.
    pub(crate) fn from_comparison(label: String, cmp: Comparison, left: &NodeOutcome) -> Case {
        let steps = cmp.steps.0 + cmp.steps.1;
        let equal = cmp.verdict == EqVerdict::Equal;
        let mut case = Case::from_verdict(label, cmp.verdict, Some(steps));
        if !equal {
            case.witness = Some(witness(&left.node));
        }
        case
    }

    pub fn passed(&self) -> bool {
        matches!(self.verdict, Verdict::Equal | Verdict::True)
    }

    pub fn failed(&self) -> bool {
        matches!(self.verdict, Verdict::Distinct | Verdict::False)
    }

    pub fn is_unknown(&self) -> bool {
        self.verdict == Verdict::Unknown
    }
}

/// Long witnesses are cut so reports stay readable.
const WITNESS_LIMIT: usize = 400;

fn witness(node: &Node) -> String {
    let mut s = node.to_term().to_string();
    if s.len() > WITNESS_LIMIT {
        let mut cut = WITNESS_LIMIT;
        while !s.is_char_boundary(cut) {
            cut -= 1;
        }
        s.truncate(cut);
        s.push_str("...");
    }
    s
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub passed: usize,
    pub failed: usize,
    pub unknown: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Overall {
    Pass,
    Fail,
    Inconclusive,
}

impl fmt::Display for Overall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Overall::Pass => "pass",
            Overall::Fail => "fail",
            Overall::Inconclusive => "inconclusive",
        })
    }
}

/// Verdicts of one check run. `overall` is `pass` only when every case
/// passed; any failure makes it `fail`, otherwise any unknown makes it
/// `inconclusive`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub subject: String,
    pub cases: Vec<Case>,
    pub counts: Counts,
    pub overall: Overall,
}

impl CheckReport {
    pub fn new(subject: impl Into<String>, cases: Vec<Case>) -> Self {
        let mut counts = Counts::default();
        for c in &cases {
            if c.passed() {
                counts.passed += 1;
            } else if c.failed() {
                counts.failed += 1;
            } else {
                counts.unknown += 1;
            }
        }
        let overall = if counts.failed > 0 {
            Overall::Fail
        } else if counts.unknown > 0 {
            Overall::Inconclusive
        } else {
            Overall::Pass
        };
        CheckReport {
            subject: subject.into(),
            cases,
            counts,
            overall,
        }
    }

    pub fn passed(&self) -> bool {
        self.overall == Overall::Pass
    }

    /// Cases that did not pass, in order.
    pub fn problems(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.passed())
    }

    pub fn total_steps(&self) -> u64 {
        self.cases.iter().filter_map(|c| c.steps).sum()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {} ({} passed, {} failed, {} unknown)",
            self.subject, self.overall, self.counts.passed, self.counts.failed, self.counts.unknown
        )?;
        for c in self.problems() {
            write!(f, "  {}: {:?}", c.label, c.verdict)?;
            if let Some(r) = &c.reason {
                write!(f, " ({r})")?;
            }
            if let Some(w) = &c.witness {
                write!(f, "\n    got {w}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
