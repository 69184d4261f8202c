use thiserror::Error;

use crate::monomial::Monomial;
use crate::text::Vars;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("incomparable degrees {0} and {1}")]
    IncomparableDegrees(u32, u32),

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(u32, u32),

    #[error("monomial ideal is not strongly stable: up move {from} -> {to} leaves the ideal")]
    NotStronglyStable { from: Monomial, to: Monomial },

    #[error("missing marked polynomial for head {0}")]
    MissingHead(Monomial),

    #[error("duplicate marked polynomial for head {0}")]
    DuplicateHead(Monomial),

    #[error("head {0} is not a minimal generator of the ideal")]
    UnknownHead(Monomial),

    #[error("tail monomial {monomial} of head {head} lies in the ideal")]
    TailInIdeal { head: Monomial, monomial: Monomial },

    #[error("tail monomial {monomial} of head {head} has the wrong degree")]
    TailDegree { head: Monomial, monomial: Monomial },

    #[error("monomial {0} is not in the ideal")]
    NotInIdeal(Monomial),

    #[error("identical heads {0} in S-polynomial")]
    IdenticalHeads(Monomial),

    #[error("reduction of {0} re-entered itself")]
    ReductionLoop(Monomial),

    #[error("reduction did not terminate within {0} steps")]
    StepCap(usize),

    #[error("size guard: {0}")]
    SizeGuard(String),

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Domain refusals, as opposed to malformed input.
    pub fn is_refusal(&self) -> bool {
        !matches!(self, Error::Parse(_))
    }

    /// Like `Display`, but naming monomials with the given variables.
    pub fn render(&self, vars: &Vars) -> String {
        let m = |x: &Monomial| vars.monomial(x);
        match self {
            Error::NotStronglyStable { from, to } => format!(
                "monomial ideal is not strongly stable: up move {} -> {} leaves the ideal",
                m(from),
                m(to)
            ),
            Error::MissingHead(h) => format!("missing marked polynomial for head {}", m(h)),
            Error::DuplicateHead(h) => format!("duplicate marked polynomial for head {}", m(h)),
            Error::UnknownHead(h) => {
                format!("head {} is not a minimal generator of the ideal", m(h))
            }
            Error::TailInIdeal { head, monomial } => format!(
                "tail monomial {} of head {} lies in the ideal",
                m(monomial),
                m(head)
            ),
            Error::TailDegree { head, monomial } => format!(
                "tail monomial {} of head {} has the wrong degree",
                m(monomial),
                m(head)
            ),
            Error::NotInIdeal(x) => format!("monomial {} is not in the ideal", m(x)),
            Error::ReductionLoop(x) => format!("reduction of {} re-entered itself", m(x)),
            Error::IdenticalHeads(x) => format!("identical heads {} in S-polynomial", m(x)),
            other => other.to_string(),
        }
    }
}
