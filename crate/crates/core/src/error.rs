use std::fmt;

/// Error type for every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    Domain { what: &'static str, value: f64 },
    /// A parameter value outside the admissible set (−∞,−1] ∪ [0,∞).
    InadmissibleParam { value: f64 },
    /// A parameter inside the admissible set but outside the regime on
    /// which the requested inequality holds.
    Regime { what: &'static str, p: f64 },
    /// A root bracket whose endpoints do not straddle a sign change.
    Bracket { lo: f64, hi: f64, flo: f64, fhi: f64 },
    /// Root found but the residual contract could not be met.
    Residual { value: f64, residual: f64 },
    /// The verifier was asked for a claim id it does not know.
    UnknownClaim { id: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain { what, value } => {
                write!(f, "domain error: {what} (got {value})")
            }
            Error::InadmissibleParam { value } => {
                write!(f, "parameter {value} outside the admissible set (-inf,-1] U [0,inf)")
            }
            Error::Regime { what, p } => {
                write!(f, "regime error: p = {p} is outside the range where {what}")
            }
            Error::Bracket { lo, hi, flo, fhi } => {
                write!(f, "no sign change on bracket [{lo}, {hi}] (f: {flo}, {fhi})")
            }
            Error::Residual { value, residual } => {
                write!(f, "root at {value} failed the residual contract (|f| = {residual:e})")
            }
            Error::UnknownClaim { id } => write!(f, "unknown claim id: {id}"),
        }
    }
}

impl std::error::Error for Error {}
