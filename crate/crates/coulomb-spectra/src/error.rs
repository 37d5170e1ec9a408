//! Error type shared by every module.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Coarse classification used by front ends (e.g. to choose an exit code).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCategory {
    /// The caller supplied arguments outside an operation's domain.
    BadArgument,
    /// A numerical procedure failed to converge or certify its result.
    NumericalFailure,
    /// The parameter sits on a value where the requested quantity is undefined
    /// (e.g. a coupling at a zero of a Bessel function of the second kind).
    ExcludedParameter,
}

/// Errors raised by the numerical routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// Argument outside the mathematical domain of the function.
    #[error("domain error: {0}")]
    Domain(String),
    /// Argument of the wrong kind (e.g. unsupported order).
    #[error("invalid argument: {0}")]
    Argument(String),
    /// Evaluation at a pole.
    #[error("pole: {0}")]
    Pole(String),
    /// The requested method is outside its regime of validity.
    #[error("out of regime: {0}")]
    Regime(String),
    /// The uniform expansion's sector condition is violated; `margin` is the
    /// signed angular distance to the sector boundary (negative = outside).
    #[error("outside validity sector (margin {margin:.3e} rad)")]
    Region { margin: f64 },
    /// A quadrature or iteration stopped before reaching its tolerance.
    #[error("accuracy not reached: {what} (achieved error estimate {achieved:.3e})")]
    Accuracy { what: String, achieved: f64 },
    /// A function handed to the branch machinery has poles with equal-sign limits.
    #[error("function not in the branched-arctan class: {0}")]
    NotInClass(String),
    /// A root search could not bracket or isolate a root.
    #[error("root search failed: {0}")]
    RootSearch(String),
    /// The eigenvalue with the given index could not be located.
    #[error("indexing error: eigenvalue n = {0} not bracketed")]
    Indexing(usize),
    /// A Jost branch was requested where it does not decay.
    #[error("branch error: {0}")]
    Branch(String),
    /// The argument-principle count and the located roots disagree.
    #[error("incomplete search: {found} roots located, winding number {expected} in {rect}")]
    IncompleteSearch { found: usize, expected: i64, rect: String },
    /// Too few samples for a statistical fit.
    #[error("insufficient sample: {0}")]
    Sample(String),
    /// Parameter value excluded from the analysis.
    #[error("excluded parameter: {0}")]
    ExcludedParameter(String),
    /// A discretisation did not converge with respect to domain size or step.
    #[error("discretisation error: {0}")]
    Discretisation(String),
}

impl Error {
    /// Coarse category of the error.
    pub fn category(&self) -> ErrorCategory {
        match self {
            Error::Domain(_) | Error::Argument(_) | Error::Branch(_) | Error::Sample(_) => {
                ErrorCategory::BadArgument
            }
            Error::ExcludedParameter(_) | Error::Pole(_) => ErrorCategory::ExcludedParameter,
            Error::Regime(_)
            | Error::Region { .. }
            | Error::Accuracy { .. }
            | Error::NotInClass(_)
            | Error::RootSearch(_)
            | Error::Indexing(_)
            | Error::IncompleteSearch { .. }
            | Error::Discretisation(_) => ErrorCategory::NumericalFailure,
        }
    }
}
