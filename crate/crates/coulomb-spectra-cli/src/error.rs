//! Front-end errors and their exit codes.

use coulomb_spectra::ErrorCategory;
use std::fmt;
use std::process::ExitCode;

/// Anything that stops a run.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// A numerical routine failed; carries the library error.
    #[error(transparent)]
    Numerics(#[from] coulomb_spectra::Error),
    /// Flags that parse but do not fit together.
    #[error("invalid arguments: {0}")]
    Usage(String),
    /// Output could not be written.
    #[error("output error: {0}")]
    Io(#[from] std::io::Error),
    /// CSV serialisation failed.
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    /// One or more self-checks did not meet their tolerance.
    #[error("{0} check(s) failed")]
    ChecksFailed(usize),
}

/// Machine-readable failure class, printed on stderr and mapped to the exit
/// code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Category {
    /// Exit code 2.
    BadArguments,
    /// Exit code 3.
    NumericalFailure,
    /// Exit code 4.
    ExcludedParameter,
}

impl Category {
    /// Process exit code.
    pub fn exit_code(self) -> ExitCode {
        ExitCode::from(match self {
            Category::BadArguments => 2,
            Category::NumericalFailure => 3,
            Category::ExcludedParameter => 4,
        })
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Category::BadArguments => "bad-arguments",
            Category::NumericalFailure => "numerical-failure",
            Category::ExcludedParameter => "excluded-parameter",
        })
    }
}

impl CliError {
    /// Failure class of this error.
    pub fn category(&self) -> Category {
        match self {
            CliError::Numerics(e) => match e.category() {
                ErrorCategory::BadArgument => Category::BadArguments,
                ErrorCategory::NumericalFailure => Category::NumericalFailure,
                ErrorCategory::ExcludedParameter => Category::ExcludedParameter,
            },
            CliError::Usage(_) | CliError::Io(_) | CliError::Csv(_) => Category::BadArguments,
            CliError::ChecksFailed(_) => Category::NumericalFailure,
        }
    }
}
