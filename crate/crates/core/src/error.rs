use thiserror::Error;

/// Failure classes surfaced by every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    /// A structural guarantee the algorithm relies on did not hold.
    #[error("assertion `{claim}` failed: {detail}")]
    ClaimViolated { claim: &'static str, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn claim(claim: &'static str, detail: impl Into<String>) -> Self {
        Error::ClaimViolated { claim, detail: detail.into() }
    }

    /// Process exit code used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::InvalidInput(_) => 2,
            Error::BudgetExceeded(_) => 3,
            Error::ClaimViolated { .. } => 4,
        }
    }
}

/// Returns `Err(Error::ClaimViolated)` unless the condition holds.
#[macro_export]
macro_rules! ensure_claim {
    ($cond:expr, $claim:expr, $($fmt:tt)+) => {
        let holds: bool = $cond;
        if !holds {
            return Err($crate::Error::claim($claim, format!($($fmt)+)));
        }
    };
}
