use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HbnError {
    /// A subtraction-like operation would produce a negative result.
    #[error("{op}: underflow ({detail})")]
    Underflow { op: &'static str, detail: String },

    /// The operand has the wrong parity for the requested inverse.
    #[error("{op}: operand must be {expected}")]
    Parity {
        op: &'static str,
        expected: &'static str,
    },

    #[error("{op}: operand must be a {expected} node")]
    Kind {
        op: &'static str,
        expected: &'static str,
    },

    #[error("{op}: {detail}")]
    Domain { op: &'static str, detail: String },

    /// Materializing the value would exceed a configured budget.
    #[error("{op}: {detail} exceeds budget of {budget}")]
    Resource {
        op: &'static str,
        detail: String,
        budget: u64,
    },

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, HbnError>;
