use hbn::HbnError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("arithmetic error: {0}")]
    Arith(HbnError),
    #[error("resource limit: {0}")]
    Resource(HbnError),
}

impl CliError {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        CliError::Parse {
            pos,
            msg: msg.into(),
        }
    }

    /// Process exit status: 1 parse, 2 arithmetic, 3 resource.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse { .. } => 1,
            CliError::Arith(_) => 2,
            CliError::Resource(_) => 3,
        }
    }
}

impl From<HbnError> for CliError {
    fn from(e: HbnError) -> Self {
        match e {
            HbnError::Syntax { pos, msg } => CliError::Parse { pos, msg },
            HbnError::Resource { .. } => CliError::Resource(e),
            _ => CliError::Arith(e),
        }
    }
}
