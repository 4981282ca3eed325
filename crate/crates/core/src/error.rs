use thiserror::Error;

use crate::xi::XiTrace;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot parse partition: bad token `{token}` ({reason})")]
    Parse { token: String, reason: &'static str },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("unknown family tag `{0}`")]
    UnknownFamily(String),

    #[error("invalid parameters: {0}")]
    Parameter(String),

    /// An internal invariant of the Xiong-Keith construction failed.
    /// The partial trace is kept for diagnosis.
    #[error("xi construction failed: {reason}")]
    Construction {
        reason: String,
        trace: Option<Box<XiTrace>>,
    },

    #[error("truncation bounds differ: {0} vs {1}")]
    BoundMismatch(usize, usize),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }
}

/// Validates `r >= 2`.
pub fn check_modulus(r: u32) -> Result<()> {
    if r < 2 {
        return Err(Error::param(format!("r must be at least 2, got {r}")));
    }
    Ok(())
}

/// Validates `r >= 2` and `1 <= t <= r - 1`.
pub fn check_residue(r: u32, t: u32) -> Result<()> {
    check_modulus(r)?;
    if t == 0 || t >= r {
        return Err(Error::param(format!(
            "t must lie in [1, {}], got {t}",
            r - 1
        )));
    }
    Ok(())
}
