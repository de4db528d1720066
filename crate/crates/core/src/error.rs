use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Arguments outside the domain of an operation (bad labels, mixed spaces, ...).
    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("group enumeration exceeded the cap of {cap} elements")]
    GroupTooLarge { cap: usize },

    #[error("size cap exceeded: {what} needs {needed} entries, cap is {cap}")]
    SizeCap {
        what: &'static str,
        needed: u128,
        cap: u128,
    },

    #[error("criterion inapplicable: {0}")]
    CriterionInapplicable(String),

    #[error("unsupported parameters: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
