use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("span out of bounds: start1={start1} start2={start2} len={len} (n1={n1}, n2={n2})")]
    OutOfBounds {
        start1: usize,
        start2: usize,
        len: usize,
        n1: usize,
        n2: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The requested run would need more memory than the configured budget allows.
    #[error("resource limit exceeded: {what}: need {needed}, limit {budget}")]
    Resource {
        what: &'static str,
        needed: u64,
        budget: u64,
    },
}
