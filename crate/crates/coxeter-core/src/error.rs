use thiserror::Error;

pub type Result<T> = std::result::Result<T, CoxeterError>;

#[derive(Debug, Error)]
pub enum CoxeterError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("resource limit exceeded: {what} {requested} > maximum {maximum}")]
    ResourceLimit {
        what: &'static str,
        requested: usize,
        maximum: usize,
    },
}

impl CoxeterError {
    pub fn invalid(msg: impl Into<String>) -> Self {
        CoxeterError::InvalidArgument(msg.into())
    }

    pub fn limit(what: &'static str, requested: usize, maximum: usize) -> Self {
        CoxeterError::ResourceLimit {
            what,
            requested,
            maximum,
        }
    }
}
