use thiserror::Error;

/// Errors raised by the numerical core.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A constructor received an out-of-range family parameter.
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    /// Only configurations concentric with the test function are computed.
    #[error("unsupported geometry: {0}")]
    UnsupportedGeometry(String),

    /// A growth function failed the admissibility class of its space.
    #[error("growth function is not in {class}: {detail}")]
    ClassMembership { class: String, detail: String },

    /// A verification precondition (theorem hypothesis, ordering) does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A bracket or bisection failed to converge.
    #[error("numerical failure: {0}")]
    Numerical(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn positive_param(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::InvalidParameter {
            name,
            reason: format!("must be a positive finite real, got {value}"),
        })
    }
}
