//! Error type shared by all modules.

use alloc::string::String;
use core::fmt;

/// Failure modes of the numerical operations.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Input outside the mathematical domain of the operation.
    Domain(String),
    /// Parameters are constructible but outside the range supported by the
    /// requested operation (e.g. α ≤ −1/2 for the closed-form kernels).
    Unsupported(String),
    /// Inconsistent configuration (truncation, quadrature order, aliasing).
    Config(String),
    /// Quadrature failed to converge within the order cap.
    Accuracy {
        context: String,
        /// Last relative change observed between refinement levels.
        last_delta: f64,
    },
    /// Kernel evaluated on the diagonal θ = φ where it is singular.
    Diagonal,
    /// Mismatched grids or dimensions.
    Shape(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Unsupported(msg) => write!(f, "unsupported parameter range: {msg}"),
            Error::Config(msg) => write!(f, "configuration error: {msg}"),
            Error::Accuracy { context, last_delta } => {
                write!(f, "quadrature accuracy error: {context} (last relative change {last_delta:.3e})")
            }
            Error::Diagonal => write!(f, "kernel requested on the diagonal θ = φ"),
            Error::Shape(msg) => write!(f, "shape error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn config(msg: impl Into<String>) -> Error {
    Error::Config(msg.into())
}
