use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument is outside its documented domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Root bracketing failed: the endpoint values have the same sign.
    #[error("bracket error: g(lo) = {g_lo:.6e} and g(hi) = {g_hi:.6e} have the same sign")]
    Bracket { g_lo: f64, g_hi: f64 },

    /// A quadrature refinement loop ran out of nodes before converging.
    #[error("quadrature did not converge: {0}")]
    Quadrature(String),

    /// Gauss node computation failed (eigensolve of the Jacobi matrix).
    #[error("node-finding failed for quadrature rule of size {m}")]
    NodeSolve { m: usize },

    /// A solved measure failed its internal mass or Frostman verification.
    #[error("unconverged solve at q = {q}: {detail}")]
    Unconverged { q: f64, detail: String },

    /// Extended-precision eigenvalue refinement could not reach its target.
    #[error("precision exhausted for eigenvalue index {index} at {bits} bits")]
    Precision { index: usize, bits: u32 },

    /// Two objects that must share parameters do not.
    #[error("parameter mismatch: {0}")]
    ParamMismatch(String),

    /// Invalid command-line or configuration input.
    #[error("usage error: {0}")]
    Usage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit status for the CLI: 1 usage, 2 numerical failure.
    pub fn exit_status(&self) -> i32 {
        match self {
            Error::Usage(_) | Error::Domain(_) => 1,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
