//! Laurent polynomials in a single variable `q` with big-integer coefficients.
//!
//! Every scalar in the walled Brauer computations lives in `Z[q, q^-1]`.
//! Values are kept in canonical form (no zero coefficients) so that structural
//! equality is ring equality.

mod poly;
mod quantum;
mod rational;

pub use poly::{LaurentPoly, ParsePolyError};
pub use quantum::{quantum_binom, quantum_factorial, quantum_int};
pub use rational::{parse_rational, ExactRational};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
