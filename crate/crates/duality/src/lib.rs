//! Schur–Weyl duality between the quantized walled Brauer algebra and the
//! quantum group acting on mixed tensor space, checked at exact rational
//! specializations of `q`.

mod bend;
mod classical;
mod schur_weyl;

pub use bend::{bend_first, check_flip_identity, hecke_to_walled, hecke_to_walled_element};
pub use classical::classical_flip;
pub use schur_weyl::{
    annihilator_dims, commutant_dim, generator_sweep, image_rank, verify_schur_weyl, verify_schur_weyl_generic,
    DualityReport, Timings, Verdicts, GENERIC_POINTS, VARIABLE_BUDGET,
};

use thiserror::Error;
use wt_qgroup::QGroupError;
use wt_rep::RepError;
use wt_tangle::TangleError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DualityError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("resource limit: {needed} unknowns exceed the budget of {budget}")]
    ResourceLimit { needed: usize, budget: usize },
    #[error(transparent)]
    Tangle(#[from] TangleError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    QGroup(#[from] QGroupError),
}
