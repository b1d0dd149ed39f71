//! The integral quantum group `U_R(gl_n)` acting on mixed tensor space.
//!
//! Matrices here are left actions in column convention: the entry at
//! `(row, col)` is the coefficient of `v_row` in `x · v_col`. They are stored
//! as [`wt_rep::OperatorMatrix`] with equal domain and codomain, so the
//! transpose is the right-action matrix used for tangles.

mod action;
mod divpowers;
mod generator;

pub use action::{antipode_on_v, gen_on_mixed, gen_on_mixed_split, gen_on_v, gen_on_vdual, k_power};
pub use divpowers::{check_divpowers, DivPowerReport};
pub use generator::{parse_generator, UGenerator};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QGroupError {
    #[error("invalid generator {gen} for n={n}: {msg}")]
    InvalidGenerator { gen: String, n: u32, msg: String },
    #[error("cannot parse generator {0:?}")]
    Parse(String),
}
