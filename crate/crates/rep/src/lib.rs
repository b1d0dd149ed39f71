//! Matrices of oriented tangles acting on mixed tensor space
//! `V_I = V^{I_1} ⊗ ... ⊗ V^{I_m}` (`V` for `↓`, `V*` for `↑`).
//!
//! Vectors are rows and matrices act from the right: rows are indexed by the
//! top level of a tangle, columns by the bottom level, and the matrix of
//! `S/T` (`S` above `T`) is `M(S)·M(T)`.

mod linalg;
mod matrix;
mod procedure;
mod slices;

pub use linalg::{exact_rank, nullity, sparse_rank, Echelon, SparseRow};
pub use matrix::{all_indices, MultiIndex, OperatorMatrix};
pub use procedure::{matrix_of_element, matrix_of_element_with, procedure_entry, procedure_entry_in_order, procedure_value};
pub use slices::{hecke_action_matrix, matrix_of_word, psi_matrix, psi_prime_matrix, slice_matrix};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("invalid slice: {0}")]
    InvalidSlice(String),
    #[error("multi-index {index:?} does not fit n={n}, m={m}")]
    BadIndex { index: Vec<u32>, n: u32, m: usize },
    #[error("tangle is not descending for labels ({0}); normalize it first")]
    NotDescending(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
