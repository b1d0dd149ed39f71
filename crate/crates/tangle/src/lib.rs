//! Oriented tangle diagrams as words in elementary slices.
//!
//! A word is read top to bottom. Each slice is a crossing of two adjacent
//! points, a local minimum (cup) joining two adjacent points, or a local
//! maximum (cap) creating two adjacent points. Orientations are propagated
//! from the top boundary through every slice, so a word carries enough data
//! to recover its connector, its strands and their crossings.

mod canonical;
mod connector;
pub mod dsl;
mod graph;
pub mod random;
mod types;
mod word;

pub use canonical::{canonical_basis_word, is_descending};
pub use connector::{enumerate_connectors, Connector, Vertex};
pub use graph::{strand_graph, Component, CrossingInfo, StrandGraph, Visit};
pub use types::{BoundarySeq, Hand, MaxTag, Orientation, Slice, TangleType};
pub use word::{e_slices, s_slice, TangleWord};
pub use types::walled_seq;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TangleError {
    #[error("slice {slice}: position {pos} out of range for level of width {width}")]
    PositionOutOfRange { slice: usize, pos: usize, width: usize },
    #[error("slice {slice}: {msg}")]
    Orientation { slice: usize, msg: String },
    #[error("derived bottom {derived} does not match declared bottom {declared}")]
    TypeMismatch { declared: String, derived: String },
    #[error("invalid tangle type: {0}")]
    InvalidType(String),
    #[error("cannot concatenate: bottom {upper} differs from top {lower}")]
    ConcatMismatch { upper: String, lower: String },
    #[error("closed loop orientation tags {given:?} disagree with the diagram ({derived:?})")]
    LoopTags { given: Vec<Orientation>, derived: Vec<Orientation> },
    #[error("invalid connector: {0}")]
    InvalidConnector(String),
}
