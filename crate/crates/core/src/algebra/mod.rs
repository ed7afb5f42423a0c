//! Powerset and free Boolean algebra arithmetic, finite join-semilattices
//! with 0, and contact relations over them.

mod contact;
mod free_ba;
mod lattice;

use thiserror::Error;

pub use contact::{overlap_contact, ContactRelation, ContactStructure};
pub use free_ba::{width_cap, FreeBooleanAlgebra, SelectorFunction, DEFAULT_WIDTH_CAP, WIDTH_CAP_ENV};
pub use lattice::FiniteJoinSemilattice;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("element index {index} out of range for carrier of size {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("width mismatch: expected {expected}, found {found}")]
    WidthMismatch { expected: usize, found: usize },
    #[error("carrier is not union-closed: join of elements {left} and {right} is missing")]
    NotUnionClosed { left: usize, right: usize },
    #[error("carrier does not start with the empty set")]
    MissingZero,
    #[error("carrier is not strictly ascending at index {index}")]
    NotSorted { index: usize },
    #[error("relation has dimension {relation}, carrier has {carrier} elements")]
    DimensionMismatch { carrier: usize, relation: usize },
    #[error("generator count must be positive, got {0}")]
    InvalidArity(usize),
    #[error("{requested} generators exceed the ground-width cap of {cap} points")]
    CapExceeded { requested: usize, cap: usize },
}
