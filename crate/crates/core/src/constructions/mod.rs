//! Explicit objects: the parity elements of a free Boolean algebra, the
//! counterexample structures `S_n`, and the least weak contact on a target
//! poset that turns a map into a contact homomorphism.

mod extension;
mod parity;
mod sn;

use thiserror::Error;

use crate::algebra::AlgebraError;

pub use extension::{min_contact_extension, powerset_extension_relates, verify_embedding_criterion, ContactMap};
pub use parity::{bar_elements, parity_normal_forms, PARITY_MAX_N};
pub use sn::{build_sn, build_sn_with_cap, SnRoles, SnStructure, SN_DEFAULT_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("parameter n = {n} out of range: {reason}")]
    InvalidParameter { n: usize, reason: &'static str },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("construction invariant violated: {0}")]
    InvariantViolated(String),
    #[error("map has {images} images for a source carrier of {source_len} elements")]
    LengthMismatch { source_len: usize, images: usize },
    #[error("image of element {element} is outside the target carrier")]
    ImageOutOfRange { element: usize },
    #[error("source element {element} is not present in the target carrier")]
    NotInTarget { element: usize },
    #[error("map is not order preserving: {a} ≤ {b} but their images are not ordered")]
    NotOrderPreserving { a: usize, b: usize },
    #[error("map does not reflect 0 at element {element}")]
    ZeroReflection { element: usize },
}
