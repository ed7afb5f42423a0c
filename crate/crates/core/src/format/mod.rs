//! Structure JSON and Graphviz output.

mod dot;
mod structure;

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::axioms::{AxiomError, Witness};

pub use dot::{representation_dot, structure_dot};
pub use structure::{parse_structure, LoadedStructure, StructureFile, STRUCTURE_VERSION};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("schema version {found} is not supported (expected {expected})")]
    Version { found: u32, expected: u32 },
    #[error("field `{field}`: {reason}")]
    Field { field: String, reason: String },
    #[error("invalid structure: {0}")]
    Algebra(#[from] AlgebraError),
    #[error("not a weak contact relation: {}", describe(.0))]
    InvalidContact(Witness),
}

impl From<AxiomError> for FormatError {
    fn from(e: AxiomError) -> Self {
        match e {
            AxiomError::InvalidContact(w) => FormatError::InvalidContact(w),
            other => FormatError::Field {
                field: "contact".into(),
                reason: other.to_string(),
            },
        }
    }
}

fn describe(w: &Witness) -> String {
    match w {
        Witness::ZeroContact { a, b } => format!("0 is related to a nonzero element ({a}, {b})"),
        Witness::Reflexivity { a } => format!("nonzero element {a} is not related to itself"),
        Witness::Symmetry { a, b } => format!("relation is not symmetric at ({a}, {b})"),
        Witness::Ext { a, b, a1, b1 } => format!("({a}, {b}) related but ({a1}, {b1}) above it is not"),
        other => format!("{other:?}"),
    }
}
