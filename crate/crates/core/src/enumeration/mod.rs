//! All small weak contact semilattices up to isomorphism, and corpus-wide
//! checks of the implications between the axioms and representability.

mod contacts;
mod corpus;
mod iso;
mod lattices;

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::axioms::AxiomError;
use crate::representation::RepresentationError;

pub use contacts::{enumerate_contacts, CONTACT_PAIR_CAP};
pub use corpus::{
    check_implications, classify_corpus, find_minimal_separators, CorpusRecord, Implication, ImplicationCheck,
    ImplicationReport, Provenance,
};
pub use iso::{iso_class_key, semilattice_key, IsoClassKey, ISO_MAX};
pub use lattices::{enumerate_semilattices, enumerate_semilattices_keyed, SEMILATTICE_MAX_SIZE};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("size {requested} exceeds the cap of {cap}")]
    CapExceeded { requested: usize, cap: usize },
    #[error("{pairs} incomparable pairs exceed the cap of {cap}")]
    TooManyPairs { pairs: usize, cap: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Axiom(#[from] AxiomError),
    #[error(transparent)]
    Representation(#[from] RepresentationError),
}
