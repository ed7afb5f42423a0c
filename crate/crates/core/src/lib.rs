//! Finite weak contact join-semilattices.
//!
//! Elements are concrete subsets of a finite ground set ([`SubsetElement`]);
//! a semilattice is a union-closed family containing the empty set. On top
//! of that substrate the crate decides the weak contact axioms, additivity
//! and the (D1)/(D1+)/(D2_n)/(D2−) schemas, builds the parity
//! counterexamples `S_n` inside free Boolean algebras, decides
//! representability in fields of sets, and enumerates small structures up
//! to isomorphism.

pub mod algebra;
pub mod axioms;
pub mod bits;
pub mod certificate;
pub mod constructions;
pub mod enumeration;
pub mod format;
pub mod oracle;
pub mod representation;

pub use algebra::{
    overlap_contact, AlgebraError, ContactRelation, ContactStructure, FiniteJoinSemilattice, FreeBooleanAlgebra,
    SelectorFunction,
};
pub use axioms::{Axiom, AxiomError, AxiomProfile, Bounds, Outcome, Verdict, Witness};
pub use bits::SubsetElement;
