//! Decision procedures for the weak contact axioms and the (D) schemas.
//!
//! Every checker returns a [`Verdict`]; a failing verdict carries a
//! [`Witness`] that [`revalidate`] can confirm from the literal definition
//! of the schema. Witness search order is fixed (documented per checker) so
//! that the reported witness does not depend on the number of threads.

mod profile;
mod schemas;
mod weak;
mod witness;

use std::time::Duration;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use profile::{profile_of, AxiomProfile, Bounds};
pub use schemas::{check_d1, check_d1_plus, check_d2, check_d2_minus, decide_d2_all, non_contact_pair_count};
pub(crate) use weak::require_weak_contact;
pub use weak::{check_additive, check_weak_contact};
pub use witness::revalidate;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    WeakContact,
    Additive,
    D1,
    D1Plus,
    D2,
    D2All,
    D2Minus,
    EmbeddingCriterion,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::WeakContact => "weak_contact",
            Axiom::Additive => "additive",
            Axiom::D1 => "d1",
            Axiom::D1Plus => "d1_plus",
            Axiom::D2 => "d2",
            Axiom::D2All => "d2_all",
            Axiom::D2Minus => "d2_minus",
            Axiom::EmbeddingCriterion => "embedding_criterion",
        }
    }
}

/// Elements exhibiting a violation. Indices refer to the carrier of the
/// checked structure.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A related pair involving 0.
    ZeroContact { a: usize, b: usize },
    /// A nonzero element not in contact with itself.
    Reflexivity { a: usize },
    /// `a δ b` but not `b δ a`.
    Symmetry { a: usize, b: usize },
    /// `a δ b`, `a ≤ a1`, `b ≤ b1`, but not `a1 δ b1`.
    Ext { a: usize, b: usize, a1: usize, b1: usize },
    /// `a δ b+c` with neither `a δ b` nor `a δ c`.
    Additivity { a: usize, b: usize, c: usize },
    /// Elements `a`, `b` and the pairs `(c_{i,0}, c_{i,1})` of a schema
    /// instance whose premises hold and whose conclusion fails.
    Schema {
        a: usize,
        b: usize,
        pairs: Vec<(usize, usize)>,
    },
    /// `a` and `b` with `a ≰ b` but `κ(a) ≤ κ(b)`.
    NotOrderEmbedding { a: usize, b: usize },
    /// A non-contact pair whose images have a nonzero meet.
    OverlappingImages { a: usize, b: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "witness", rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail(Witness),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    /// Candidate tuples (element tuples or pair sets, depending on the
    /// checker) examined in search order up to the verdict.
    pub tuples: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub axiom: Axiom,
    pub n: Option<usize>,
    #[serde(flatten)]
    pub outcome: Outcome,
    pub stats: SearchStats,
}

impl Verdict {
    pub(crate) fn new(axiom: Axiom, n: Option<usize>, witness: Option<Witness>, tuples: u64) -> Self {
        Self {
            axiom,
            n,
            outcome: witness.map_or(Outcome::Pass, Outcome::Fail),
            stats: SearchStats {
                tuples,
                elapsed: Duration::ZERO,
            },
        }
    }

    pub(crate) fn timed(mut self, elapsed: Duration) -> Self {
        self.stats.elapsed = elapsed;
        self
    }

    pub fn passed(&self) -> bool {
        matches!(self.outcome, Outcome::Pass)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.outcome {
            Outcome::Pass => None,
            Outcome::Fail(w) => Some(w),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AxiomError {
    #[error("relation has dimension {relation}, carrier has {carrier} elements")]
    DimensionMismatch { carrier: usize, relation: usize },
    #[error("input is not a weak contact structure: {0:?}")]
    InvalidContact(Witness),
    #[error("schema arity must be positive")]
    ZeroArity,
}
