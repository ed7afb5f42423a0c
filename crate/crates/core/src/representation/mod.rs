//! Deciding embeddability into a powerset algebra, either with some weak
//! contact (`Mode::Weak`) or with the overlap contact (`Mode::Overlap`).
//!
//! Every join-preserving, 0-reflecting map into a powerset induces, per
//! ground point, a join-prime filter of the semilattice; its complement is
//! a join-closed down-set, hence a principal ideal `↓m`. So it suffices to
//! try the canonical map `a ↦ {m : a ≰ m}` over the columns `m` whose
//! filter contains no non-contact pair. [`brute_force_representation`]
//! searches maps directly and is used to cross-check that argument.

mod brute;
mod columns;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::ContactStructure;
use crate::axioms::AxiomError;
use crate::bits::SubsetElement;

pub use brute::{brute_force_representation, BruteForceLimits, BruteOutcome};
pub use columns::{
    admissible_columns, decide_overlap_representable, decide_representable, decide_weak_representable, ColumnSet,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Weak,
    Overlap,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Weak => "weak",
            Mode::Overlap => "overlap",
        }
    }
}

/// An embedding `κ` of a contact structure into the powerset of
/// `{0, .., ground_size - 1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub mode: Mode,
    pub ground_size: usize,
    /// Carrier element behind each ground point, for column-built maps.
    pub columns: Option<Vec<usize>>,
    pub images: Vec<SubsetElement>,
}

/// Why no representation exists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Obstruction {
    /// A nonzero element no admissible column separates from 0.
    EmptyImage { a: usize },
    /// Two elements no admissible column separates.
    Indistinguishable { a: usize, b: usize },
    /// A contact pair sharing no admissible column.
    MissingSharedColumn { a: usize, b: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepresentationOutcome {
    Represented(Representation),
    Refused(Obstruction),
}

impl RepresentationOutcome {
    pub fn is_represented(&self) -> bool {
        matches!(self, RepresentationOutcome::Represented(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepresentationError {
    #[error(transparent)]
    Axiom(#[from] AxiomError),
    #[error("carrier of {len} elements exceeds the brute-force limit of {limit}")]
    TooLarge { len: usize, limit: usize },
}

impl Representation {
    /// Checks every defining property directly against the structure.
    pub fn validate(&self, cs: &ContactStructure) -> Result<(), String> {
        let lat = cs.lattice();
        let n = lat.len();
        if self.images.len() != n {
            return Err(format!("{} images for {} elements", self.images.len(), n));
        }
        if let Some(x) = self.images.iter().position(|img| img.width() != self.ground_size) {
            return Err(format!("image of {x} has the wrong width"));
        }
        if let Some(cols) = &self.columns {
            if cols.len() != self.ground_size || cols.iter().any(|&m| m >= n) {
                return Err("column list does not match the ground set".into());
            }
        }
        if !self.images[0].is_empty() {
            return Err("0 is not mapped to the empty set".into());
        }
        for a in 0..n {
            if a != 0 && self.images[a].is_empty() {
                return Err(format!("nonzero element {a} has an empty image"));
            }
            for b in a + 1..n {
                if self.images[a] == self.images[b] {
                    return Err(format!("elements {a} and {b} share an image"));
                }
                if self.images[lat.join(a, b)] != self.images[a].union(&self.images[b]) {
                    return Err(format!("join of {a} and {b} is not preserved"));
                }
            }
        }
        for a in 1..n {
            for b in a..n {
                let meet = self.images[a].intersects(&self.images[b]);
                if !cs.relates(a, b) && meet {
                    return Err(format!("non-contact pair {a}, {b} has intersecting images"));
                }
                if self.mode == Mode::Overlap && cs.relates(a, b) && !meet {
                    return Err(format!("contact pair {a}, {b} has disjoint images"));
                }
            }
        }
        Ok(())
    }
}
