use std::time::Instant;

use crate::algebra::{ContactRelation, ContactStructure, FiniteJoinSemilattice};
use crate::axioms::{Axiom, Verdict, Witness};
use crate::bits::SubsetElement;

use super::ConstructionError;

/// A map `κ` from the carrier of a contact structure into a target
/// semilattice, given by target indices.
#[derive(Clone, Debug)]
pub struct ContactMap {
    source: ContactStructure,
    target: FiniteJoinSemilattice,
    images: Vec<usize>,
}

impl ContactMap {
    pub fn new(
        source: ContactStructure,
        target: FiniteJoinSemilattice,
        images: Vec<usize>,
    ) -> Result<Self, ConstructionError> {
        if images.len() != source.len() {
            return Err(ConstructionError::LengthMismatch {
                source_len: source.len(),
                images: images.len(),
            });
        }
        if let Some(element) = images.iter().position(|&q| q >= target.len()) {
            return Err(ConstructionError::ImageOutOfRange { element });
        }
        Ok(Self { source, target, images })
    }

    /// Inclusion of a union-closed family into a larger one over the same
    /// ground set.
    pub fn inclusion(source: ContactStructure, target: FiniteJoinSemilattice) -> Result<Self, ConstructionError> {
        let images = source
            .lattice()
            .carrier()
            .iter()
            .enumerate()
            .map(|(element, x)| {
                if x.width() != target.width() {
                    return Err(ConstructionError::NotInTarget { element });
                }
                target.index_of(x).ok_or(ConstructionError::NotInTarget { element })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(source, target, images)
    }

    pub fn source(&self) -> &ContactStructure {
        &self.source
    }

    pub fn target(&self) -> &FiniteJoinSemilattice {
        &self.target
    }

    pub fn image(&self, a: usize) -> usize {
        self.images[a]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn check_invariants(&self) -> Result<(), ConstructionError> {
        let s = self.source.lattice();
        for a in 0..s.len() {
            if (a == 0) != (self.images[a] == self.target.zero()) {
                return Err(ConstructionError::ZeroReflection { element: a });
            }
        }
        for a in 0..s.len() {
            for b in s.up_set(a).iter() {
                if !self.target.leq(self.images[a], self.images[b]) {
                    return Err(ConstructionError::NotOrderPreserving { a, b });
                }
            }
        }
        Ok(())
    }

    /// Whether `κ` preserves and reflects contact for `relation` on the
    /// target.
    pub fn is_contact_embedding(&self, relation: &ContactRelation) -> bool {
        let n = self.source.len();
        let injective = (0..n).all(|a| (a + 1..n).all(|b| self.images[a] != self.images[b]));
        injective
            && (0..n)
                .all(|a| (0..n).all(|b| self.source.relates(a, b) == relation.relates(self.images[a], self.images[b])))
    }
}

/// The least weak contact on the target making `κ` a contact homomorphism:
/// `q1 δ q2` iff they share a nonzero lower bound, or dominate the images of
/// a related source pair.
pub fn min_contact_extension(map: &ContactMap) -> Result<ContactRelation, ConstructionError> {
    map.check_invariants()?;
    let q = &map.target;
    let n = q.len();
    let mut rel = ContactRelation::empty(n);
    for x in 1..n {
        for y in x..n {
            if q.down_set(x).intersects_beyond(q.down_set(y), 0) {
                rel.relate(x, y);
            }
        }
    }
    let mut seen = std::collections::HashSet::new();
    for (a1, a2) in map
        .source
        .contact()
        .related_pairs()
        .into_iter()
        .chain((1..map.source.len()).map(|a| (a, a)))
    {
        let (k1, k2) = (map.images[a1], map.images[a2]);
        if !seen.insert((k1.min(k2), k1.max(k2))) {
            continue;
        }
        let up2 = q.up_set(k2);
        let up1 = q.up_set(k1);
        for b1 in up1.iter() {
            for b2 in up2.iter() {
                rel.relate(b1, b2);
            }
        }
    }
    Ok(rel)
}

/// Checks that `κ` is an order embedding and sends every non-contact source
/// pair to elements whose meet in the target is 0. Search order: order
/// pairs `(a, b)` first, then non-contact pairs.
pub fn verify_embedding_criterion(map: &ContactMap) -> Verdict {
    let start = Instant::now();
    let s = map.source.lattice();
    let q = &map.target;
    let mut tuples = 0u64;
    for a in 0..s.len() {
        for b in 0..s.len() {
            tuples += 1;
            if s.leq(a, b) != q.leq(map.images[a], map.images[b]) {
                return Verdict::new(
                    Axiom::EmbeddingCriterion,
                    None,
                    Some(Witness::NotOrderEmbedding { a, b }),
                    tuples,
                )
                .timed(start.elapsed());
            }
        }
    }
    for (a, b) in map.source.non_contact_pairs() {
        tuples += 1;
        if q.meet(map.images[a], map.images[b]) != q.zero() {
            return Verdict::new(
                Axiom::EmbeddingCriterion,
                None,
                Some(Witness::OverlappingImages { a, b }),
                tuples,
            )
            .timed(start.elapsed());
        }
    }
    Verdict::new(Axiom::EmbeddingCriterion, None, None, tuples).timed(start.elapsed())
}

/// The minimal extension of `source`'s contact to the full powerset of its
/// ground set, queried pointwise without building the powerset: `x δ y`
/// iff `x ∩ y ≠ ∅` or `x ⊇ s1`, `y ⊇ s2` for some related pair of the
/// source.
pub fn powerset_extension_relates(source: &ContactStructure, x: &SubsetElement, y: &SubsetElement) -> bool {
    if x.is_empty() || y.is_empty() {
        return false;
    }
    if x.intersects(y) {
        return true;
    }
    let lat = source.lattice();
    let below = |z: &SubsetElement| -> SubsetElement {
        let mut set = SubsetElement::empty(lat.len());
        for (i, e) in lat.carrier().iter().enumerate().skip(1) {
            if e.is_subset(z) {
                set.insert(i);
            }
        }
        set
    };
    let bx = below(x);
    let by = below(y);
    bx.iter().any(|a| source.contact().row(a).intersects(&by))
}
