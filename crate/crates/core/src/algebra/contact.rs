use crate::bits::SubsetElement;

use super::{AlgebraError, FiniteJoinSemilattice};

/// A binary relation on carrier indices, stored as one bit row per element.
///
/// Nothing here enforces the weak contact axioms; that is the job of
/// [`check_weak_contact`](crate::axioms::check_weak_contact), which needs to
/// be able to inspect broken relations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ContactRelation {
    rows: Vec<SubsetElement>,
}

impl ContactRelation {
    pub fn empty(size: usize) -> Self {
        Self {
            rows: vec![SubsetElement::empty(size); size],
        }
    }

    /// Relation holding exactly the given unordered pairs plus every
    /// reflexive nonzero pair.
    pub fn from_pairs<I>(size: usize, pairs: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut rel = Self::empty(size);
        for i in 1..size {
            rel.relate(i, i);
        }
        for (a, b) in pairs {
            rel.relate(a, b);
        }
        rel
    }

    /// All nonzero pairs related.
    pub fn total(size: usize) -> Self {
        let mut row = SubsetElement::full(size);
        if size > 0 {
            row.remove(0);
        }
        let mut rows = vec![row; size];
        if size > 0 {
            rows[0] = SubsetElement::empty(size);
        }
        Self { rows }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn relates(&self, a: usize, b: usize) -> bool {
        self.rows[a].contains(b)
    }

    pub fn row(&self, a: usize) -> &SubsetElement {
        &self.rows[a]
    }

    /// Sets both `(a, b)` and `(b, a)`.
    pub fn relate(&mut self, a: usize, b: usize) {
        self.rows[a].insert(b);
        self.rows[b].insert(a);
    }

    pub fn unrelate(&mut self, a: usize, b: usize) {
        self.rows[a].remove(b);
        self.rows[b].remove(a);
    }

    /// Sets a single directed entry; only useful for building malformed
    /// relations.
    pub fn set_entry(&mut self, a: usize, b: usize, value: bool) {
        self.rows[a].set(b, value);
    }

    /// Related unordered pairs `i < j`, both nonzero, in lexicographic order.
    pub fn related_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..self.size() {
            for j in self.rows[i].iter().filter(|&j| j > i) {
                out.push((i, j));
            }
        }
        out
    }

    /// Unrelated unordered pairs of distinct nonzero elements, `i < j`.
    pub fn unrelated_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..self.size() {
            for j in i + 1..self.size() {
                if !self.relates(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Ordered pairs `(c0, c1)` with `c0` not in contact with `c1`, zero
    /// included, in lexicographic order.
    pub fn non_contact_ordered(&self) -> Vec<(usize, usize)> {
        let n = self.size();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if !self.relates(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// True if every pair in `self` is also in `other`.
    pub fn is_subrelation(&self, other: &Self) -> bool {
        self.rows.iter().zip(&other.rows).all(|(a, b)| a.is_subset(b))
    }
}

/// A semilattice together with a relation over the same carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContactStructure {
    lattice: FiniteJoinSemilattice,
    contact: ContactRelation,
}

impl ContactStructure {
    /// Pairs a lattice with a relation; only dimensions are checked here.
    pub fn new(lattice: FiniteJoinSemilattice, contact: ContactRelation) -> Result<Self, AlgebraError> {
        if lattice.len() != contact.size() {
            return Err(AlgebraError::DimensionMismatch {
                carrier: lattice.len(),
                relation: contact.size(),
            });
        }
        Ok(Self { lattice, contact })
    }

    /// The lattice with its overlap contact.
    pub fn with_overlap(lattice: FiniteJoinSemilattice) -> Self {
        let contact = overlap_contact(&lattice);
        Self { lattice, contact }
    }

    pub fn lattice(&self) -> &FiniteJoinSemilattice {
        &self.lattice
    }

    pub fn contact(&self) -> &ContactRelation {
        &self.contact
    }

    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lattice.is_empty()
    }

    pub fn relates(&self, a: usize, b: usize) -> bool {
        self.contact.relates(a, b)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.lattice.leq(a, b)
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.lattice.join(a, b)
    }

    /// Distinct nonzero unrelated pairs `i < j`.
    pub fn non_contact_pairs(&self) -> Vec<(usize, usize)> {
        self.contact.unrelated_pairs()
    }

    /// True when the contact is exactly the overlap relation of the lattice.
    pub fn has_overlap_contact(&self) -> bool {
        self.contact == overlap_contact(&self.lattice)
    }
}

/// `a δ b` iff some nonzero carrier element lies below both.
pub fn overlap_contact(lattice: &FiniteJoinSemilattice) -> ContactRelation {
    let n = lattice.len();
    let mut rel = ContactRelation::empty(n);
    for a in 1..n {
        for b in a..n {
            if lattice.down_set(a).intersects_beyond(lattice.down_set(b), 0) {
                rel.relate(a, b);
            }
        }
    }
    rel
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(width: usize, points: &[usize]) -> SubsetElement {
        SubsetElement::from_points(width, points.iter().copied())
    }

    #[test]
    fn overlap_on_two_point_powerset() {
        let s = FiniteJoinSemilattice::powerset(2).unwrap();
        let d = overlap_contact(&s);
        let one = s.index_of(&set(2, &[0])).unwrap();
        let two = s.index_of(&set(2, &[1])).unwrap();
        let both = s.index_of(&set(2, &[0, 1])).unwrap();
        assert!(d.relates(one, both));
        assert!(!d.relates(one, two));
        for a in 1..s.len() {
            assert!(d.relates(a, a));
        }
        assert!(d.row(0).is_empty());
    }

    #[test]
    fn overlap_ignores_set_intersection_outside_carrier() {
        // {0,1} and {1,2} intersect as sets, but {1} is not in the family
        let s = FiniteJoinSemilattice::join_closure(3, &[set(3, &[0, 1]), set(3, &[1, 2])]).unwrap();
        let a = s.index_of(&set(3, &[0, 1])).unwrap();
        let b = s.index_of(&set(3, &[1, 2])).unwrap();
        assert!(!overlap_contact(&s).relates(a, b));
    }

    #[test]
    fn pair_listings() {
        let rel = ContactRelation::from_pairs(4, [(1, 3)]);
        assert_eq!(rel.related_pairs(), vec![(1, 3)]);
        assert_eq!(rel.unrelated_pairs(), vec![(1, 2), (2, 3)]);
        assert_eq!(ContactRelation::total(4).unrelated_pairs(), vec![]);
        let s = FiniteJoinSemilattice::powerset(1).unwrap();
        assert!(ContactStructure::new(s, ContactRelation::empty(3)).is_err());
    }
}
