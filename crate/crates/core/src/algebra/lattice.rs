use std::collections::{BTreeSet, HashMap};
use std::sync::OnceLock;

use crate::bits::SubsetElement;

use super::AlgebraError;

/// A finite join-semilattice with 0, realized as a union-closed family of
/// subsets of a ground set. Carrier indices follow the numeric order of the
/// bit patterns, so index 0 is always the empty set and the order of
/// indices is a linear extension of the lattice order.
#[derive(Clone, Debug)]
pub struct FiniteJoinSemilattice {
    width: usize,
    carrier: Vec<SubsetElement>,
    lookup: HashMap<SubsetElement, usize>,
    down: Vec<SubsetElement>,
    up: Vec<SubsetElement>,
    join_table: OnceLock<Vec<u32>>,
}

/// Carriers up to this size get a cached join table on first use.
const JOIN_TABLE_LIMIT: usize = 1024;

impl PartialEq for FiniteJoinSemilattice {
    fn eq(&self, other: &Self) -> bool {
        self.width == other.width && self.carrier == other.carrier
    }
}

impl Eq for FiniteJoinSemilattice {}

impl FiniteJoinSemilattice {
    /// Smallest union-closed family containing `generators` and the empty
    /// set.
    pub fn join_closure(width: usize, generators: &[SubsetElement]) -> Result<Self, AlgebraError> {
        let mut family: BTreeSet<SubsetElement> = BTreeSet::new();
        family.insert(SubsetElement::empty(width));
        for g in generators {
            if g.width() != width {
                return Err(AlgebraError::WidthMismatch {
                    expected: width,
                    found: g.width(),
                });
            }
            let grown: Vec<SubsetElement> = family.iter().map(|x| x | g).collect();
            family.extend(grown);
        }
        Ok(Self::from_sorted_unchecked(width, family.into_iter().collect()))
    }

    /// The full powerset of a `points`-element ground set.
    pub fn powerset(points: usize) -> Result<Self, AlgebraError> {
        let singletons: Vec<_> = (0..points).map(|p| SubsetElement::singleton(points, p)).collect();
        Self::join_closure(points, &singletons)
    }

    /// Validates a carrier given in canonical (ascending) order.
    pub fn from_sorted_carrier(width: usize, carrier: Vec<SubsetElement>) -> Result<Self, AlgebraError> {
        for (i, x) in carrier.iter().enumerate() {
            if x.width() != width {
                return Err(AlgebraError::WidthMismatch {
                    expected: width,
                    found: x.width(),
                });
            }
            if i > 0 && carrier[i - 1] >= *x {
                return Err(AlgebraError::NotSorted { index: i });
            }
        }
        match carrier.first() {
            Some(z) if z.is_empty() => {}
            _ => return Err(AlgebraError::MissingZero),
        }
        let lattice = Self::from_sorted_unchecked(width, carrier);
        for i in 0..lattice.len() {
            for j in i + 1..lattice.len() {
                let u = lattice.carrier[i].union(&lattice.carrier[j]);
                if !lattice.lookup.contains_key(&u) {
                    return Err(AlgebraError::NotUnionClosed { left: i, right: j });
                }
            }
        }
        Ok(lattice)
    }

    fn from_sorted_unchecked(width: usize, carrier: Vec<SubsetElement>) -> Self {
        let n = carrier.len();
        let lookup = carrier.iter().enumerate().map(|(i, x)| (x.clone(), i)).collect();
        let mut down = vec![SubsetElement::empty(n); n];
        let mut up = vec![SubsetElement::empty(n); n];
        for (j, y) in carrier.iter().enumerate() {
            // subsets have smaller bit patterns, hence smaller indices
            for (i, x) in carrier[..=j].iter().enumerate() {
                if x.is_subset(y) {
                    down[j].insert(i);
                    up[i].insert(j);
                }
            }
        }
        Self {
            width,
            carrier,
            lookup,
            down,
            up,
            join_table: OnceLock::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    /// Never true: the carrier always holds 0.
    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn zero(&self) -> usize {
        0
    }

    /// The maximum element, the union of the whole carrier.
    pub fn top(&self) -> usize {
        self.carrier.len() - 1
    }

    pub fn carrier(&self) -> &[SubsetElement] {
        &self.carrier
    }

    pub fn element(&self, index: usize) -> &SubsetElement {
        &self.carrier[index]
    }

    pub fn index_of(&self, element: &SubsetElement) -> Option<usize> {
        self.lookup.get(element).copied()
    }

    fn check(&self, index: usize) -> Result<(), AlgebraError> {
        if index < self.len() {
            Ok(())
        } else {
            Err(AlgebraError::IndexOutOfRange { index, len: self.len() })
        }
    }

    /// Panics on an out-of-range index; see [`checked_join`](Self::checked_join).
    pub fn join(&self, x: usize, y: usize) -> usize {
        let n = self.len();
        assert!(x < n && y < n, "join of {x} and {y} outside carrier of size {n}");
        if n <= JOIN_TABLE_LIMIT {
            let table = self.join_table.get_or_init(|| {
                let mut t = Vec::with_capacity(n * n);
                for a in 0..n {
                    for b in 0..n {
                        t.push(self.join_by_lookup(a, b) as u32);
                    }
                }
                t
            });
            return table[x * n + y] as usize;
        }
        self.join_by_lookup(x, y)
    }

    fn join_by_lookup(&self, x: usize, y: usize) -> usize {
        if x == y {
            return x;
        }
        let u = self.carrier[x].union(&self.carrier[y]);
        self.lookup[&u]
    }

    pub fn checked_join(&self, x: usize, y: usize) -> Result<usize, AlgebraError> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.join(x, y))
    }

    pub fn join_all<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items.into_iter().fold(0, |acc, x| self.join(acc, x))
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.down[y].contains(x)
    }

    pub fn checked_leq(&self, x: usize, y: usize) -> Result<bool, AlgebraError> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.leq(x, y))
    }

    /// Greatest common lower bound inside the carrier. The common lower
    /// bounds form a join-closed set containing 0, so their union is the
    /// maximum.
    pub fn meet(&self, x: usize, y: usize) -> usize {
        let common = self.down[x].intersection(&self.down[y]);
        let mut acc = SubsetElement::empty(self.width);
        for i in common.iter() {
            acc.union_with(&self.carrier[i]);
        }
        self.lookup[&acc]
    }

    pub fn checked_meet(&self, x: usize, y: usize) -> Result<usize, AlgebraError> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.meet(x, y))
    }

    /// Indices below `x` (including `x`), as a set over the carrier.
    pub fn down_set(&self, x: usize) -> &SubsetElement {
        &self.down[x]
    }

    /// Indices above `x` (including `x`).
    pub fn up_set(&self, x: usize) -> &SubsetElement {
        &self.up[x]
    }

    /// Minimal nonzero elements.
    pub fn atoms(&self) -> Vec<usize> {
        (1..self.len()).filter(|&i| self.down[i].count() == 2).collect()
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// True when the carrier is the full powerset of the ground set.
    pub fn is_powerset(&self) -> bool {
        self.width < usize::BITS as usize && self.len() == 1usize << self.width
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(width: usize, points: &[usize]) -> SubsetElement {
        SubsetElement::from_points(width, points.iter().copied())
    }

    #[test]
    fn closure_of_nothing_is_zero_only() {
        let s = FiniteJoinSemilattice::join_closure(5, &[]).unwrap();
        assert_eq!(s.len(), 1);
        assert!(s.atoms().is_empty());
        assert_eq!(s.top(), 0);
    }

    #[test]
    fn two_point_powerset() {
        let s = FiniteJoinSemilattice::join_closure(2, &[set(2, &[0]), set(2, &[1])]).unwrap();
        assert_eq!(s.len(), 4);
        assert_eq!(s.atoms(), vec![1, 2]);
        assert_eq!(s.meet(1, 2), 0);
        assert!(s.is_powerset());
    }

    #[test]
    fn six_two_subsets_of_four_points_close_to_twelve() {
        let mut gens = Vec::new();
        for a in 0..4 {
            for b in a + 1..4 {
                gens.push(set(4, &[a, b]));
            }
        }
        let s = FiniteJoinSemilattice::join_closure(4, &gens).unwrap();
        assert_eq!(s.len(), 12);
        let sizes: Vec<usize> = s.carrier().iter().map(|x| x.count()).collect();
        assert_eq!(sizes.iter().filter(|&&c| c == 2).count(), 6);
        assert_eq!(sizes.iter().filter(|&&c| c == 3).count(), 4);
        assert_eq!(sizes.iter().filter(|&&c| c == 4).count(), 1);
        let mut atoms: Vec<_> = s.atoms().into_iter().map(|i| s.element(i).clone()).collect();
        atoms.sort();
        gens.sort();
        assert_eq!(atoms, gens);
        // {2,3} and {0,1} share no nonzero lower bound
        let x = s.index_of(&set(4, &[2, 3])).unwrap();
        let y = s.index_of(&set(4, &[0, 1])).unwrap();
        assert_eq!(s.meet(x, y), 0);
        // {1,2,3} and {0,2,3}: intersection {2,3} is in the carrier
        let p = s.index_of(&set(4, &[1, 2, 3])).unwrap();
        let q = s.index_of(&set(4, &[0, 2, 3])).unwrap();
        assert_eq!(s.meet(p, q), x);
    }

    #[test]
    fn meet_below_intersection_when_not_closed() {
        // {0,1},{1,2} and their union; intersection {1} missing
        let s = FiniteJoinSemilattice::join_closure(3, &[set(3, &[0, 1]), set(3, &[1, 2])]).unwrap();
        let a = s.index_of(&set(3, &[0, 1])).unwrap();
        let b = s.index_of(&set(3, &[1, 2])).unwrap();
        assert_eq!(s.meet(a, b), 0);
    }

    #[test]
    fn checked_operations_reject_bad_indices() {
        let s = FiniteJoinSemilattice::powerset(1).unwrap();
        assert!(matches!(
            s.checked_join(0, 2),
            Err(AlgebraError::IndexOutOfRange { index: 2, len: 2 })
        ));
        assert!(s.checked_leq(3, 0).is_err());
        assert!(s.checked_meet(0, 9).is_err());
        assert_eq!(s.checked_join(0, 1), Ok(1));
    }

    #[test]
    fn carrier_validation() {
        let bad = vec![SubsetElement::empty(2), set(2, &[0]), set(2, &[1])];
        assert_eq!(
            FiniteJoinSemilattice::from_sorted_carrier(2, bad),
            Err(AlgebraError::NotUnionClosed { left: 1, right: 2 })
        );
        let unsorted = vec![SubsetElement::empty(2), set(2, &[1]), set(2, &[0])];
        assert_eq!(
            FiniteJoinSemilattice::from_sorted_carrier(2, unsorted),
            Err(AlgebraError::NotSorted { index: 2 })
        );
        assert_eq!(
            FiniteJoinSemilattice::from_sorted_carrier(2, vec![set(2, &[0])]),
            Err(AlgebraError::MissingZero)
        );
        assert!(FiniteJoinSemilattice::join_closure(2, &[set(3, &[0])]).is_err());
    }

    fn family() -> impl Strategy<Value = FiniteJoinSemilattice> {
        proptest::collection::vec(0u64..64, 0..5).prop_map(|gens| {
            let gens: Vec<_> = gens.into_iter().map(|g| SubsetElement::from_u64(6, g)).collect();
            FiniteJoinSemilattice::join_closure(6, &gens).unwrap()
        })
    }

    proptest! {
        #[test]
        fn join_table_laws(s in family()) {
            let n = s.len();
            for x in 0..n {
                prop_assert_eq!(s.join(0, x), x);
                prop_assert_eq!(s.join(x, x), x);
                for y in 0..n {
                    let xy = s.join(x, y);
                    prop_assert_eq!(xy, s.join(y, x));
                    prop_assert!(s.leq(x, xy) && s.leq(y, xy));
                    for z in 0..n {
                        prop_assert_eq!(s.join(xy, z), s.join(x, s.join(y, z)));
                        // least upper bound
                        if s.leq(x, z) && s.leq(y, z) {
                            prop_assert!(s.leq(xy, z));
                        }
                    }
                }
            }
        }

        #[test]
        fn order_and_meet_laws(s in family()) {
            let n = s.len();
            for x in 0..n {
                prop_assert!(s.leq(0, x));
                for y in 0..n {
                    prop_assert_eq!(s.leq(x, y), s.join(x, y) == y);
                    if s.leq(x, y) && s.leq(y, x) {
                        prop_assert_eq!(x, y);
                    }
                    let m = s.meet(x, y);
                    prop_assert!(s.leq(m, x) && s.leq(m, y));
                    for z in 0..n {
                        if s.leq(z, x) && s.leq(z, y) {
                            prop_assert!(s.leq(z, m));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn powerset_meet_is_intersection() {
        let s = FiniteJoinSemilattice::powerset(4).unwrap();
        for x in 0..s.len() {
            for y in 0..s.len() {
                let m = s.meet(x, y);
                assert_eq!(*s.element(m), s.element(x) & s.element(y));
            }
        }
    }
}
