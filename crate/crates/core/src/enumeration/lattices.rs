use std::collections::BTreeMap;

use crate::algebra::FiniteJoinSemilattice;
use crate::bits::SubsetElement;

use super::iso::canonical_labelings;
use super::{EnumerationError, IsoClassKey};

/// Default and hard cap on the carrier size for lattice enumeration.
pub const SEMILATTICE_MAX_SIZE: usize = 7;

/// Posets on `0..k` with 0 least and labels extending the order, as
/// `down[i]` = bitmask of elements `≤ i`.
struct Generator {
    size: usize,
    down: Vec<u64>,
    found: Vec<Vec<u64>>,
}

fn greatest(set: u64, down: &[u64]) -> bool {
    // some element of `set` lies above all others
    let mut s = set;
    while s != 0 {
        let x = s.trailing_zeros() as usize;
        s &= s - 1;
        if set & !down[x] == 0 {
            return true;
        }
    }
    false
}

fn least(set: u64, down: &[u64]) -> bool {
    let mut s = set;
    while s != 0 {
        let x = s.trailing_zeros() as usize;
        s &= s - 1;
        let above_x = (0..down.len())
            .filter(|&y| down[y] >> x & 1 == 1)
            .fold(0u64, |m, y| m | 1 << y);
        if set & !above_x == 0 {
            return true;
        }
    }
    false
}

impl Generator {
    /// Every prefix of a natural labelling is a down-set, and down-sets of
    /// a lattice are closed under meets, so prefixes lacking a meet die.
    fn meets_exist(&self) -> bool {
        let k = self.down.len();
        let new = k - 1;
        (0..new).all(|i| greatest(self.down[i] & self.down[new], &self.down))
    }

    fn joins_exist(&self) -> bool {
        let n = self.down.len();
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                let upper = (0..n)
                    .filter(|&u| self.down[u] >> i & 1 == 1 && self.down[u] >> j & 1 == 1)
                    .fold(0u64, |m, u| m | 1 << u);
                least(upper, &self.down)
            })
        })
    }

    fn extend(&mut self) {
        let k = self.down.len();
        if k == self.size {
            if self.joins_exist() {
                self.found.push(self.down.clone());
            }
            return;
        }
        // strict down-sets of the new element: down-closed, containing 0
        for mask in 0u64..(1 << (k - 1)) {
            let below = (mask << 1) | 1;
            let closed = (0..k).all(|x| below >> x & 1 == 0 || self.down[x] & !below == 0);
            if !closed {
                continue;
            }
            self.down.push(below | 1 << k);
            if self.meets_exist() {
                self.extend();
            }
            self.down.pop();
        }
    }
}

/// Realises an abstract lattice as a union-closed family: `a` is sent to
/// the set of non-top elements `m` with `a ≰ m`.
fn realize(down: &[u64]) -> FiniteJoinSemilattice {
    let n = down.len();
    let full = (1u64 << n) - 1;
    let top = (0..n).find(|&t| down[t] == full).expect("lattice has a top");
    let columns: Vec<usize> = (0..n).filter(|&m| m != top).collect();
    let images: Vec<SubsetElement> = (0..n)
        .map(|a| {
            let points = columns
                .iter()
                .enumerate()
                .filter(|&(_, &m)| down[m] >> a & 1 == 0)
                .map(|(k, _)| k);
            SubsetElement::from_points(columns.len(), points)
        })
        .collect();
    let lat = FiniteJoinSemilattice::join_closure(columns.len(), &images).expect("filter images are union-closed");
    debug_assert_eq!(lat.len(), n);
    lat
}

/// Lattices of exactly `size` elements, one per isomorphism class, keyed.
fn classes_of_size(size: usize) -> BTreeMap<IsoClassKey, FiniteJoinSemilattice> {
    let mut out = BTreeMap::new();
    if size == 0 {
        return out;
    }
    let mut g = Generator {
        size,
        down: vec![1],
        found: Vec::new(),
    };
    g.extend();
    let mut seen = std::collections::HashSet::new();
    for down in g.found {
        let (order, _) = canonical_labelings(&down);
        if seen.insert(order) {
            let key = IsoClassKey {
                size,
                order,
                contact: 0,
            };
            out.insert(key, realize(&down));
        }
    }
    out
}

/// Every join-semilattice with 0 of at most `max_size` elements, once per
/// isomorphism class, ordered by size and then canonical key.
pub fn enumerate_semilattices(max_size: usize) -> Result<Vec<FiniteJoinSemilattice>, EnumerationError> {
    Ok(enumerate_semilattices_keyed(max_size)?
        .into_iter()
        .map(|(_, l)| l)
        .collect())
}

pub fn enumerate_semilattices_keyed(
    max_size: usize,
) -> Result<Vec<(IsoClassKey, FiniteJoinSemilattice)>, EnumerationError> {
    if max_size > SEMILATTICE_MAX_SIZE {
        return Err(EnumerationError::CapExceeded {
            requested: max_size,
            cap: SEMILATTICE_MAX_SIZE,
        });
    }
    Ok((1..=max_size).flat_map(classes_of_size).collect())
}
