use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::algebra::{ContactStructure, FiniteJoinSemilattice};

use super::EnumerationError;

/// Largest carrier the permutation-based canonical form accepts.
pub const ISO_MAX: usize = 8;

/// Canonical form of a contact structure: among all relabellings fixing 0,
/// the least order matrix, then the least contact matrix, each packed
/// row-major into a `u64`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct IsoClassKey {
    pub size: usize,
    pub order: u64,
    pub contact: u64,
}

/// `down[i]` has bit `j` set iff `j ≤ i`.
pub(crate) fn down_masks(lat: &FiniteJoinSemilattice) -> Vec<u64> {
    (0..lat.len())
        .map(|i| (0..lat.len()).filter(|&j| lat.leq(j, i)).fold(0, |m, j| m | 1 << j))
        .collect()
}

fn matrix_code(rows: &[u64], p: &[usize]) -> u64 {
    let n = rows.len();
    let mut code = 0u64;
    for (i, &row) in rows.iter().enumerate() {
        let mut r = row;
        while r != 0 {
            let j = r.trailing_zeros() as usize;
            r &= r - 1;
            code |= 1 << (p[i] * n + p[j]);
        }
    }
    code
}

fn permutations(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (1..n).permutations(n.saturating_sub(1)).map(|rest| {
        let mut p = Vec::with_capacity(rest.len() + 1);
        p.push(0);
        p.extend(rest);
        p
    })
}

/// Least order code over all relabellings, with every relabelling that
/// attains it. These form a coset of the automorphism group, so a contact
/// on this lattice is canonicalised by minimising over them alone.
pub(crate) fn canonical_labelings(down: &[u64]) -> (u64, Vec<Vec<usize>>) {
    let mut best = u64::MAX;
    let mut perms = Vec::new();
    for p in permutations(down.len()) {
        let code = matrix_code(down, &p);
        if code < best {
            best = code;
            perms.clear();
        }
        if code == best {
            perms.push(p);
        }
    }
    (best, perms)
}

pub(crate) fn contact_rows(cs: &ContactStructure) -> Vec<u64> {
    let n = cs.len();
    (0..n)
        .map(|i| (0..n).filter(|&j| cs.relates(i, j)).fold(0, |m, j| m | 1 << j))
        .collect()
}

pub(crate) fn key_with(size: usize, order: u64, labelings: &[Vec<usize>], contact: &[u64]) -> IsoClassKey {
    let contact = labelings.iter().map(|p| matrix_code(contact, p)).min().unwrap_or(0);
    IsoClassKey { size, order, contact }
}

fn check_size(n: usize) -> Result<(), EnumerationError> {
    if n > ISO_MAX {
        return Err(EnumerationError::CapExceeded {
            requested: n,
            cap: ISO_MAX,
        });
    }
    Ok(())
}

/// Canonical key of a semilattice alone (`contact` is 0).
pub fn semilattice_key(lat: &FiniteJoinSemilattice) -> Result<IsoClassKey, EnumerationError> {
    check_size(lat.len())?;
    let (order, _) = canonical_labelings(&down_masks(lat));
    Ok(IsoClassKey {
        size: lat.len(),
        order,
        contact: 0,
    })
}

/// Two structures share a key iff some bijection fixing 0 preserves the
/// order (hence joins) and the contact relation in both directions.
pub fn iso_class_key(cs: &ContactStructure) -> Result<IsoClassKey, EnumerationError> {
    let lat = cs.lattice();
    check_size(lat.len())?;
    let (order, labelings) = canonical_labelings(&down_masks(lat));
    Ok(key_with(lat.len(), order, &labelings, &contact_rows(cs)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ContactRelation;
    use crate::bits::SubsetElement;

    fn chain3_on(points: [usize; 2]) -> FiniteJoinSemilattice {
        let a = SubsetElement::from_points(3, [points[0]]);
        let b = SubsetElement::from_points(3, points);
        FiniteJoinSemilattice::join_closure(3, &[a, b]).unwrap()
    }

    #[test]
    fn relabelled_chains_agree() {
        let k1 = semilattice_key(&chain3_on([0, 1])).unwrap();
        let k2 = semilattice_key(&chain3_on([2, 0])).unwrap();
        assert_eq!(k1, k2);
        let v = FiniteJoinSemilattice::powerset(1).unwrap();
        assert_ne!(k1, semilattice_key(&v).unwrap());
    }

    #[test]
    fn contact_distinguishes() {
        let p = FiniteJoinSemilattice::powerset(2).unwrap();
        let overlap = ContactStructure::with_overlap(p.clone());
        let total = ContactStructure::new(p, ContactRelation::total(4)).unwrap();
        let (k1, k2) = (iso_class_key(&overlap).unwrap(), iso_class_key(&total).unwrap());
        assert_eq!(k1.order, k2.order);
        assert_ne!(k1.contact, k2.contact);
    }

    #[test]
    fn cap() {
        let p = FiniteJoinSemilattice::powerset(4).unwrap();
        assert!(semilattice_key(&p).is_err());
    }
}
