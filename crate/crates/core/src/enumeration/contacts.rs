use std::collections::HashSet;

use crate::algebra::{ContactRelation, FiniteJoinSemilattice};

use super::EnumerationError;

/// Incomparable pairs beyond this many make the subset sweep impractical.
pub const CONTACT_PAIR_CAP: usize = 20;

/// Every weak contact relation on `s`, each exactly once, ordered by the
/// number of related incomparable pairs and then by their bit pattern, so
/// the total relation comes last.
///
/// Comparable nonzero pairs are forced by reflexivity and (Ext); a relation
/// is fixed by which incomparable pairs it contains. Each subset of those
/// pairs is closed upward under (Ext) and the distinct closures kept.
pub fn enumerate_contacts(s: &FiniteJoinSemilattice) -> Result<Vec<ContactRelation>, EnumerationError> {
    let n = s.len();
    let pairs: Vec<(usize, usize)> = (1..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|&(a, b)| !s.comparable(a, b))
        .collect();
    if pairs.len() > CONTACT_PAIR_CAP {
        return Err(EnumerationError::TooManyPairs {
            pairs: pairs.len(),
            cap: CONTACT_PAIR_CAP,
        });
    }
    let dominates =
        |(a, b): (usize, usize), (x, y): (usize, usize)| (s.leq(a, x) && s.leq(b, y)) || (s.leq(a, y) && s.leq(b, x));
    // pairs forced once pair p is related
    let closure: Vec<u32> = pairs
        .iter()
        .map(|&p| {
            (0..pairs.len())
                .filter(|&q| dominates(p, pairs[q]))
                .fold(0, |m, q| m | 1 << q)
        })
        .collect();
    // pairs with a common nonzero lower bound are always related
    let overlap = (0..pairs.len())
        .filter(|&q| {
            let (a, b) = pairs[q];
            s.meet(a, b) != 0
        })
        .fold(0u32, |m, q| m | 1 << q);

    let mut seen = HashSet::new();
    let mut masks = Vec::new();
    for subset in 0u32..(1 << pairs.len()) {
        let mut mask = overlap;
        let mut rest = subset;
        while rest != 0 {
            let q = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            mask |= closure[q];
        }
        if seen.insert(mask) {
            masks.push(mask);
        }
    }
    masks.sort_by_key(|&m| (m.count_ones(), m));
    Ok(masks
        .into_iter()
        .map(|mask| {
            let mut rel = ContactRelation::empty(n);
            for a in 1..n {
                for b in a..n {
                    if s.comparable(a, b) {
                        rel.relate(a, b);
                    }
                }
            }
            for (q, &(a, b)) in pairs.iter().enumerate() {
                if mask >> q & 1 == 1 {
                    rel.relate(a, b);
                }
            }
            rel
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ContactStructure;
    use crate::axioms::check_weak_contact;

    #[test]
    fn chain_has_one() {
        let s = FiniteJoinSemilattice::powerset(1).unwrap();
        let cs = enumerate_contacts(&s).unwrap();
        assert_eq!(cs.len(), 1);
        assert!(cs[0].relates(1, 1));
    }

    #[test]
    fn all_valid_distinct_total_last() {
        let s = FiniteJoinSemilattice::powerset(3).unwrap();
        let rels = enumerate_contacts(&s).unwrap();
        for r in &rels {
            let cs = ContactStructure::new(s.clone(), r.clone()).unwrap();
            assert!(check_weak_contact(&cs).unwrap().passed());
        }
        let distinct: HashSet<_> = rels.iter().map(|r| r.related_pairs()).collect();
        assert_eq!(distinct.len(), rels.len());
        assert_eq!(rels.last().unwrap(), &ContactRelation::total(8));
        assert_eq!(rels[0], crate::algebra::overlap_contact(&s));
    }
}
