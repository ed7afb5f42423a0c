use crate::algebra::ContactStructure;
use crate::axioms::require_weak_contact;
use crate::bits::SubsetElement;

use super::{Mode, Obstruction, Representation, RepresentationError, RepresentationOutcome};

/// Carrier elements `m` whose filter `{x : x ≰ m}` is nonempty and holds no
/// non-contact pair, ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnSet {
    pub columns: Vec<usize>,
}

pub fn admissible_columns(cs: &ContactStructure) -> ColumnSet {
    let lat = cs.lattice();
    let pairs = cs.non_contact_pairs();
    let columns = (0..lat.top())
        .filter(|&m| pairs.iter().all(|&(a, b)| lat.leq(a, m) || lat.leq(b, m)))
        .collect();
    ColumnSet { columns }
}

fn canonical_images(cs: &ContactStructure, cols: &ColumnSet) -> Vec<SubsetElement> {
    let lat = cs.lattice();
    let u = cols.columns.len();
    (0..lat.len())
        .map(|a| SubsetElement::from_points(u, (0..u).filter(|&k| !lat.leq(a, cols.columns[k]))))
        .collect()
}

pub fn decide_representable(cs: &ContactStructure, mode: Mode) -> Result<RepresentationOutcome, RepresentationError> {
    require_weak_contact(cs)?;
    let cols = admissible_columns(cs);
    let images = canonical_images(cs, &cols);
    let n = images.len();
    if let Some(a) = (1..n).find(|&a| images[a].is_empty()) {
        return Ok(RepresentationOutcome::Refused(Obstruction::EmptyImage { a }));
    }
    for a in 1..n {
        if let Some(b) = (a + 1..n).find(|&b| images[a] == images[b]) {
            return Ok(RepresentationOutcome::Refused(Obstruction::Indistinguishable { a, b }));
        }
    }
    if mode == Mode::Overlap {
        for (a, b) in cs.contact().related_pairs() {
            if !images[a].intersects(&images[b]) {
                return Ok(RepresentationOutcome::Refused(Obstruction::MissingSharedColumn {
                    a,
                    b,
                }));
            }
        }
    }
    Ok(RepresentationOutcome::Represented(Representation {
        mode,
        ground_size: cols.columns.len(),
        columns: Some(cols.columns),
        images,
    }))
}

/// Embeddability into a powerset algebra with some weak contact.
pub fn decide_weak_representable(cs: &ContactStructure) -> Result<RepresentationOutcome, RepresentationError> {
    decide_representable(cs, Mode::Weak)
}

/// Embeddability into a field of sets with the overlap contact.
pub fn decide_overlap_representable(cs: &ContactStructure) -> Result<RepresentationOutcome, RepresentationError> {
    decide_representable(cs, Mode::Overlap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ContactRelation, FiniteJoinSemilattice};
    use crate::axioms::AxiomError;
    use crate::constructions::build_sn;

    #[test]
    fn total_contact_admits_every_non_top_column() {
        let s = FiniteJoinSemilattice::powerset(2).unwrap();
        let cs = ContactStructure::new(s, ContactRelation::total(4)).unwrap();
        assert_eq!(admissible_columns(&cs).columns, vec![0, 1, 2]);
    }

    #[test]
    fn overlap_powerset_columns_are_coatoms() {
        let cs = ContactStructure::with_overlap(FiniteJoinSemilattice::powerset(2).unwrap());
        assert_eq!(admissible_columns(&cs).columns, vec![1, 2]);
        assert!(decide_overlap_representable(&cs).unwrap().is_represented());
    }

    #[test]
    fn s2_columns() {
        let sn = build_sn(2).unwrap();
        let cs = &sn.structure;
        let lat = cs.lattice();
        let cols = admissible_columns(cs).columns;
        // m is excluded exactly when some literal pair has neither side below m
        for m in 0..lat.top() {
            let blocked = sn
                .roles
                .literals
                .iter()
                .any(|&(c0, c1)| !lat.leq(c0, m) && !lat.leq(c1, m));
            assert_eq!(cols.contains(&m), !blocked, "m={m}");
        }
        assert!(!cols.is_empty());
    }

    #[test]
    fn chain_represents_on_one_column() {
        let s = FiniteJoinSemilattice::powerset(1).unwrap();
        let cs = ContactStructure::new(s, ContactRelation::from_pairs(2, [])).unwrap();
        match decide_weak_representable(&cs).unwrap() {
            RepresentationOutcome::Represented(r) => {
                assert_eq!(r.ground_size, 1);
                assert_eq!(r.columns, Some(vec![0]));
                r.validate(&cs).unwrap();
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn invalid_contact_rejected() {
        let s = FiniteJoinSemilattice::powerset(1).unwrap();
        let cs = ContactStructure::new(s, ContactRelation::empty(2)).unwrap();
        assert!(matches!(
            decide_weak_representable(&cs),
            Err(RepresentationError::Axiom(AxiomError::InvalidContact(_)))
        ));
    }
}
