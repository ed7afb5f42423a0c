use std::time::Instant;

use crate::algebra::ContactStructure;

use super::{Axiom, AxiomError, Verdict, Witness};

/// Zero-freeness, reflexivity on nonzero elements, symmetry, then (Ext), in
/// that order; within a clause the lexicographically least offending tuple
/// is reported.
pub fn check_weak_contact(cs: &ContactStructure) -> Result<Verdict, AxiomError> {
    let start = Instant::now();
    let lat = cs.lattice();
    let rel = cs.contact();
    let n = lat.len();
    if rel.size() != n || (0..n).any(|i| rel.row(i).width() != n) {
        return Err(AxiomError::DimensionMismatch {
            carrier: n,
            relation: rel.size(),
        });
    }
    let fail =
        |w: Witness, tuples: u64| Ok(Verdict::new(Axiom::WeakContact, None, Some(w), tuples).timed(start.elapsed()));

    let mut tuples = 0u64;
    for a in 0..n {
        tuples += 1;
        if a == 0 {
            if let Some(b) = rel.row(0).first() {
                return fail(Witness::ZeroContact { a: 0, b }, tuples);
            }
        } else if rel.relates(a, 0) {
            return fail(Witness::ZeroContact { a, b: 0 }, tuples);
        }
    }
    for a in 1..n {
        tuples += 1;
        if !rel.relates(a, a) {
            return fail(Witness::Reflexivity { a }, tuples);
        }
    }
    for a in 1..n {
        for b in rel.row(a).iter() {
            tuples += 1;
            if !rel.relates(b, a) {
                return fail(Witness::Symmetry { a, b }, tuples);
            }
        }
    }
    for a in 1..n {
        for b in rel.row(a).iter() {
            for a1 in lat.up_set(a).iter() {
                tuples += 1;
                let missing = lat.up_set(b).difference(rel.row(a1));
                if let Some(b1) = missing.first() {
                    return fail(Witness::Ext { a, b, a1, b1 }, tuples);
                }
            }
        }
    }
    Ok(Verdict::new(Axiom::WeakContact, None, None, tuples).timed(start.elapsed()))
}

pub(crate) fn require_weak_contact(cs: &ContactStructure) -> Result<(), AxiomError> {
    let v = check_weak_contact(cs)?;
    match v.witness() {
        None => Ok(()),
        Some(w) => Err(AxiomError::InvalidContact(w.clone())),
    }
}

/// (Add): `a δ b+c` implies `a δ b` or `a δ c`. Search order `(a, b, c)`
/// with `b < c`.
pub fn check_additive(cs: &ContactStructure) -> Result<Verdict, AxiomError> {
    require_weak_contact(cs)?;
    let start = Instant::now();
    let lat = cs.lattice();
    let n = lat.len();
    let mut tuples = 0u64;
    for a in 1..n {
        let mut apart = cs.contact().row(a).complement();
        apart.remove(0);
        let apart: Vec<usize> = apart.iter().collect();
        for (k, &b) in apart.iter().enumerate() {
            for &c in &apart[k + 1..] {
                tuples += 1;
                if cs.relates(a, lat.join(b, c)) {
                    return Ok(
                        Verdict::new(Axiom::Additive, None, Some(Witness::Additivity { a, b, c }), tuples)
                            .timed(start.elapsed()),
                    );
                }
            }
        }
    }
    Ok(Verdict::new(Axiom::Additive, None, None, tuples).timed(start.elapsed()))
}
