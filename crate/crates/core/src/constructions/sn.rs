use std::collections::BTreeSet;

use crate::algebra::{width_cap, ContactRelation, ContactStructure, FiniteJoinSemilattice, FreeBooleanAlgebra};
use crate::axioms::check_weak_contact;
use crate::bits::SubsetElement;

use super::{bar_elements, ConstructionError};

/// Default largest `n` for full certificate runs.
pub const SN_DEFAULT_CAP: usize = 4;

/// Carrier indices of the generating elements of `S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnRoles {
    /// `literals[i] = (c_{i+1,0}, c_{i+1,1})`.
    pub literals: Vec<(usize, usize)>,
    pub b_bar: usize,
    pub a_bar: usize,
}

impl SnRoles {
    /// `("c1_0", i), ("c1_1", j), ..., ("b_bar", _), ("a_bar", _)`.
    pub fn named(&self) -> Vec<(String, usize)> {
        let mut out = Vec::new();
        for (i, &(c0, c1)) in self.literals.iter().enumerate() {
            out.push((format!("c{}_0", i + 1), c0));
            out.push((format!("c{}_1", i + 1), c1));
        }
        out.push(("b_bar".to_string(), self.b_bar));
        out.push(("a_bar".to_string(), self.a_bar));
        out
    }

    pub fn generators(&self) -> Vec<usize> {
        let mut g: Vec<usize> = self.literals.iter().flat_map(|&(a, b)| [a, b]).collect();
        g.push(self.b_bar);
        g.push(self.a_bar);
        g
    }
}

/// The join closure of `c_{i,0}, c_{i,1}` (i = 1..n), `b̄` and `ā` inside
/// the free Boolean algebra on `n` generators, with every nonzero pair in
/// contact except `{c_{i,0}, c_{i,1}}`.
#[derive(Clone, Debug)]
pub struct SnStructure {
    pub n: usize,
    pub ambient: FreeBooleanAlgebra,
    pub structure: ContactStructure,
    pub roles: SnRoles,
}

/// Builds `S_n` under the ground-width cap from the environment.
pub fn build_sn(n: usize) -> Result<SnStructure, ConstructionError> {
    build_sn_with_cap(n, width_cap())
}

pub fn build_sn_with_cap(n: usize, cap: usize) -> Result<SnStructure, ConstructionError> {
    if n < 2 {
        return Err(ConstructionError::InvalidParameter {
            n,
            reason: "S_n needs n >= 2",
        });
    }
    let ambient = FreeBooleanAlgebra::with_cap(n, cap)?;
    let (b_bar, a_bar) = bar_elements(n)?;
    let mut gens: Vec<SubsetElement> = Vec::with_capacity(2 * n + 2);
    for i in 0..n {
        gens.push(ambient.literal(i, 0).clone());
        gens.push(ambient.literal(i, 1).clone());
    }
    gens.push(b_bar);
    gens.push(a_bar);

    for (i, x) in gens.iter().enumerate() {
        for y in &gens[i + 1..] {
            if x.is_subset(y) || y.is_subset(x) {
                return Err(ConstructionError::InvariantViolated(format!(
                    "generators {x:?} and {y:?} are comparable"
                )));
            }
        }
    }

    let lattice = FiniteJoinSemilattice::join_closure(ambient.ground_size(), &gens)?;
    let idx: Vec<usize> = gens
        .iter()
        .map(|g| lattice.index_of(g).expect("generator in its own closure"))
        .collect();
    let roles = SnRoles {
        literals: (0..n).map(|i| (idx[2 * i], idx[2 * i + 1])).collect(),
        b_bar: idx[2 * n],
        a_bar: idx[2 * n + 1],
    };

    let mut contact = ContactRelation::total(lattice.len());
    for &(c0, c1) in &roles.literals {
        contact.unrelate(c0, c1);
    }
    let structure = ContactStructure::new(lattice, contact)?;
    let sn = SnStructure {
        n,
        ambient,
        structure,
        roles,
    };
    sn.validate()?;
    Ok(sn)
}

impl SnStructure {
    pub fn lattice(&self) -> &FiniteJoinSemilattice {
        self.structure.lattice()
    }

    /// Re-checks every structural fact `S_n` is built on.
    pub fn validate(&self) -> Result<(), ConstructionError> {
        let lat = self.lattice();
        let gens: BTreeSet<usize> = self.roles.generators().into_iter().collect();
        if gens.len() != 2 * self.n + 2 {
            return Err(ConstructionError::InvariantViolated(
                "generators are not distinct".into(),
            ));
        }
        let atoms: BTreeSet<usize> = lat.atoms().into_iter().collect();
        if atoms != gens {
            return Err(ConstructionError::InvariantViolated(format!(
                "atoms {atoms:?} differ from generators {gens:?}"
            )));
        }
        let mut expected: Vec<(usize, usize)> =
            self.roles.literals.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        expected.sort();
        if self.structure.non_contact_pairs() != expected {
            return Err(ConstructionError::InvariantViolated(
                "non-contact pairs are not exactly the literal pairs".into(),
            ));
        }
        if let Some(x) = (1..lat.len()).find(|&x| !gens.iter().any(|&g| lat.leq(g, x))) {
            return Err(ConstructionError::InvariantViolated(format!(
                "element {x} dominates no generator"
            )));
        }
        let v = check_weak_contact(&self.structure).map_err(|e| ConstructionError::InvariantViolated(e.to_string()))?;
        if let Some(w) = v.witness() {
            return Err(ConstructionError::InvariantViolated(format!(
                "not a weak contact: {w:?}"
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s2_shape() {
        let sn = build_sn(2).unwrap();
        assert_eq!(sn.lattice().len(), 12);
        assert_eq!(sn.lattice().atoms().len(), 6);
        assert_eq!(sn.structure.non_contact_pairs().len(), 2);
        // atoms are exactly the six 2-subsets of the four valuations
        for &g in &sn.roles.generators() {
            assert_eq!(sn.lattice().element(g).count(), 2);
        }
        // c_{1,0}, c_{2,0} meet in {11} as sets, which is not in the carrier:
        // related in S_2, unrelated under overlap
        let (c10, _) = sn.roles.literals[0];
        let (c20, _) = sn.roles.literals[1];
        assert!(sn.structure.relates(c10, c20));
        assert_eq!(sn.lattice().meet(c10, c20), 0);
        assert!(!crate::algebra::overlap_contact(sn.lattice()).relates(c10, c20));
        let names: Vec<String> = sn.roles.named().into_iter().map(|(n, _)| n).collect();
        assert_eq!(names, ["c1_0", "c1_1", "c2_0", "c2_1", "b_bar", "a_bar"]);
    }

    #[test]
    fn parameter_checks() {
        assert!(matches!(
            build_sn(1),
            Err(ConstructionError::InvalidParameter { n: 1, .. })
        ));
        assert!(matches!(
            build_sn_with_cap(5, 16),
            Err(ConstructionError::Algebra(crate::AlgebraError::CapExceeded { .. }))
        ));
    }

    #[test]
    fn bars_incomparable_with_literals() {
        for n in 2..=4 {
            let sn = build_sn(n).unwrap();
            let lat = sn.lattice();
            for &(c0, c1) in &sn.roles.literals {
                for x in [sn.roles.a_bar, sn.roles.b_bar] {
                    for c in [c0, c1] {
                        assert!(!lat.comparable(x, c));
                    }
                }
            }
        }
    }
}
