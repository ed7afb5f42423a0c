use serde::{Deserialize, Serialize};

use crate::algebra::ContactStructure;

use super::weak::require_weak_contact;
use super::{check_additive, check_d1, check_d1_plus, check_d2, check_d2_minus, decide_d2_all, AxiomError};

/// Arity bounds for the schemas quantified over `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub max_n: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Self { max_n: 3 }
    }
}

/// Which axioms a structure satisfies. `d1_plus[k]` and `d2[k]` are the
/// verdicts at arity `k + 1`; `d2_minus` covers arities up to the bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomProfile {
    pub weak_contact: bool,
    pub additive: bool,
    pub d1: bool,
    pub d1_plus: Vec<bool>,
    pub d2: Vec<bool>,
    pub d2_minus: bool,
    pub d2_all: bool,
    /// Least failing arity when `d2_all` fails.
    pub d2_least_failure: Option<usize>,
    pub weak_representable: Option<bool>,
    pub overlap_representable: Option<bool>,
}

pub fn profile_of(cs: &ContactStructure, bounds: Bounds) -> Result<AxiomProfile, AxiomError> {
    if bounds.max_n == 0 {
        return Err(AxiomError::ZeroArity);
    }
    require_weak_contact(cs)?;
    let all = decide_d2_all(cs)?;
    Ok(AxiomProfile {
        weak_contact: true,
        additive: check_additive(cs)?.passed(),
        d1: check_d1(cs)?.passed(),
        d1_plus: (1..=bounds.max_n)
            .map(|n| check_d1_plus(cs, n).map(|v| v.passed()))
            .collect::<Result<_, _>>()?,
        d2: (1..=bounds.max_n)
            .map(|n| check_d2(cs, n).map(|v| v.passed()))
            .collect::<Result<_, _>>()?,
        d2_minus: check_d2_minus(cs, bounds.max_n)?.passed(),
        d2_all: all.passed(),
        d2_least_failure: if all.passed() { None } else { all.n },
        weak_representable: None,
        overlap_representable: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ContactRelation, FiniteJoinSemilattice};

    #[test]
    fn field_of_sets_passes_everything() {
        let cs = ContactStructure::with_overlap(FiniteJoinSemilattice::powerset(3).unwrap());
        let p = profile_of(&cs, Bounds::default()).unwrap();
        assert!(p.weak_contact && p.additive && p.d1 && p.d2_minus && p.d2_all);
        assert!(p.d1_plus.iter().chain(&p.d2).all(|&x| x));
        assert_eq!(p.d2_least_failure, None);
    }

    #[test]
    fn two_element_chain_is_vacuous() {
        let s = FiniteJoinSemilattice::powerset(1).unwrap();
        let cs = ContactStructure::new(s, ContactRelation::from_pairs(2, [])).unwrap();
        let p = profile_of(&cs, Bounds { max_n: 2 }).unwrap();
        assert!(p.additive && p.d1 && p.d2_all && p.d2_minus);
        assert_eq!(p.d2, vec![true, true]);
    }

    #[test]
    fn invalid_contact_is_an_error() {
        let s = FiniteJoinSemilattice::powerset(1).unwrap();
        let cs = ContactStructure::new(s, ContactRelation::empty(2)).unwrap();
        assert!(matches!(
            profile_of(&cs, Bounds::default()),
            Err(AxiomError::InvalidContact(_))
        ));
    }
}
