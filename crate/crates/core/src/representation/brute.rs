use crate::algebra::ContactStructure;
use crate::axioms::require_weak_contact;
use crate::bits::SubsetElement;

use super::{Mode, Representation, RepresentationError};

/// Ground sets are held as `u32` masks.
const MAX_GROUND: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BruteForceLimits {
    pub max_carrier: usize,
    pub max_nodes: u64,
}

impl Default for BruteForceLimits {
    fn default() -> Self {
        Self {
            max_carrier: 8,
            max_nodes: 50_000_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BruteOutcome {
    Found(Representation),
    /// The whole space over `u_max` points was searched.
    Refused {
        nodes: u64,
    },
    /// The node budget ran out first.
    Exhausted {
        nodes: u64,
    },
}

struct Search<'a> {
    cs: &'a ContactStructure,
    mode: Mode,
    u_max: usize,
    max_nodes: u64,
    below: Vec<Vec<usize>>,
    decompositions: Vec<Vec<(usize, usize)>>,
    images: Vec<u32>,
    nodes: u64,
}

enum Step {
    Found,
    Dead,
    OutOfBudget,
}

impl Search<'_> {
    fn admissible(&self, x: usize, t: u32) -> bool {
        if t == 0 {
            return false;
        }
        for y in 1..x {
            let s = self.images[y];
            if s == t {
                return false;
            }
            let related = self.cs.relates(x, y);
            if !related && s & t != 0 {
                return false;
            }
            if related && self.mode == Mode::Overlap && s & t == 0 {
                return false;
            }
        }
        self.below[x].iter().all(|&y| self.images[y] & !t == 0)
    }

    fn assign(&mut self, x: usize, used: usize) -> Step {
        if x == self.images.len() {
            return Step::Found;
        }
        let candidates: Vec<u32> = match self.decompositions[x].first() {
            Some(&(y, z)) => {
                let t = self.images[y] | self.images[z];
                let consistent = self.decompositions[x]
                    .iter()
                    .all(|&(y, z)| self.images[y] | self.images[z] == t);
                if consistent {
                    vec![t]
                } else {
                    vec![]
                }
            }
            None => {
                let base = self.below[x].iter().fold(0u32, |acc, &y| acc | self.images[y]);
                let old = ((1u64 << used) - 1) as u32;
                let free = old & !base;
                let mut out = Vec::new();
                // every superset of `base` within the used points, then
                // extended by a prefix of the unused ones
                let mut sub = 0u32;
                loop {
                    for r in 0..=self.u_max - used {
                        let fresh = (((1u64 << r) - 1) << used) as u32;
                        out.push(base | sub | fresh);
                    }
                    if sub == free {
                        break;
                    }
                    sub = (sub.wrapping_sub(free)) & free;
                }
                out
            }
        };
        for t in candidates {
            self.nodes += 1;
            if self.nodes > self.max_nodes {
                return Step::OutOfBudget;
            }
            if !self.admissible(x, t) {
                continue;
            }
            self.images[x] = t;
            let used_now = used.max(32 - t.leading_zeros() as usize);
            match self.assign(x + 1, used_now) {
                Step::Dead => {}
                other => return other,
            }
        }
        self.images[x] = 0;
        Step::Dead
    }
}

/// Exhaustive search for a representation on at most `u_max` points,
/// independent of the column argument. Points are introduced in order, so
/// only one labelling of each new point is tried.
pub fn brute_force_representation(
    cs: &ContactStructure,
    mode: Mode,
    u_max: usize,
    limits: BruteForceLimits,
) -> Result<BruteOutcome, RepresentationError> {
    require_weak_contact(cs)?;
    let lat = cs.lattice();
    let n = lat.len();
    if n > limits.max_carrier {
        return Err(RepresentationError::TooLarge {
            len: n,
            limit: limits.max_carrier,
        });
    }
    let u_max = u_max.min(MAX_GROUND);
    let below = (0..n).map(|x| (1..x).filter(|&y| lat.leq(y, x)).collect()).collect();
    let decompositions = (0..n)
        .map(|x| {
            let mut out = Vec::new();
            for y in 1..x {
                for z in y + 1..x {
                    if lat.join(y, z) == x {
                        out.push((y, z));
                    }
                }
            }
            out
        })
        .collect();
    let mut search = Search {
        cs,
        mode,
        u_max,
        max_nodes: limits.max_nodes,
        below,
        decompositions,
        images: vec![0; n],
        nodes: 0,
    };
    Ok(match search.assign(1, 0) {
        Step::Found => {
            let ground = search.images.iter().fold(0u32, |a, &t| a | t);
            let ground_size = 32 - ground.leading_zeros() as usize;
            let images = search
                .images
                .iter()
                .map(|&t| SubsetElement::from_u64(ground_size, t as u64))
                .collect();
            BruteOutcome::Found(Representation {
                mode,
                ground_size,
                columns: None,
                images,
            })
        }
        Step::Dead => BruteOutcome::Refused { nodes: search.nodes },
        Step::OutOfBudget => BruteOutcome::Exhausted { nodes: search.nodes },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ContactRelation, FiniteJoinSemilattice};
    use crate::representation::decide_representable;

    fn m3_without_yz() -> ContactStructure {
        let w = 3;
        let gens = [
            SubsetElement::from_points(w, [0, 1]),
            SubsetElement::from_points(w, [1, 2]),
            SubsetElement::from_points(w, [0, 2]),
        ];
        let s = FiniteJoinSemilattice::join_closure(w, &gens).unwrap();
        let y = s.index_of(&gens[1]).unwrap();
        let z = s.index_of(&gens[2]).unwrap();
        let mut rel = ContactRelation::total(s.len());
        for i in 0..s.len() {
            rel.unrelate(0, i);
        }
        rel.unrelate(y, z);
        ContactStructure::new(s, rel).unwrap()
    }

    #[test]
    fn singleton_carrier_uses_no_points() {
        let s = FiniteJoinSemilattice::join_closure(2, &[]).unwrap();
        let cs = ContactStructure::with_overlap(s);
        match brute_force_representation(&cs, Mode::Overlap, 3, BruteForceLimits::default()).unwrap() {
            BruteOutcome::Found(r) => assert_eq!(r.ground_size, 0),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn powerset_found_and_valid() {
        let cs = ContactStructure::with_overlap(FiniteJoinSemilattice::powerset(3).unwrap());
        match brute_force_representation(&cs, Mode::Overlap, 3, BruteForceLimits::default()).unwrap() {
            BruteOutcome::Found(r) => r.validate(&cs).unwrap(),
            other => panic!("{other:?}"),
        }
        // two points cannot separate eight elements
        let two = brute_force_representation(&cs, Mode::Overlap, 2, BruteForceLimits::default()).unwrap();
        assert!(matches!(two, BruteOutcome::Refused { .. }));
    }

    #[test]
    fn m3_refused_both_ways() {
        let cs = m3_without_yz();
        for mode in [Mode::Weak, Mode::Overlap] {
            let brute = brute_force_representation(&cs, mode, cs.len(), BruteForceLimits::default()).unwrap();
            assert!(matches!(brute, BruteOutcome::Refused { .. }), "{mode:?}");
            assert!(!decide_representable(&cs, mode).unwrap().is_represented());
        }
    }

    #[test]
    fn budget_reported() {
        let cs = ContactStructure::with_overlap(FiniteJoinSemilattice::powerset(3).unwrap());
        let limits = BruteForceLimits {
            max_carrier: 8,
            max_nodes: 3,
        };
        let out = brute_force_representation(&cs, Mode::Overlap, 2, limits).unwrap();
        assert_eq!(out, BruteOutcome::Exhausted { nodes: 4 });
    }

    #[test]
    fn too_large() {
        let cs = ContactStructure::with_overlap(FiniteJoinSemilattice::powerset(4).unwrap());
        assert!(matches!(
            brute_force_representation(&cs, Mode::Weak, 4, BruteForceLimits::default()),
            Err(RepresentationError::TooLarge { len: 16, limit: 8 })
        ));
    }
}
