//! The (D1), (D1+), (D2_n) and (D2−) schemas.
//!
//! Pair tuples are reduced before searching: a pair containing 0 only
//! duplicates the selector sums of the remaining pairs, a repeated pair
//! only repeats summands, and flipping the orientation of a pair permutes
//! the selectors. An arity-`n` instance therefore fails iff some set of at
//! most `n` distinct unordered non-contact pairs of nonzero elements does.
//! Reported witnesses are padded back to exactly `n` pairs by repeating the
//! first pair, so they re-validate against the literal schema.

use std::time::Instant;

use itertools::Itertools;
use rayon::prelude::*;

use crate::algebra::{ContactStructure, FiniteJoinSemilattice};
use crate::bits::SubsetElement;

use super::{Axiom, AxiomError, Verdict, Witness};

/// Number of distinct unordered non-contact pairs of nonzero elements.
pub fn non_contact_pair_count(cs: &ContactStructure) -> usize {
    cs.non_contact_pairs().len()
}

/// Selector sums of `pairs`: entry `f` joins `pairs[i].0` when bit `i` of
/// `f` is clear and `pairs[i].1` when it is set.
fn selector_sums(lat: &FiniteJoinSemilattice, base: usize, pairs: &[(usize, usize)]) -> Vec<usize> {
    let mut sums = vec![base];
    for &(c0, c1) in pairs {
        let low: Vec<usize> = sums.iter().map(|&s| lat.join(s, c0)).collect();
        let high: Vec<usize> = sums.iter().map(|&s| lat.join(s, c1)).collect();
        sums = low;
        sums.extend(high);
    }
    sums
}

/// Elements below every listed sum.
fn below_all(lat: &FiniteJoinSemilattice, sums: &[usize]) -> SubsetElement {
    let mut acc = SubsetElement::full(lat.len());
    for &s in sums {
        acc.intersect_with(lat.down_set(s));
    }
    acc
}

fn pad(mut pairs: Vec<(usize, usize)>, n: usize) -> Vec<(usize, usize)> {
    let first = pairs[0];
    while pairs.len() < n {
        pairs.push(first);
    }
    pairs
}

fn pick(pairs: &[(usize, usize)], set: &[usize]) -> Vec<(usize, usize)> {
    set.iter().map(|&i| pairs[i]).collect()
}

/// First element (in slice order) for which `probe` yields a hit, searched in
/// parallel; returns the position and the hit.
fn first_hit<T, R, F>(items: &[T], probe: F) -> Option<(usize, R)>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Option<R> + Sync,
{
    let pos = items.par_iter().position_first(|t| probe(t).is_some())?;
    probe(&items[pos]).map(|r| (pos, r))
}

/// (D1): `c0 ∤ c1`, `b ≤ a+c0`, `b ≤ a+c1` imply `b ≤ a`. Search order:
/// pair, then `a`, then `b`. A violation exists at `(pair, a)` exactly when
/// `meet(a+c0, a+c1) ≰ a`.
pub fn check_d1(cs: &ContactStructure) -> Result<Verdict, AxiomError> {
    let start = Instant::now();
    let lat = cs.lattice();
    let pairs = cs.non_contact_pairs();
    let mut tuples = 0u64;
    for &(c0, c1) in &pairs {
        for a in 0..lat.len() {
            tuples += 1;
            let (x, y) = (lat.join(a, c0), lat.join(a, c1));
            if lat.leq(lat.meet(x, y), a) {
                continue;
            }
            let b = (0..lat.len())
                .find(|&b| lat.leq(b, x) && lat.leq(b, y) && !lat.leq(b, a))
                .expect("meet above a has a witness below it");
            let w = Witness::Schema {
                a,
                b,
                pairs: vec![(c0, c1)],
            };
            return Ok(Verdict::new(Axiom::D1, Some(1), Some(w), tuples).timed(start.elapsed()));
        }
    }
    Ok(Verdict::new(Axiom::D1, Some(1), None, tuples).timed(start.elapsed()))
}

/// (D1+) at arity `n`. Search order: number of distinct pairs `k`, pair
/// set (lexicographic), `a`, `b`.
pub fn check_d1_plus(cs: &ContactStructure, n: usize) -> Result<Verdict, AxiomError> {
    if n == 0 {
        return Err(AxiomError::ZeroArity);
    }
    let start = Instant::now();
    let lat = cs.lattice();
    let pairs = cs.non_contact_pairs();
    let mut tuples = 0u64;
    for k in 1..=n.min(pairs.len()) {
        let sets: Vec<Vec<usize>> = (0..pairs.len()).combinations(k).collect();
        let hit = first_hit(&sets, |set| {
            let chosen = pick(&pairs, set);
            (0..lat.len()).find_map(|a| {
                let sums = selector_sums(lat, a, &chosen);
                let mut cand = below_all(lat, &sums);
                cand.difference_with(lat.down_set(a));
                cand.first().map(|b| (a, b))
            })
        });
        match hit {
            Some((pos, (a, b))) => {
                tuples += pos as u64 + 1;
                let w = Witness::Schema {
                    a,
                    b,
                    pairs: pad(pick(&pairs, &sets[pos]), n),
                };
                return Ok(Verdict::new(Axiom::D1Plus, Some(n), Some(w), tuples).timed(start.elapsed()));
            }
            None => tuples += sets.len() as u64,
        }
    }
    Ok(Verdict::new(Axiom::D1Plus, Some(n), None, tuples).timed(start.elapsed()))
}

/// For every element, the set of selectors whose sum dominates it.
fn domination_profiles(lat: &FiniteJoinSemilattice, sums: &[usize]) -> Vec<SubsetElement> {
    let mut profiles = vec![SubsetElement::empty(sums.len()); lat.len()];
    for (f, &s) in sums.iter().enumerate() {
        for x in lat.down_set(s).iter() {
            profiles[x].insert(f);
        }
    }
    profiles
}

/// Least `(a, b)`, `a ≤ b` by index, in contact and jointly dominated
/// under every selector.
fn d2_violation(cs: &ContactStructure, chosen: &[(usize, usize)]) -> Option<(usize, usize)> {
    let lat = cs.lattice();
    let sums = selector_sums(lat, 0, chosen);
    let profiles = domination_profiles(lat, &sums);
    for a in 1..lat.len() {
        let missing = profiles[a].complement();
        for b in cs.contact().row(a).iter().filter(|&b| b >= a) {
            if missing.is_subset(&profiles[b]) {
                return Some((a, b));
            }
        }
    }
    None
}

/// Arity, pair set, `a`, `b` of a (D2) violation.
type D2Hit = (usize, Vec<(usize, usize)>, usize, usize);

fn d2_search(cs: &ContactStructure, max_k: usize) -> (Option<D2Hit>, u64) {
    let pairs = cs.non_contact_pairs();
    let mut tuples = 0u64;
    for k in 1..=max_k.min(pairs.len()) {
        let sets: Vec<Vec<usize>> = (0..pairs.len()).combinations(k).collect();
        match first_hit(&sets, |set| d2_violation(cs, &pick(&pairs, set))) {
            Some((pos, (a, b))) => {
                tuples += pos as u64 + 1;
                return (Some((k, pick(&pairs, &sets[pos]), a, b)), tuples);
            }
            None => tuples += sets.len() as u64,
        }
    }
    (None, tuples)
}

/// (D2_n) by selector-profile bucketing. Search order: number of distinct
/// pairs `k`, pair set, `a`, `b` with `a ≤ b`.
pub fn check_d2(cs: &ContactStructure, n: usize) -> Result<Verdict, AxiomError> {
    if n == 0 {
        return Err(AxiomError::ZeroArity);
    }
    let start = Instant::now();
    let (hit, tuples) = d2_search(cs, n);
    let w = hit.map(|(_, chosen, a, b)| Witness::Schema {
        a,
        b,
        pairs: pad(chosen, n),
    });
    Ok(Verdict::new(Axiom::D2, Some(n), w, tuples).timed(start.elapsed()))
}

/// (D2_n) for every `n`. Arities beyond the number of distinct non-contact
/// pairs only repeat pairs, so the search stops there. On failure `n` is
/// the least failing arity.
pub fn decide_d2_all(cs: &ContactStructure) -> Result<Verdict, AxiomError> {
    let start = Instant::now();
    let bound = non_contact_pair_count(cs);
    let (hit, tuples) = d2_search(cs, bound);
    let v = match hit {
        Some((k, chosen, a, b)) => Verdict::new(
            Axiom::D2All,
            Some(k),
            Some(Witness::Schema { a, b, pairs: chosen }),
            tuples,
        ),
        None => Verdict::new(Axiom::D2All, None, None, tuples),
    };
    Ok(v.timed(start.elapsed()))
}

/// (D2−) up to arity `n`: if `b ≤` every selector sum with `f(1) = 0` and
/// `a ≤` every selector sum with `f(1) = 1`, then `b ∤ a`.
///
/// The first pair is distinguished and ranges over all ordered non-contact
/// pairs (0 included); the remaining pairs are reduced as in the other
/// schemas. Search order: `k`, first pair, remaining set, `a`, `b`.
pub fn check_d2_minus(cs: &ContactStructure, n: usize) -> Result<Verdict, AxiomError> {
    if n == 0 {
        return Err(AxiomError::ZeroArity);
    }
    let start = Instant::now();
    let lat = cs.lattice();
    let pairs = cs.non_contact_pairs();
    let firsts = cs.contact().non_contact_ordered();
    let mut tuples = 0u64;
    for k in 1..=n.min(pairs.len() + 1) {
        let rests: Vec<Vec<usize>> = (0..pairs.len()).combinations(k - 1).collect();
        let cases: Vec<(usize, usize)> = (0..firsts.len())
            .flat_map(|f| (0..rests.len()).map(move |r| (f, r)))
            .collect();
        let hit = first_hit(&cases, |&(f, r)| {
            let (c10, c11) = firsts[f];
            let rest = pick(&pairs, &rests[r]);
            let b_side = below_all(lat, &selector_sums(lat, c10, &rest));
            let a_side = below_all(lat, &selector_sums(lat, c11, &rest));
            a_side.iter().find_map(|a| {
                let hits = b_side.intersection(cs.contact().row(a));
                hits.first().map(|b| (a, b))
            })
        });
        match hit {
            Some((pos, (a, b))) => {
                tuples += pos as u64 + 1;
                let (f, r) = cases[pos];
                let mut chosen = vec![firsts[f]];
                chosen.extend(pick(&pairs, &rests[r]));
                let w = Witness::Schema {
                    a,
                    b,
                    pairs: pad(chosen, n),
                };
                return Ok(Verdict::new(Axiom::D2Minus, Some(n), Some(w), tuples).timed(start.elapsed()));
            }
            None => tuples += cases.len() as u64,
        }
    }
    Ok(Verdict::new(Axiom::D2Minus, Some(n), None, tuples).timed(start.elapsed()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ContactRelation, FiniteJoinSemilattice};
    use crate::axioms::revalidate;

    fn set(width: usize, points: &[usize]) -> SubsetElement {
        SubsetElement::from_points(width, points.iter().copied())
    }

    /// M3 realized on three points: x = {0,1}, y = {1,2}, z = {0,2}, any
    /// two joining to the top. With y ∤ z, (D1) fails at a = x.
    fn d1_failing() -> ContactStructure {
        let s = FiniteJoinSemilattice::join_closure(3, &[set(3, &[0, 1]), set(3, &[1, 2]), set(3, &[0, 2])]).unwrap();
        let y = s.index_of(&set(3, &[1, 2])).unwrap();
        let z = s.index_of(&set(3, &[0, 2])).unwrap();
        let mut rel = ContactRelation::total(s.len());
        rel.unrelate(y, z);
        ContactStructure::new(s, rel).unwrap()
    }

    #[test]
    fn powerset_with_separated_atoms_satisfies_d1() {
        let s = FiniteJoinSemilattice::powerset(2).unwrap();
        let rel = ContactRelation::from_pairs(4, [(1, 3), (2, 3)]);
        let cs = ContactStructure::new(s, rel).unwrap();
        assert!(check_d1(&cs).unwrap().passed());
        assert!(decide_d2_all(&cs).unwrap().passed());
    }

    #[test]
    fn vacuous_without_non_contact_pairs() {
        let s = FiniteJoinSemilattice::powerset(2).unwrap();
        let cs = ContactStructure::new(s, ContactRelation::total(4)).unwrap();
        assert!(check_d1(&cs).unwrap().passed());
        assert!(check_d1_plus(&cs, 3).unwrap().passed());
        assert!(check_d2(&cs, 2).unwrap().passed());
        assert!(decide_d2_all(&cs).unwrap().passed());
        assert!(check_d2_minus(&cs, 3).unwrap().passed());
    }

    #[test]
    fn m3_with_separated_atoms_fails_d1() {
        let cs = d1_failing();
        let v = check_d1(&cs).unwrap();
        let w = v.witness().unwrap().clone();
        let x = cs.lattice().index_of(&set(3, &[0, 1])).unwrap();
        let pair = cs.non_contact_pairs()[0];
        // least b below the top and not below x is {0,2}
        let b = cs.lattice().index_of(&set(3, &[0, 2])).unwrap();
        assert_eq!(
            w,
            Witness::Schema {
                a: x,
                b,
                pairs: vec![pair]
            }
        );
        assert!(revalidate(&cs, Axiom::D1, Some(1), &w));
        let plus = check_d1_plus(&cs, 1).unwrap();
        assert_eq!(plus.witness(), Some(&w));
        let plus3 = check_d1_plus(&cs, 3).unwrap();
        assert!(revalidate(&cs, Axiom::D1Plus, Some(3), plus3.witness().unwrap()));
    }

    #[test]
    fn zero_arity_rejected() {
        let cs = d1_failing();
        assert_eq!(check_d2(&cs, 0), Err(AxiomError::ZeroArity));
        assert_eq!(check_d1_plus(&cs, 0), Err(AxiomError::ZeroArity));
        assert_eq!(check_d2_minus(&cs, 0), Err(AxiomError::ZeroArity));
    }

    #[test]
    fn single_pair_d2_all_matches_d2_1() {
        let cs = d1_failing();
        assert_eq!(non_contact_pair_count(&cs), 1);
        let all = decide_d2_all(&cs).unwrap();
        let one = check_d2(&cs, 1).unwrap();
        assert_eq!(all.passed(), one.passed());
        assert_eq!(all.witness(), one.witness());
    }

    #[test]
    fn witnesses_padded_to_arity() {
        let cs = d1_failing();
        let v = check_d2_minus(&cs, 3).unwrap();
        if let Some(Witness::Schema { pairs, .. }) = v.witness() {
            assert_eq!(pairs.len(), 3);
            assert!(revalidate(&cs, Axiom::D2Minus, Some(3), v.witness().unwrap()));
        }
        let v = check_d2(&cs, 4).unwrap();
        if let Some(w @ Witness::Schema { pairs, .. }) = v.witness() {
            assert_eq!(pairs.len(), 4);
            assert!(revalidate(&cs, Axiom::D2, Some(4), w));
        }
    }
}
