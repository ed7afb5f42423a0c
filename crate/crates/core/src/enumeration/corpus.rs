use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::ContactStructure;
use crate::axioms::{check_d1, check_d2, profile_of, AxiomProfile, Bounds};
use crate::representation::{decide_overlap_representable, decide_weak_representable, RepresentationOutcome};

use super::contacts::enumerate_contacts;
use super::iso::{canonical_labelings, contact_rows, down_masks, key_with};
use super::lattices::enumerate_semilattices_keyed;
use super::{EnumerationError, IsoClassKey};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub max_size: usize,
    pub depth: usize,
}

#[derive(Clone, Debug)]
pub struct CorpusRecord {
    /// Position in key order.
    pub id: usize,
    pub key: IsoClassKey,
    pub structure: ContactStructure,
    pub profile: AxiomProfile,
    pub weak: RepresentationOutcome,
    pub overlap: RepresentationOutcome,
    pub provenance: Provenance,
}

fn classify(cs: ContactStructure, key: IsoClassKey, provenance: Provenance) -> Result<CorpusRecord, EnumerationError> {
    let mut profile = profile_of(
        &cs,
        Bounds {
            max_n: provenance.depth,
        },
    )?;
    let weak = decide_weak_representable(&cs)?;
    let overlap = decide_overlap_representable(&cs)?;
    profile.weak_representable = Some(weak.is_represented());
    profile.overlap_representable = Some(overlap.is_represented());
    Ok(CorpusRecord {
        id: 0,
        key,
        structure: cs,
        profile,
        weak,
        overlap,
        provenance,
    })
}

/// Every weak contact structure of carrier at most `max_size`, once per
/// isomorphism class, profiled to arity `bounds.max_n` and ordered by key.
pub fn classify_corpus(max_size: usize, bounds: Bounds) -> Result<Vec<CorpusRecord>, EnumerationError> {
    let provenance = Provenance {
        max_size,
        depth: bounds.max_n,
    };
    let lattices = enumerate_semilattices_keyed(max_size)?;
    let per_lattice: Vec<Vec<CorpusRecord>> = lattices
        .into_par_iter()
        .map(|(_, lat)| {
            let (order, labelings) = canonical_labelings(&down_masks(&lat));
            // contacts related by a lattice automorphism collapse here
            let mut classes = BTreeMap::new();
            for rel in enumerate_contacts(&lat)? {
                let cs = ContactStructure::new(lat.clone(), rel)?;
                let key = key_with(lat.len(), order, &labelings, &contact_rows(&cs));
                classes.entry(key).or_insert(cs);
            }
            classes
                .into_iter()
                .map(|(key, cs)| classify(cs, key, provenance))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<_, _>>()?;
    let mut records: Vec<CorpusRecord> = per_lattice.into_iter().flatten().collect();
    records.sort_by_key(|r| r.key);
    for (id, r) in records.iter_mut().enumerate() {
        r.id = id;
    }
    Ok(records)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Implication {
    D1ImpliesD1Plus,
    D1ImpliesD2Minus,
    OverlapD1ImpliesD2AllAndAdditive,
    WeakRepresentableIffD1,
    OverlapRepresentableIffD1AndD2All,
}

impl Implication {
    pub const ALL: [Implication; 5] = [
        Implication::D1ImpliesD1Plus,
        Implication::D1ImpliesD2Minus,
        Implication::OverlapD1ImpliesD2AllAndAdditive,
        Implication::WeakRepresentableIffD1,
        Implication::OverlapRepresentableIffD1AndD2All,
    ];

    /// `Some(holds)` when the premise applies to the record.
    pub fn evaluate(self, r: &CorpusRecord) -> Option<bool> {
        let p = &r.profile;
        match self {
            Implication::D1ImpliesD1Plus => p.d1.then(|| p.d1_plus.iter().all(|&x| x)),
            Implication::D1ImpliesD2Minus => p.d1.then_some(p.d2_minus),
            Implication::OverlapD1ImpliesD2AllAndAdditive => {
                (p.d1 && r.structure.has_overlap_contact()).then_some(p.d2_all && p.additive)
            }
            Implication::WeakRepresentableIffD1 => Some(r.weak.is_represented() == p.d1),
            Implication::OverlapRepresentableIffD1AndD2All => Some(r.overlap.is_represented() == (p.d1 && p.d2_all)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImplicationCheck {
    pub implication: Implication,
    /// Records where the premise applied.
    pub applicable: usize,
    /// Ids of violating records.
    pub violations: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImplicationReport {
    pub records: usize,
    pub checks: Vec<ImplicationCheck>,
}

impl ImplicationReport {
    pub fn violation_count(&self) -> usize {
        self.checks.iter().map(|c| c.violations.len()).sum()
    }

    pub fn holds(&self) -> bool {
        self.violation_count() == 0
    }
}

pub fn check_implications(records: &[CorpusRecord]) -> ImplicationReport {
    let checks = Implication::ALL
        .iter()
        .map(|&imp| {
            let mut applicable = 0;
            let mut violations = Vec::new();
            for r in records {
                if let Some(holds) = imp.evaluate(r) {
                    applicable += 1;
                    if !holds {
                        violations.push(r.id);
                    }
                }
            }
            ImplicationCheck {
                implication: imp,
                applicable,
                violations,
            }
        })
        .collect();
    ImplicationReport {
        records: records.len(),
        checks,
    }
}

/// Records of least carrier size passing (D1) and (D2_m) for every m < n
/// but failing (D2_n). Checks are rerun, so the profile depth is
/// irrelevant. An empty result is a negative finding for the corpus.
pub fn find_minimal_separators(records: &[CorpusRecord], n: usize) -> Result<Vec<&CorpusRecord>, EnumerationError> {
    let mut hits = Vec::new();
    for r in records {
        let cs = &r.structure;
        if !check_d1(cs)?.passed() || check_d2(cs, n)?.passed() {
            continue;
        }
        let mut lower = true;
        for m in 1..n {
            if !check_d2(cs, m)?.passed() {
                lower = false;
                break;
            }
        }
        if lower {
            hits.push(r);
        }
    }
    let least = hits.iter().map(|r| r.structure.len()).min();
    Ok(hits.into_iter().filter(|r| Some(r.structure.len()) == least).collect())
}
