//! Self-contained, re-checkable records of what was verified about a
//! structure. Every entry is a request (which check, at which arity, with
//! which claimed witness) plus its outcome; [`Certificate::verify`] reruns
//! each request against the embedded structure and compares.

mod sn;

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::ContactStructure;
use crate::axioms::{
    check_additive, check_d1, check_d1_plus, check_d2, check_d2_minus, check_weak_contact, decide_d2_all, revalidate,
    Axiom, AxiomError, Verdict, Witness,
};
use crate::bits::SubsetElement;
use crate::constructions::{powerset_extension_relates, ConstructionError};
use crate::format::{FormatError, LoadedStructure, StructureFile};
use crate::representation::{
    decide_representable, Mode, Obstruction, Representation, RepresentationError, RepresentationOutcome,
};

pub use sn::sn_certificate;

pub const CERTIFICATE_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    CarrierSize,
    AtomCount,
    NonContactPairs,
    WeakContact,
    Additive,
    D1,
    D1Plus,
    D2,
    D2All,
    D2Minus,
    /// Re-validates the claimed (D2_n) witness in `witness`.
    D2Witness,
    WeakRepresentation,
    OverlapRepresentation,
    /// The minimal extension to the full powerset preserves and reflects
    /// contact.
    ExtensionEmbedding,
    /// Additivity of the minimal powerset extension at the triple `sets`.
    ExtensionAdditive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    fn of(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub check: Check,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Status>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_value: Option<u64>,
    pub verdict: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// Subsets of the ground set, for checks outside the carrier.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sets: Option<BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub obstruction: Option<Obstruction>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tuples: Option<u64>,
}

impl Entry {
    pub fn request(check: Check) -> Self {
        Self {
            check,
            n: None,
            expected: None,
            expected_value: None,
            verdict: Status::Pass,
            value: None,
            witness: None,
            sets: None,
            obstruction: None,
            tuples: None,
        }
    }

    pub fn at(mut self, n: usize) -> Self {
        self.n = Some(n);
        self
    }

    pub fn expect(mut self, status: Status) -> Self {
        self.expected = Some(status);
        self
    }

    pub fn expect_value(mut self, value: u64) -> Self {
        self.expected_value = Some(value);
        self
    }

    pub fn with_witness(mut self, witness: Witness) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn with_sets<I: IntoIterator<Item = (String, String)>>(mut self, sets: I) -> Self {
        self.sets = Some(sets.into_iter().collect());
        self
    }

    /// The request part alone, with every outcome field cleared.
    fn as_request(&self) -> Self {
        let mut r = Self::request(self.check);
        r.n = if self.check == Check::D2All { None } else { self.n };
        r.expected = self.expected;
        r.expected_value = self.expected_value;
        if self.check == Check::D2Witness {
            r.witness = self.witness.clone();
        }
        if self.check == Check::ExtensionAdditive {
            r.sets = self.sets.clone();
        }
        r
    }

    pub fn meets_expectation(&self) -> bool {
        self.expected.is_none_or(|e| e == self.verdict)
    }
}

/// One request per axiom checker and representation decider, with the
/// arity-indexed schemas taken up to `depth`.
pub fn profile_requests(depth: usize) -> Vec<Entry> {
    let mut out = vec![
        Entry::request(Check::WeakContact),
        Entry::request(Check::Additive),
        Entry::request(Check::D1),
    ];
    out.extend((1..=depth).map(|n| Entry::request(Check::D1Plus).at(n)));
    out.extend((1..=depth).map(|n| Entry::request(Check::D2).at(n)));
    out.push(Entry::request(Check::D2Minus).at(depth));
    out.push(Entry::request(Check::D2All));
    out.push(Entry::request(Check::WeakRepresentation));
    out.push(Entry::request(Check::OverlapRepresentation));
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationPayload {
    pub mode: Mode,
    pub ground_size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub columns: Option<Vec<usize>>,
    pub images: Vec<String>,
}

impl RepresentationPayload {
    pub fn from_representation(r: &Representation) -> Self {
        Self {
            mode: r.mode,
            ground_size: r.ground_size,
            columns: r.columns.clone(),
            images: r.images.iter().map(SubsetElement::to_hex).collect(),
        }
    }

    pub fn to_representation(&self) -> Option<Representation> {
        let images = self
            .images
            .iter()
            .map(|h| SubsetElement::from_hex(self.ground_size, h))
            .collect::<Option<Vec<_>>>()?;
        Some(Representation {
            mode: self.mode,
            ground_size: self.ground_size,
            columns: self.columns.clone(),
            images,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub certificate_version: u32,
    pub tool_version: String,
    pub command: String,
    pub parameters: BTreeMap<String, serde_json::Value>,
    pub structure: StructureFile,
    pub structure_hash: String,
    pub entries: Vec<Entry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub representation: Option<RepresentationPayload>,
    /// Microseconds per entry, keyed by entry position. Only present when
    /// asked for, since it breaks byte-for-byte reproducibility.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings_us: Option<BTreeMap<String, u64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Axiom(#[from] AxiomError),
    #[error(transparent)]
    Representation(#[from] RepresentationError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error("entry {check:?} is missing `{field}`")]
    MissingField { check: Check, field: &'static str },
    #[error("malformed certificate: {0}")]
    Json(String),
}

fn from_verdict(mut e: Entry, v: Verdict) -> Entry {
    e.verdict = Status::of(v.passed());
    e.witness = v.witness().cloned();
    e.tuples = Some(v.stats.tuples);
    if e.check == Check::D2All {
        e.n = v.n;
    }
    e
}

fn arity(req: &Entry) -> Result<usize, CertificateError> {
    req.n.ok_or(CertificateError::MissingField {
        check: req.check,
        field: "n",
    })
}

fn fact(mut e: Entry, value: usize) -> Entry {
    e.value = Some(value as u64);
    e.verdict = Status::of(e.expected_value.is_none_or(|v| v == value as u64));
    e
}

/// Runs one request against `cs`, returning the filled entry and, for the
/// representation checks, the representation found.
pub fn evaluate(cs: &ContactStructure, req: &Entry) -> Result<(Entry, Option<Representation>), CertificateError> {
    let e = req.as_request();
    let lat = cs.lattice();
    let entry = match req.check {
        Check::CarrierSize => fact(e, lat.len()),
        Check::AtomCount => fact(e, lat.atoms().len()),
        Check::NonContactPairs => fact(e, cs.non_contact_pairs().len()),
        Check::WeakContact => from_verdict(e, check_weak_contact(cs)?),
        Check::Additive => from_verdict(e, check_additive(cs)?),
        Check::D1 => from_verdict(e, check_d1(cs)?),
        Check::D1Plus => from_verdict(e, check_d1_plus(cs, arity(req)?)?),
        Check::D2 => from_verdict(e, check_d2(cs, arity(req)?)?),
        Check::D2All => from_verdict(e, decide_d2_all(cs)?),
        Check::D2Minus => from_verdict(e, check_d2_minus(cs, arity(req)?)?),
        Check::D2Witness => {
            let n = arity(req)?;
            let w = req.witness.as_ref().ok_or(CertificateError::MissingField {
                check: req.check,
                field: "witness",
            })?;
            let mut e = e;
            e.verdict = Status::of(revalidate(cs, Axiom::D2, Some(n), w));
            e
        }
        Check::WeakRepresentation | Check::OverlapRepresentation => {
            let mode = if req.check == Check::WeakRepresentation {
                Mode::Weak
            } else {
                Mode::Overlap
            };
            let mut e = e;
            return Ok(match decide_representable(cs, mode)? {
                RepresentationOutcome::Represented(r) => {
                    e.verdict = Status::Pass;
                    (e, Some(r))
                }
                RepresentationOutcome::Refused(o) => {
                    e.verdict = Status::Fail;
                    e.obstruction = Some(o);
                    (e, None)
                }
            });
        }
        Check::ExtensionEmbedding => {
            let mut e = e;
            let carrier = lat.carrier();
            let mismatch = (1..carrier.len())
                .flat_map(|a| (a..carrier.len()).map(move |b| (a, b)))
                .find(|&(a, b)| powerset_extension_relates(cs, &carrier[a], &carrier[b]) != cs.relates(a, b));
            e.verdict = Status::of(mismatch.is_none());
            if let Some((a, b)) = mismatch {
                e.sets = Some(
                    [
                        ("a".to_string(), carrier[a].to_hex()),
                        ("b".to_string(), carrier[b].to_hex()),
                    ]
                    .into(),
                );
            }
            e
        }
        Check::ExtensionAdditive => {
            let missing = CertificateError::MissingField {
                check: req.check,
                field: "sets",
            };
            let sets = req.sets.as_ref().ok_or(missing.clone())?;
            let get = |k: &str| {
                sets.get(k)
                    .and_then(|h| SubsetElement::from_hex(lat.width(), h))
                    .ok_or(missing.clone())
            };
            let (a, b, c) = (get("a")?, get("b")?, get("c")?);
            let violated = powerset_extension_relates(cs, &a, &b.union(&c))
                && !powerset_extension_relates(cs, &a, &b)
                && !powerset_extension_relates(cs, &a, &c);
            let mut e = e;
            e.verdict = Status::of(!violated);
            e
        }
    };
    Ok((entry, None))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub entries: usize,
    pub mismatches: Vec<String>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl Certificate {
    /// Evaluates `requests` in order against `structure`.
    pub fn build(
        command: &str,
        parameters: BTreeMap<String, serde_json::Value>,
        structure: &LoadedStructure,
        requests: Vec<Entry>,
        timings: bool,
    ) -> Result<Self, CertificateError> {
        let mut entries = Vec::with_capacity(requests.len());
        let mut representation = None;
        let mut times = BTreeMap::new();
        for (i, req) in requests.iter().enumerate() {
            let start = Instant::now();
            let (entry, rep) = evaluate(&structure.structure, req)?;
            times.insert(format!("{i}"), start.elapsed().as_micros() as u64);
            entries.push(entry);
            if let Some(r) = rep {
                representation.get_or_insert(RepresentationPayload::from_representation(&r));
            }
        }
        let file = structure.to_file();
        Ok(Self {
            certificate_version: CERTIFICATE_VERSION,
            tool_version: TOOL_VERSION.to_string(),
            command: command.to_string(),
            parameters,
            structure_hash: file.content_hash(),
            structure: file,
            entries,
            representation,
            timings_us: timings.then_some(times),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Self, CertificateError> {
        serde_json::from_str(text).map_err(|e| CertificateError::Json(e.to_string()))
    }

    /// Every entry with an expectation met it.
    pub fn expectations_met(&self) -> bool {
        self.entries.iter().all(Entry::meets_expectation)
    }

    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.verdict == Status::Pass)
    }

    /// Reloads the embedded structure, checks its hash, reruns every entry
    /// and re-validates any representation payload.
    pub fn verify(&self) -> Result<VerifyReport, CertificateError> {
        let mut mismatches = Vec::new();
        if self.certificate_version != CERTIFICATE_VERSION {
            mismatches.push(format!(
                "certificate version {} is not supported",
                self.certificate_version
            ));
            return Ok(VerifyReport {
                entries: self.entries.len(),
                mismatches,
            });
        }
        let loaded = self.structure.load()?;
        let cs = &loaded.structure;
        if self.structure.content_hash() != self.structure_hash {
            mismatches.push("structure hash does not match the embedded structure".into());
        }
        let mut rerun_rep = None;
        for (i, stored) in self.entries.iter().enumerate() {
            let (fresh, rep) = evaluate(cs, stored)?;
            if &fresh != stored {
                mismatches.push(format!("entry {i} ({:?}) does not reproduce", stored.check));
            }
            if rerun_rep.is_none() {
                rerun_rep = rep;
            }
            let axiom = match stored.check {
                Check::WeakContact => Some(Axiom::WeakContact),
                Check::Additive => Some(Axiom::Additive),
                Check::D1 => Some(Axiom::D1),
                Check::D1Plus => Some(Axiom::D1Plus),
                Check::D2 => Some(Axiom::D2),
                Check::D2All => Some(Axiom::D2All),
                Check::D2Minus => Some(Axiom::D2Minus),
                _ => None,
            };
            if let (Some(axiom), Some(w), Status::Fail) = (axiom, &stored.witness, stored.verdict) {
                if !revalidate(cs, axiom, stored.n, w) {
                    mismatches.push(format!("entry {i} witness does not re-validate"));
                }
            }
        }
        match (&self.representation, rerun_rep) {
            (None, None) => {}
            (Some(p), Some(r)) => match p.to_representation() {
                Some(stored) => {
                    if let Err(why) = stored.validate(cs) {
                        mismatches.push(format!("representation invalid: {why}"));
                    }
                    if stored != r {
                        mismatches.push("representation does not reproduce".into());
                    }
                }
                None => mismatches.push("representation images are malformed".into()),
            },
            (Some(_), None) => mismatches.push("representation present but no check produces one".into()),
            (None, Some(_)) => mismatches.push("representation missing".into()),
        }
        Ok(VerifyReport {
            entries: self.entries.len(),
            mismatches,
        })
    }
}
