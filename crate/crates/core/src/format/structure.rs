use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::algebra::{ContactRelation, ContactStructure, FiniteJoinSemilattice};
use crate::axioms::check_weak_contact;
use crate::bits::SubsetElement;

use super::FormatError;

pub const STRUCTURE_VERSION: u32 = 1;

/// On-disk form of a contact structure. Carrier elements are lowercase hex
/// bitmasks in ascending order; `contact` lists the related unordered
/// pairs of distinct nonzero elements. A full 0/1 `contact_matrix` may be
/// given instead, which lets asymmetric input be diagnosed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    pub version: u32,
    pub ground_size: usize,
    pub carrier: Vec<String>,
    pub zero: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub contact: Option<Vec<[usize; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub contact_matrix: Option<Vec<Vec<u8>>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub roles: BTreeMap<String, usize>,
}

/// A validated structure with its named elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoadedStructure {
    pub structure: ContactStructure,
    pub roles: BTreeMap<String, usize>,
}

impl LoadedStructure {
    pub fn new(structure: ContactStructure) -> Self {
        Self {
            structure,
            roles: BTreeMap::new(),
        }
    }

    pub fn with_roles<I: IntoIterator<Item = (String, usize)>>(structure: ContactStructure, roles: I) -> Self {
        Self {
            structure,
            roles: roles.into_iter().collect(),
        }
    }

    pub fn to_file(&self) -> StructureFile {
        let lat = self.structure.lattice();
        StructureFile {
            version: STRUCTURE_VERSION,
            ground_size: lat.width(),
            carrier: lat.carrier().iter().map(SubsetElement::to_hex).collect(),
            zero: lat.zero(),
            contact: Some(
                self.structure
                    .contact()
                    .related_pairs()
                    .into_iter()
                    .map(|(a, b)| [a, b])
                    .collect(),
            ),
            contact_matrix: None,
            roles: self.roles.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        self.to_file().to_json()
    }

    /// Role name of an element, if any; the first in name order wins.
    pub fn role_of(&self, index: usize) -> Option<&str> {
        self.roles.iter().find(|(_, &i)| i == index).map(|(k, _)| k.as_str())
    }
}

impl StructureFile {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("structure serializes")
    }

    /// SHA-256 of the compact JSON encoding, as lowercase hex.
    pub fn content_hash(&self) -> String {
        let compact = serde_json::to_vec(self).expect("structure serializes");
        hex::encode(Sha256::digest(&compact))
    }

    pub fn load(&self) -> Result<LoadedStructure, FormatError> {
        if self.version != STRUCTURE_VERSION {
            return Err(FormatError::Version {
                found: self.version,
                expected: STRUCTURE_VERSION,
            });
        }
        let width = self.ground_size;
        let field = |field: String, reason: &str| FormatError::Field {
            field,
            reason: reason.to_string(),
        };
        let carrier = self
            .carrier
            .iter()
            .enumerate()
            .map(|(i, text)| {
                SubsetElement::from_hex(width, text)
                    .ok_or_else(|| field(format!("carrier[{i}]"), "not a hex bitmask within ground_size"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let n = carrier.len();
        if n == 0 {
            return Err(field("carrier".into(), "must contain the empty set"));
        }
        if self.zero != 0 || !carrier[0].is_empty() {
            return Err(field("zero".into(), "must be 0 and name the empty set"));
        }
        let lattice = FiniteJoinSemilattice::from_sorted_carrier(width, carrier)?;
        let contact = match (&self.contact, &self.contact_matrix) {
            (Some(_), Some(_)) => return Err(field("contact_matrix".into(), "give either contact or contact_matrix")),
            (None, None) => return Err(field("contact".into(), "missing")),
            (Some(pairs), None) => {
                for (k, &[a, b]) in pairs.iter().enumerate() {
                    if a >= n || b >= n {
                        return Err(field(format!("contact[{k}]"), "index out of range"));
                    }
                    if a == 0 || b == 0 {
                        return Err(field(format!("contact[{k}]"), "0 is in contact with nothing"));
                    }
                }
                ContactRelation::from_pairs(n, pairs.iter().map(|&[a, b]| (a, b)))
            }
            (None, Some(rows)) => {
                if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                    return Err(field(
                        "contact_matrix".into(),
                        "must be a square matrix over the carrier",
                    ));
                }
                let mut rel = ContactRelation::empty(n);
                for (a, row) in rows.iter().enumerate() {
                    for (b, &v) in row.iter().enumerate() {
                        match v {
                            0 => {}
                            1 => rel.set_entry(a, b, true),
                            _ => return Err(field(format!("contact_matrix[{a}][{b}]"), "entries must be 0 or 1")),
                        }
                    }
                }
                rel
            }
        };
        for (name, &index) in &self.roles {
            if index >= n {
                return Err(field(format!("roles.{name}"), "index out of range"));
            }
        }
        let structure = ContactStructure::new(lattice, contact)?;
        if let Some(w) = check_weak_contact(&structure)?.witness() {
            return Err(FormatError::InvalidContact(w.clone()));
        }
        Ok(LoadedStructure {
            structure,
            roles: self.roles.clone(),
        })
    }
}

pub fn parse_structure(text: &str) -> Result<LoadedStructure, FormatError> {
    let file: StructureFile = serde_json::from_str(text).map_err(|e| FormatError::Json(e.to_string()))?;
    file.load()
}
