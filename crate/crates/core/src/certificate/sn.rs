use std::collections::BTreeMap;

use crate::axioms::Witness;
use crate::bits::SubsetElement;
use crate::constructions::build_sn;
use crate::format::LoadedStructure;

use super::{Certificate, CertificateError, Check, Entry, Status};

/// Builds `S_n` and certifies its defining facts: the atom and non-contact
/// counts, (D1), (D2_m) for `m ≤ depth` (expected to fail exactly from `n`
/// on), the `(ā, b̄)` witness at arity `n`, weak but not overlap
/// representability, and that the minimal contact on the full powerset of
/// the ground set extends it faithfully yet is not additive.
pub fn sn_certificate(
    n: usize,
    depth: usize,
    timings: bool,
) -> Result<(Certificate, LoadedStructure), CertificateError> {
    let sn = build_sn(n)?;
    let lat = sn.lattice();
    let roles = &sn.roles;
    let mut requests = vec![
        Entry::request(Check::CarrierSize),
        Entry::request(Check::AtomCount).expect_value(2 * n as u64 + 2),
        Entry::request(Check::NonContactPairs).expect_value(n as u64),
        Entry::request(Check::WeakContact).expect(Status::Pass),
        Entry::request(Check::D1).expect(Status::Pass),
    ];
    for m in 1..=depth {
        let expected = if m < n { Status::Pass } else { Status::Fail };
        requests.push(Entry::request(Check::D2).at(m).expect(expected));
    }
    requests.push(
        Entry::request(Check::D2Witness)
            .at(n)
            .expect(Status::Pass)
            .with_witness(Witness::Schema {
                a: roles.a_bar,
                b: roles.b_bar,
                pairs: roles.literals.clone(),
            }),
    );
    requests.push(Entry::request(Check::WeakRepresentation).expect(Status::Pass));
    requests.push(Entry::request(Check::OverlapRepresentation).expect(Status::Fail));
    requests.push(Entry::request(Check::ExtensionEmbedding).expect(Status::Pass));

    // ā is in contact with b̄ but with neither a point of b̄ nor the rest of it
    let b_bar = lat.element(roles.b_bar);
    let p = b_bar.first().expect("b̄ is nonzero");
    let single = SubsetElement::singleton(lat.width(), p);
    let rest = b_bar.difference(&single);
    requests.push(
        Entry::request(Check::ExtensionAdditive)
            .expect(Status::Fail)
            .with_sets([
                ("a".to_string(), lat.element(roles.a_bar).to_hex()),
                ("b".to_string(), single.to_hex()),
                ("c".to_string(), rest.to_hex()),
            ]),
    );

    let loaded = LoadedStructure::with_roles(sn.structure.clone(), roles.named());
    let parameters = BTreeMap::from([("depth".to_string(), depth.into()), ("n".to_string(), n.into())]);
    let cert = Certificate::build("sn", parameters, &loaded, requests, timings)?;
    Ok((cert, loaded))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s2_certificate() {
        let (cert, _) = sn_certificate(2, 2, false).unwrap();
        assert!(cert.expectations_met(), "{:#?}", cert.entries);
        assert_eq!(cert.entries[0].value, Some(12));
        let report = cert.verify().unwrap();
        assert!(report.ok(), "{:?}", report.mismatches);
        let text = cert.to_json();
        assert_eq!(Certificate::from_json(&text).unwrap(), cert);
        assert!(!text.contains("timings"));
    }

    #[test]
    fn tampering_detected() {
        let (mut cert, _) = sn_certificate(2, 2, false).unwrap();
        cert.entries[5].verdict = Status::Fail;
        assert!(!cert.verify().unwrap().ok());
        let (mut cert, _) = sn_certificate(2, 2, false).unwrap();
        cert.structure.contact.as_mut().unwrap().pop();
        assert!(cert.verify().is_err());
        let (mut cert, _) = sn_certificate(2, 2, false).unwrap();
        cert.structure_hash.replace_range(0..1, "x");
        assert!(!cert.verify().unwrap().ok());
    }

    #[test]
    fn n1_rejected() {
        assert!(sn_certificate(1, 1, false).is_err());
    }
}
