use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use serde::Serialize;

use contactlab::axioms::{AxiomProfile, Bounds};
use contactlab::certificate::{profile_requests, Certificate};
use contactlab::enumeration::{
    check_implications, classify_corpus, enumerate_contacts, enumerate_semilattices, find_minimal_separators,
    CorpusRecord, ImplicationReport, IsoClassKey, Provenance,
};
use contactlab::format::{LoadedStructure, StructureFile};
use contactlab::oracle::{semilattice_table_counts, weak_contacts_brute, TABLE_ORACLE_MAX};
use contactlab::representation::{Obstruction, RepresentationOutcome};

/// Largest lattice the contact oracle is run on from the command line.
const CONTACT_ORACLE_MAX: usize = 5;

#[derive(Serialize)]
struct RepresentationLine {
    represented: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    ground_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    obstruction: Option<Obstruction>,
}

impl RepresentationLine {
    fn of(o: &RepresentationOutcome) -> Self {
        match o {
            RepresentationOutcome::Represented(r) => Self {
                represented: true,
                ground_size: Some(r.ground_size),
                obstruction: None,
            },
            RepresentationOutcome::Refused(ob) => Self {
                represented: false,
                ground_size: None,
                obstruction: Some(ob.clone()),
            },
        }
    }
}

#[derive(Serialize)]
struct CorpusLine<'a> {
    id: usize,
    key: IsoClassKey,
    structure: StructureFile,
    structure_hash: String,
    profile: &'a AxiomProfile,
    weak: RepresentationLine,
    overlap: RepresentationLine,
    provenance: Provenance,
}

#[derive(Serialize)]
struct OracleReport {
    semilattice_counts: Vec<usize>,
    table_counts: Vec<usize>,
    /// Lattices whose contact count differs from the matrix filter.
    contact_mismatches: Vec<usize>,
    contact_lattices_checked: usize,
    agrees: bool,
}

#[derive(Serialize)]
struct Summary<'a> {
    max_size: usize,
    depth: usize,
    semilattices_by_size: Vec<usize>,
    structures_by_size: Vec<usize>,
    implications: &'a ImplicationReport,
    /// Least-carrier separators per arity, by record id.
    separators: BTreeMap<usize, Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<&'a OracleReport>,
}

fn by_size(max_size: usize, sizes: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut out = vec![0; max_size];
    for s in sizes {
        out[s - 1] += 1;
    }
    out
}

fn run_oracle(max_size: usize, semilattices: &[usize]) -> Result<OracleReport> {
    let table_max = max_size.min(TABLE_ORACLE_MAX);
    let table_counts = semilattice_table_counts(table_max)?;
    let mut contact_mismatches = Vec::new();
    let mut checked = 0;
    for (i, lat) in enumerate_semilattices(max_size.min(CONTACT_ORACLE_MAX))?
        .iter()
        .enumerate()
    {
        checked += 1;
        let fast: BTreeSet<_> = enumerate_contacts(lat)?.iter().map(|r| r.related_pairs()).collect();
        let slow: BTreeSet<_> = weak_contacts_brute(lat)?.iter().map(|r| r.related_pairs()).collect();
        if fast != slow {
            contact_mismatches.push(i);
        }
    }
    let agrees = table_counts[..] == semilattices[..table_max] && contact_mismatches.is_empty();
    Ok(OracleReport {
        semilattice_counts: semilattices[..table_max].to_vec(),
        table_counts,
        contact_mismatches,
        contact_lattices_checked: checked,
        agrees,
    })
}

fn record_certificate(r: &CorpusRecord) -> Result<Certificate> {
    let params = BTreeMap::from([
        ("depth".to_string(), r.provenance.depth.into()),
        ("max_size".to_string(), r.provenance.max_size.into()),
        ("record".to_string(), r.id.into()),
    ]);
    let loaded = LoadedStructure::new(r.structure.clone());
    Ok(Certificate::build(
        "enumerate",
        params,
        &loaded,
        profile_requests(r.provenance.depth),
        false,
    )?)
}

fn write_csv(path: &Path, records: &[CorpusRecord], depth: usize) -> Result<()> {
    let mut w = csv::Writer::from_path(path).with_context(|| format!("writing {}", path.display()))?;
    let mut header: Vec<String> = [
        "id",
        "size",
        "related_pairs",
        "non_contact_pairs",
        "overlap_contact",
        "additive",
        "d1",
    ]
    .map(String::from)
    .to_vec();
    header.extend((1..=depth).map(|n| format!("d1_plus_{n}")));
    header.extend((1..=depth).map(|n| format!("d2_{n}")));
    header.extend(
        [
            "d2_minus",
            "d2_all",
            "d2_least_failure",
            "weak_representable",
            "overlap_representable",
            "structure_hash",
        ]
        .map(String::from),
    );
    w.write_record(&header)?;
    for r in records {
        let p = &r.profile;
        let cs = &r.structure;
        let mut row = vec![
            r.id.to_string(),
            cs.len().to_string(),
            cs.contact().related_pairs().len().to_string(),
            cs.non_contact_pairs().len().to_string(),
            cs.has_overlap_contact().to_string(),
            p.additive.to_string(),
            p.d1.to_string(),
        ];
        row.extend(p.d1_plus.iter().map(bool::to_string));
        row.extend(p.d2.iter().map(bool::to_string));
        row.extend([
            p.d2_minus.to_string(),
            p.d2_all.to_string(),
            p.d2_least_failure.map(|k| k.to_string()).unwrap_or_default(),
            r.weak.is_represented().to_string(),
            r.overlap.is_represented().to_string(),
            LoadedStructure::new(cs.clone()).to_file().content_hash(),
        ]);
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

pub fn run(max_size: usize, depth: usize, out: Option<&Path>, oracle: bool) -> Result<bool> {
    if depth == 0 {
        anyhow::bail!("--depth must be positive");
    }
    let records = classify_corpus(max_size, Bounds { max_n: depth })?;
    let lattices = enumerate_semilattices(max_size)?;
    let semilattices_by_size = by_size(max_size, lattices.iter().map(|l| l.len()));
    let structures_by_size = by_size(max_size, records.iter().map(|r| r.structure.len()));
    let report = check_implications(&records);
    let mut separators = BTreeMap::new();
    for n in 2..=depth {
        let found = find_minimal_separators(&records, n)?;
        separators.insert(n, found.iter().map(|r| r.id).collect::<Vec<_>>());
    }
    let oracle = if oracle {
        Some(run_oracle(max_size, &semilattices_by_size)?)
    } else {
        None
    };

    println!("semilattices by size: {semilattices_by_size:?}");
    println!("contact structures by size: {structures_by_size:?}");
    for c in &report.checks {
        let name = serde_json::to_value(c.implication)?;
        println!(
            "{}: {} applicable, {} violations",
            name.as_str().unwrap_or_default(),
            c.applicable,
            c.violations.len()
        );
    }
    for (n, ids) in &separators {
        if ids.is_empty() {
            println!("no D2_{n} separator up to size {max_size}");
        } else {
            println!("D2_{n} separators: {ids:?}");
        }
    }
    if let Some(o) = &oracle {
        println!(
            "oracle: table counts {:?} vs {:?}, contact mismatches {} of {} lattices: {}",
            o.table_counts,
            o.semilattice_counts,
            o.contact_mismatches.len(),
            o.contact_lattices_checked,
            if o.agrees { "agree" } else { "DISAGREE" }
        );
    }

    let violating: BTreeSet<usize> = report
        .checks
        .iter()
        .flat_map(|c| c.violations.iter().copied())
        .collect();
    if let Some(dir) = out {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        let path = dir.join("corpus.jsonl");
        let mut jsonl =
            std::io::BufWriter::new(fs::File::create(&path).with_context(|| format!("writing {}", path.display()))?);
        for r in &records {
            let file = LoadedStructure::new(r.structure.clone()).to_file();
            let line = CorpusLine {
                id: r.id,
                key: r.key,
                structure_hash: file.content_hash(),
                structure: file,
                profile: &r.profile,
                weak: RepresentationLine::of(&r.weak),
                overlap: RepresentationLine::of(&r.overlap),
                provenance: r.provenance,
            };
            writeln!(jsonl, "{}", serde_json::to_string(&line)?)?;
        }
        jsonl.flush()?;
        write_csv(&dir.join("summary.csv"), &records, depth)?;
        let summary = Summary {
            max_size,
            depth,
            semilattices_by_size,
            structures_by_size,
            implications: &report,
            separators,
            oracle: oracle.as_ref(),
        };
        fs::write(
            dir.join("implications.json"),
            serde_json::to_string_pretty(&summary)? + "\n",
        )?;
        if !violating.is_empty() {
            let vdir = dir.join("violations");
            fs::create_dir_all(&vdir)?;
            for &id in &violating {
                fs::write(
                    vdir.join(format!("record-{id}.json")),
                    record_certificate(&records[id])?.to_json(),
                )?;
            }
        }
    } else {
        for &id in &violating {
            eprintln!("{}", record_certificate(&records[id])?.to_json());
        }
    }
    let ok = report.holds() && oracle.as_ref().is_none_or(|o| o.agrees);
    println!(
        "{}",
        if ok {
            "all implications hold"
        } else {
            "VIOLATIONS FOUND"
        }
    );
    Ok(ok)
}
