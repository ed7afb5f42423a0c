use contactlab::axioms::Witness;
use contactlab::certificate::{Certificate, Check, Entry, Status};

pub fn name(check: Check) -> String {
    serde_json::to_value(check)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

fn status(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
    }
}

fn witness(w: &Witness) -> String {
    match w {
        Witness::Schema { a, b, pairs } => {
            let pairs: Vec<String> = pairs.iter().map(|(x, y)| format!("({x},{y})")).collect();
            format!("a={a} b={b} pairs=[{}]", pairs.join(","))
        }
        other => serde_json::to_string(other).unwrap_or_default(),
    }
}

pub fn entry_line(e: &Entry) -> String {
    let mut line = name(e.check);
    if let Some(n) = e.n {
        line.push_str(&format!(" n={n}"));
    }
    line.push_str(&format!(": {}", status(e.verdict)));
    if let Some(v) = e.value {
        line.push_str(&format!(" value={v}"));
    }
    if let Some(exp) = e.expected {
        line.push_str(&format!(" (expected {})", status(exp)));
    }
    if let Some(exp) = e.expected_value {
        line.push_str(&format!(" (expected {exp})"));
    }
    if let Some(w) = &e.witness {
        line.push_str(&format!(" witness: {}", witness(w)));
    }
    if let Some(sets) = &e.sets {
        let parts: Vec<String> = sets.iter().map(|(k, v)| format!("{k}={v}")).collect();
        line.push_str(&format!(" sets: {}", parts.join(" ")));
    }
    if let Some(o) = &e.obstruction {
        line.push_str(&format!(
            " obstruction: {}",
            serde_json::to_string(o).unwrap_or_default()
        ));
    }
    if !e.meets_expectation() {
        line.push_str("  <-- unexpected");
    }
    line
}

pub fn print_entries(cert: &Certificate) {
    for e in &cert.entries {
        println!("{}", entry_line(e));
    }
}
