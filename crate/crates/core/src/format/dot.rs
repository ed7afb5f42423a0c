use std::fmt::Write;

use crate::representation::Representation;

use super::LoadedStructure;

fn label(s: &LoadedStructure, x: usize) -> String {
    let hex = s.structure.lattice().element(x).to_hex();
    match s.role_of(x) {
        Some(name) => format!("{name}\\n{hex}"),
        None => hex,
    }
}

/// Hasse diagram, bottom to top. Atoms are boxes, named elements are
/// filled, and non-contact pairs are joined by dashed red edges.
pub fn structure_dot(s: &LoadedStructure) -> String {
    let lat = s.structure.lattice();
    let n = lat.len();
    let atoms = lat.atoms();
    let mut out = String::from("graph contact {\n  rankdir=BT;\n  node [shape=ellipse];\n");
    for x in 0..n {
        let mut attrs = vec![format!("label=\"{}\"", label(s, x))];
        if atoms.contains(&x) {
            attrs.push("shape=box".into());
        }
        match s.role_of(x) {
            Some("a_bar") | Some("b_bar") => attrs.push("style=filled fillcolor=lightblue".into()),
            Some(_) => attrs.push("style=filled fillcolor=lightgrey".into()),
            None => {}
        }
        writeln!(out, "  e{x} [{}];", attrs.join(" ")).unwrap();
    }
    for y in 0..n {
        for x in 0..y {
            if !lat.leq(x, y) {
                continue;
            }
            let covered = !(x + 1..y).any(|z| lat.leq(x, z) && lat.leq(z, y));
            if covered {
                writeln!(out, "  e{x} -- e{y};").unwrap();
            }
        }
    }
    for (a, b) in s.structure.non_contact_pairs() {
        writeln!(out, "  e{a} -- e{b} [style=dashed color=red constraint=false];").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Incidence between elements and ground points of a representation.
pub fn representation_dot(s: &LoadedStructure, rep: &Representation) -> String {
    let mut out = format!("graph {} {{\n  rankdir=LR;\n", rep.mode.name());
    for x in 0..rep.images.len() {
        writeln!(out, "  e{x} [label=\"{}\"];", label(s, x)).unwrap();
    }
    for k in 0..rep.ground_size {
        let name = match &rep.columns {
            Some(cols) => format!("m{}", cols[k]),
            None => format!("p{k}"),
        };
        writeln!(out, "  p{k} [label=\"{name}\" shape=point xlabel=\"{name}\"];").unwrap();
    }
    for (x, img) in rep.images.iter().enumerate() {
        for k in img.iter() {
            writeln!(out, "  e{x} -- p{k};").unwrap();
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ContactRelation, ContactStructure, FiniteJoinSemilattice};
    use crate::representation::{decide_weak_representable, RepresentationOutcome};

    #[test]
    fn powerset_diagram() {
        let lat = FiniteJoinSemilattice::powerset(2).unwrap();
        let s = LoadedStructure::new(
            ContactStructure::new(lat.clone(), ContactRelation::from_pairs(4, [(1, 3), (2, 3)])).unwrap(),
        );
        let dot = structure_dot(&s);
        for edge in [
            "e0 -- e1;",
            "e0 -- e2;",
            "e1 -- e3;",
            "e2 -- e3;",
            "e1 -- e2 [style=dashed",
        ] {
            assert!(dot.contains(edge), "{edge}");
        }
        assert!(!dot.contains("e0 -- e3"));
        assert_eq!(dot, structure_dot(&s));
        let RepresentationOutcome::Represented(rep) = decide_weak_representable(&s.structure).unwrap() else {
            panic!()
        };
        let inc = representation_dot(&s, &rep);
        assert!(inc.starts_with("graph weak {"));
        assert_eq!(
            inc.matches(" -- ").count(),
            rep.images.iter().map(|i| i.count()).sum::<usize>()
        );
    }
}
