use contactlab::axioms::{check_d1, check_d2, check_weak_contact, decide_d2_all, profile_of, revalidate};
use contactlab::constructions::build_sn;
use contactlab::{Axiom, Bounds, Witness};

#[test]
fn sn_separates_d2_levels() {
    for n in 2..=4 {
        let sn = build_sn(n).unwrap();
        let cs = &sn.structure;
        assert!(check_weak_contact(cs).unwrap().passed());
        assert!(check_d1(cs).unwrap().passed(), "n={n}");
        for m in 1..n {
            assert!(check_d2(cs, m).unwrap().passed(), "n={n} m={m}");
        }
        let v = check_d2(cs, n).unwrap();
        let w = v.witness().expect("D2_n fails");
        assert!(revalidate(cs, Axiom::D2, Some(n), w));

        // the construction's own instance
        let designed = Witness::Schema {
            a: sn.roles.a_bar,
            b: sn.roles.b_bar,
            pairs: sn.roles.literals.clone(),
        };
        assert!(revalidate(cs, Axiom::D2, Some(n), &designed));

        let all = decide_d2_all(cs).unwrap();
        assert_eq!(all.n, Some(n));
    }
}

#[test]
fn s2_profile() {
    let sn = build_sn(2).unwrap();
    let p = profile_of(&sn.structure, Bounds { max_n: 2 }).unwrap();
    assert!(p.weak_contact && p.d1);
    assert_eq!(p.d2, vec![true, false]);
    assert!(!p.d2_all);
    assert_eq!(p.d2_least_failure, Some(2));
}

#[test]
fn sn_weakly_but_not_overlap_representable() {
    use contactlab::representation::{decide_overlap_representable, decide_weak_representable, RepresentationOutcome};
    for n in 2..=4 {
        let sn = build_sn(n).unwrap();
        let cs = &sn.structure;
        match decide_weak_representable(cs).unwrap() {
            RepresentationOutcome::Represented(rep) => rep.validate(cs).unwrap(),
            other => panic!("n={n}: {other:?}"),
        }
        assert!(!decide_overlap_representable(cs).unwrap().is_represented(), "n={n}");
    }
}
