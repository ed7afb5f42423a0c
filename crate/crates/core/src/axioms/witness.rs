use crate::algebra::{ContactStructure, SelectorFunction};

use super::{Axiom, Witness};

/// Literal selector sum `c_{1,f(1)} + ... + c_{n,f(n)}`, folded one join at
/// a time.
fn sum(cs: &ContactStructure, pairs: &[(usize, usize)], f: SelectorFunction) -> usize {
    pairs.iter().enumerate().fold(0, |acc, (i, &(c0, c1))| {
        cs.join(acc, if f.at(i) == 0 { c0 } else { c1 })
    })
}

/// Re-checks a failing witness against the literal definition of `axiom`
/// at arity `n`: all premises must hold and the conclusion must fail.
/// Witnesses naming indices outside the carrier, or of the wrong kind for
/// the axiom, are rejected.
pub fn revalidate(cs: &ContactStructure, axiom: Axiom, n: Option<usize>, witness: &Witness) -> bool {
    let len = cs.len();
    let ok = |xs: &[usize]| xs.iter().all(|&x| x < len);
    match (axiom, witness) {
        (Axiom::WeakContact, Witness::ZeroContact { a, b }) => {
            ok(&[*a, *b]) && (*a == 0 || *b == 0) && cs.relates(*a, *b)
        }
        (Axiom::WeakContact, Witness::Reflexivity { a }) => ok(&[*a]) && *a != 0 && !cs.relates(*a, *a),
        (Axiom::WeakContact, Witness::Symmetry { a, b }) => ok(&[*a, *b]) && cs.relates(*a, *b) && !cs.relates(*b, *a),
        (Axiom::WeakContact, Witness::Ext { a, b, a1, b1 }) => {
            ok(&[*a, *b, *a1, *b1]) && cs.relates(*a, *b) && cs.leq(*a, *a1) && cs.leq(*b, *b1) && !cs.relates(*a1, *b1)
        }
        (Axiom::Additive, Witness::Additivity { a, b, c }) => {
            ok(&[*a, *b, *c]) && cs.relates(*a, cs.join(*b, *c)) && !cs.relates(*a, *b) && !cs.relates(*a, *c)
        }
        (_, Witness::Schema { a, b, pairs }) => {
            let (a, b) = (*a, *b);
            let arity = pairs.len();
            let flat: Vec<usize> = pairs.iter().flat_map(|&(x, y)| [x, y]).collect();
            if !ok(&[a, b]) || !ok(&flat) || arity == 0 || arity > 20 {
                return false;
            }
            let expected = match axiom {
                Axiom::D1 => Some(1),
                _ => n,
            };
            if expected != Some(arity) {
                return false;
            }
            if pairs.iter().any(|&(c0, c1)| cs.relates(c0, c1)) {
                return false;
            }
            let mut selectors = SelectorFunction::all(arity);
            match axiom {
                Axiom::D1 | Axiom::D1Plus => {
                    selectors.all(|f| cs.leq(b, cs.join(a, sum(cs, pairs, f)))) && !cs.leq(b, a)
                }
                Axiom::D2 | Axiom::D2All => {
                    selectors.all(|f| {
                        let s = sum(cs, pairs, f);
                        cs.leq(b, s) || cs.leq(a, s)
                    }) && cs.relates(b, a)
                }
                Axiom::D2Minus => {
                    selectors.all(|f| {
                        let s = sum(cs, pairs, f);
                        if f.at(0) == 0 {
                            cs.leq(b, s)
                        } else {
                            cs.leq(a, s)
                        }
                    }) && cs.relates(b, a)
                }
                _ => false,
            }
        }
        _ => false,
    }
}
