use crate::algebra::{FreeBooleanAlgebra, SelectorFunction};
use crate::bits::SubsetElement;

use super::ConstructionError;

/// Largest generator count accepted by the parity constructions (a ground
/// set of `2^16` valuations).
pub const PARITY_MAX_N: usize = 16;

fn algebra(n: usize) -> Result<FreeBooleanAlgebra, ConstructionError> {
    if n == 0 || n > PARITY_MAX_N {
        return Err(ConstructionError::InvalidParameter {
            n,
            reason: "parity elements need 1 <= n <= 16",
        });
    }
    Ok(FreeBooleanAlgebra::with_cap(n, 1 << PARITY_MAX_N)?)
}

/// `(b̄, ā)`: the products of the selector sums over even-parity and over
/// odd-parity selectors respectively.
pub fn bar_elements(n: usize) -> Result<(SubsetElement, SubsetElement), ConstructionError> {
    let ba = algebra(n)?;
    let mut even = ba.one();
    let mut odd = ba.one();
    for f in SelectorFunction::all(n) {
        let s = ba.selector_sum(f);
        if f.parity() == 0 {
            even.intersect_with(&s);
        } else {
            odd.intersect_with(&s);
        }
    }
    Ok((even, odd))
}

/// `(b̄, ā)` as sums of full literal products: for odd `n`, b̄ collects the
/// even-parity products and ā the odd ones; for even `n` the roles swap.
pub fn parity_normal_forms(n: usize) -> Result<(SubsetElement, SubsetElement), ConstructionError> {
    let ba = algebra(n)?;
    let mut even = ba.zero();
    let mut odd = ba.zero();
    for f in SelectorFunction::all(n) {
        let p = ba.selector_product(f);
        if f.parity() == 0 {
            even.union_with(&p);
        } else {
            odd.union_with(&p);
        }
    }
    Ok(if n % 2 == 1 { (even, odd) } else { (odd, even) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_generators_by_hand() {
        // points 00,01,10,11 = 0..4
        let (b, a) = bar_elements(2).unwrap();
        assert_eq!(b, SubsetElement::from_points(4, [1, 2]));
        assert_eq!(a, SubsetElement::from_points(4, [0, 3]));
    }

    #[test]
    fn one_generator() {
        // b̄ = c_{1,0}, ā = c_{1,1}
        let (b, a) = bar_elements(1).unwrap();
        assert_eq!(b, SubsetElement::from_points(2, [1]));
        assert_eq!(a, SubsetElement::from_points(2, [0]));
        assert_eq!(parity_normal_forms(1).unwrap(), (b, a));
    }

    #[test]
    fn b_bar_is_odd_weight_valuations() {
        for n in 1..=8 {
            let (b, a) = bar_elements(n).unwrap();
            for p in 0..1usize << n {
                assert_eq!(b.contains(p), p.count_ones() % 2 == 1, "n={n} p={p}");
            }
            assert_eq!(a, b.complement());
        }
    }

    #[test]
    fn parameter_range() {
        assert!(bar_elements(0).is_err());
        assert!(parity_normal_forms(17).is_err());
    }
}
