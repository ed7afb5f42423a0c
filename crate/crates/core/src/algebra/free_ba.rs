use serde::{Deserialize, Serialize};

use crate::bits::SubsetElement;

use super::AlgebraError;

/// Default cap on the ground-set width handled by direct free-algebra work.
pub const DEFAULT_WIDTH_CAP: usize = 64;

/// Environment variable overriding [`DEFAULT_WIDTH_CAP`].
pub const WIDTH_CAP_ENV: &str = "CONTACTLAB_WIDTH_CAP";

/// The ground-width cap in force: `CONTACTLAB_WIDTH_CAP` when set to a
/// positive integer, otherwise [`DEFAULT_WIDTH_CAP`].
pub fn width_cap() -> usize {
    std::env::var(WIDTH_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&v| v > 0)
        .unwrap_or(DEFAULT_WIDTH_CAP)
}

/// A function `f: {1..n} -> {0,1}`; bit `i` of `choices` is `f(i + 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SelectorFunction {
    pub n: usize,
    pub choices: u64,
}

impl SelectorFunction {
    pub fn new(n: usize, choices: u64) -> Self {
        assert!(
            n <= 63 && choices >> n == 0,
            "selector {choices:#b} does not fit arity {n}"
        );
        Self { n, choices }
    }

    /// Value at the 0-based coordinate `i`.
    pub fn at(&self, i: usize) -> usize {
        (self.choices >> i & 1) as usize
    }

    pub fn parity(&self) -> usize {
        self.choices.count_ones() as usize % 2
    }

    /// All `2^n` selectors in increasing `choices` order.
    pub fn all(n: usize) -> impl Iterator<Item = SelectorFunction> {
        assert!(n <= 63, "arity {n} too large");
        (0..1u64 << n).map(move |choices| SelectorFunction { n, choices })
    }
}

/// The Boolean algebra freely generated by `n` elements, as the powerset of
/// the `2^n` valuations of the generators.
///
/// Ground point `p` is the valuation whose coordinate `i` (0-based) is bit
/// `n - 1 - i` of `p`, so for `n = 2` the points read `00, 01, 10, 11`.
/// Generator `i` holds the valuations with coordinate `i` equal to 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeBooleanAlgebra {
    n: usize,
    generators: Vec<SubsetElement>,
    cogenerators: Vec<SubsetElement>,
}

impl FreeBooleanAlgebra {
    /// Builds the algebra under the width cap from the environment.
    pub fn new(n: usize) -> Result<Self, AlgebraError> {
        Self::with_cap(n, width_cap())
    }

    /// Builds the algebra if `2^n <= cap`.
    pub fn with_cap(n: usize, cap: usize) -> Result<Self, AlgebraError> {
        if n == 0 {
            return Err(AlgebraError::InvalidArity(n));
        }
        if n >= usize::BITS as usize - 1 || 1usize << n > cap {
            return Err(AlgebraError::CapExceeded { requested: n, cap });
        }
        let width = 1usize << n;
        let generators: Vec<SubsetElement> = (0..n)
            .map(|i| SubsetElement::from_points(width, (0..width).filter(|p| p >> (n - 1 - i) & 1 == 1)))
            .collect();
        let cogenerators = generators.iter().map(|g| g.complement()).collect();
        Ok(Self {
            n,
            generators,
            cogenerators,
        })
    }

    pub fn generator_count(&self) -> usize {
        self.n
    }

    pub fn ground_size(&self) -> usize {
        1 << self.n
    }

    pub fn generators(&self) -> &[SubsetElement] {
        &self.generators
    }

    pub fn cogenerators(&self) -> &[SubsetElement] {
        &self.cogenerators
    }

    /// The literal `c_{i+1, j}`: `j = 0` is generator `i`, `j = 1` its
    /// complement.
    pub fn literal(&self, i: usize, j: usize) -> &SubsetElement {
        match j {
            0 => &self.generators[i],
            1 => &self.cogenerators[i],
            _ => panic!("literal side must be 0 or 1, got {j}"),
        }
    }

    pub fn zero(&self) -> SubsetElement {
        SubsetElement::empty(self.ground_size())
    }

    pub fn one(&self) -> SubsetElement {
        SubsetElement::full(self.ground_size())
    }

    pub fn complement(&self, x: &SubsetElement) -> Result<SubsetElement, AlgebraError> {
        if x.width() != self.ground_size() {
            return Err(AlgebraError::WidthMismatch {
                expected: self.ground_size(),
                found: x.width(),
            });
        }
        Ok(x.complement())
    }

    /// `c_{1,f(1)} + ... + c_{n,f(n)}`.
    pub fn selector_sum(&self, f: SelectorFunction) -> SubsetElement {
        let mut acc = self.zero();
        for i in 0..self.n {
            acc.union_with(self.literal(i, f.at(i)));
        }
        acc
    }

    /// `c_{1,f(1)} c_{2,f(2)} ... c_{n,f(n)}`.
    pub fn selector_product(&self, f: SelectorFunction) -> SubsetElement {
        let mut acc = self.one();
        for i in 0..self.n {
            acc.intersect_with(self.literal(i, f.at(i)));
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_generator() {
        let ba = FreeBooleanAlgebra::with_cap(1, 64).unwrap();
        assert_eq!(ba.ground_size(), 2);
        assert_eq!(*ba.literal(0, 0), SubsetElement::from_points(2, [1]));
        assert_eq!(*ba.literal(0, 1), SubsetElement::from_points(2, [0]));
    }

    #[test]
    fn two_generators_orientation() {
        let ba = FreeBooleanAlgebra::with_cap(2, 64).unwrap();
        // points 00,01,10,11 are 0..4; c_{1,0} = {10, 11}, c_{2,0} = {01, 11}
        assert_eq!(*ba.literal(0, 0), SubsetElement::from_points(4, [2, 3]));
        assert_eq!(*ba.literal(1, 0), SubsetElement::from_points(4, [1, 3]));
        assert_eq!(*ba.literal(1, 1), SubsetElement::from_points(4, [0, 2]));
        assert_eq!(ba.complement(ba.literal(0, 0)).unwrap(), *ba.literal(0, 1));
        assert_eq!(ba.complement(&ba.zero()).unwrap(), ba.one());
        assert!(ba.complement(&SubsetElement::empty(3)).is_err());
    }

    #[test]
    fn literals_partition_the_ground_set() {
        for n in 1..=6 {
            let ba = FreeBooleanAlgebra::with_cap(n, 64).unwrap();
            for i in 0..n {
                assert!(!ba.literal(i, 0).intersects(ba.literal(i, 1)));
                assert!(ba.literal(i, 0).union(ba.literal(i, 1)).is_full());
            }
            let mut cover = ba.zero();
            let products: Vec<_> = SelectorFunction::all(n).map(|f| ba.selector_product(f)).collect();
            for (k, p) in products.iter().enumerate() {
                assert!(!p.is_empty(), "n={n} product {k} is zero");
                for q in &products[k + 1..] {
                    assert!(!p.intersects(q));
                }
                cover.union_with(p);
            }
            assert!(cover.is_full());
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            FreeBooleanAlgebra::with_cap(7, 64),
            Err(AlgebraError::CapExceeded { requested: 7, cap: 64 })
        ));
        assert!(FreeBooleanAlgebra::with_cap(0, 64).is_err());
        assert_eq!(FreeBooleanAlgebra::with_cap(10, 1024).unwrap().ground_size(), 1024);
    }
}
