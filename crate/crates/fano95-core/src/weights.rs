//! Weight systems of anticanonically embedded Fano weighted hypersurfaces.
//!
//! The ambient space is `P(1,a1,a2,a3,a4)` with `a1 <= a2 <= a3 <= a4` and
//! the hypersurface degree is forced to `d = a1 + a2 + a3 + a4`.  Two
//! coprimality conditions make a system usable here: the four weights have no
//! common factor (well-formedness) and no three of them share a factor (the
//! general member then has only isolated singularities).

use core::fmt;

use num_integer::Integer;

use crate::rational::Rational;

/// A valid weight four-tuple together with its forced degree.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct WeightSystem {
    a: [u32; 4],
    d: u32,
}

/// Rejection reasons for a candidate weight four-tuple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightError {
    /// Some weight is zero.
    ZeroWeight,
    /// gcd(a1,a2,a3,a4) > 1: the ambient space is not well-formed.
    CommonFactor,
    /// Some three weights share a factor, giving a one-dimensional
    /// singular locus on the general member.
    TripleCommonFactor,
}

impl fmt::Display for WeightError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightError::ZeroWeight => f.write_str("weights must be positive"),
            WeightError::CommonFactor => f.write_str("the four weights share a common factor"),
            WeightError::TripleCommonFactor => {
                f.write_str("three of the weights share a common factor")
            }
        }
    }
}

impl core::error::Error for WeightError {}

impl WeightSystem {
    /// Validates and canonicalizes a weight four-tuple (sorting it
    /// ascending); the degree is `d = a1 + a2 + a3 + a4`.
    pub fn new(weights: [u32; 4]) -> Result<Self, WeightError> {
        let mut a = weights;
        a.sort_unstable();
        if a[0] == 0 {
            return Err(WeightError::ZeroWeight);
        }
        if a.iter().fold(0u32, |g, &w| g.gcd(&w)) != 1 {
            return Err(WeightError::CommonFactor);
        }
        for skip in 0..4 {
            let g = (0..4)
                .filter(|&i| i != skip)
                .fold(0u32, |g, i| g.gcd(&a[i]));
            if g != 1 {
                return Err(WeightError::TripleCommonFactor);
            }
        }
        let d = a.iter().sum();
        Ok(WeightSystem { a, d })
    }

    /// The four nontrivial weights `a1 <= a2 <= a3 <= a4`.
    pub fn weights(&self) -> [u32; 4] {
        self.a
    }

    /// All five coordinate weights `(1, a1, a2, a3, a4)`.
    pub fn coordinate_weights(&self) -> [u32; 5] {
        [1, self.a[0], self.a[1], self.a[2], self.a[3]]
    }

    /// The hypersurface degree `d = a1 + a2 + a3 + a4`.
    pub fn degree(&self) -> u32 {
        self.d
    }

    /// The anticanonical degree `-K^3 = d / (a1 a2 a3 a4)`, exact.
    pub fn minus_k_cubed(&self) -> Rational {
        let product: u64 = self.a.iter().map(|&w| w as u64).product();
        Rational::new(self.d, product)
    }
}

impl fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "P(1,{},{},{},{})",
            self.a[0], self.a[1], self.a[2], self.a[3]
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_is_the_weight_sum() {
        let w = WeightSystem::new([1, 1, 1, 2]).unwrap();
        assert_eq!(w.degree(), 5);
        assert_eq!(w.coordinate_weights(), [1, 1, 1, 1, 2]);
    }

    #[test]
    fn anticanonical_degree_examples() {
        let cases: [([u32; 4], (i64, u64)); 4] = [
            ([1, 1, 1, 2], (5, 2)),
            ([1, 1, 1, 1], (4, 1)),
            ([3, 4, 5, 7], (19, 420)),
            ([2, 5, 9, 11], (3, 110)),
        ];
        for (a, (num, den)) in cases {
            let w = WeightSystem::new(a).unwrap();
            assert_eq!(w.minus_k_cubed(), Rational::new(num, den));
        }
    }

    #[test]
    fn rejects_degenerate_tuples() {
        assert_eq!(WeightSystem::new([0, 1, 1, 1]), Err(WeightError::ZeroWeight));
        assert_eq!(
            WeightSystem::new([2, 2, 2, 2]),
            Err(WeightError::CommonFactor)
        );
        assert_eq!(
            WeightSystem::new([1, 2, 4, 4]),
            Err(WeightError::TripleCommonFactor)
        );
    }

    #[test]
    fn constructor_sorts() {
        let w = WeightSystem::new([7, 3, 5, 4]).unwrap();
        assert_eq!(w.weights(), [3, 4, 5, 7]);
    }
}
