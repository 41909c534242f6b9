//! Terminal cyclic quotient singularities and their canonical normal form.
//!
//! A three-dimensional isolated cyclic quotient singularity is terminal
//! exactly when it can be written as `1/r(1,a,r-a)` with `gcd(a,r) = 1`.  A
//! raw weight triple read off a chart is only defined up to simultaneous
//! multiplication by a unit of `Z/r`, so equality testing needs a normal
//! form: we search the (at most `r-1`) units for an image of the shape
//! `{1, a, r-a}` and store the representative with `a <= r-a`.

use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

/// A terminal cyclic quotient point of type `1/r(1,a,r-a)` in canonical
/// form: `r >= 2`, `gcd(a,r) = 1`, `1 <= a <= r-a`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct QuotientSingularity {
    r: u32,
    a: u32,
}

/// The input triple is not a terminal point: no unit of `Z/r` carries it to
/// the shape `{1, a, r-a}` with `gcd(a,r) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonTerminalError {
    pub r: u32,
    pub weights: [u32; 3],
}

impl fmt::Display for NonTerminalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "1/{}({},{},{}) is not a terminal quotient singularity",
            self.r, self.weights[0], self.weights[1], self.weights[2]
        )
    }
}

impl core::error::Error for NonTerminalError {}

impl QuotientSingularity {
    /// Directly builds a canonical type; `None` unless `r >= 2`,
    /// `gcd(a,r) = 1` and `a <= r-a`.
    pub fn new(r: u32, a: u32) -> Option<Self> {
        if r >= 2 && a >= 1 && a + a <= r && a.gcd(&r) == 1 {
            Some(QuotientSingularity { r, a })
        } else {
            None
        }
    }

    /// The index `r` of the cyclic group.
    pub fn r(&self) -> u32 {
        self.r
    }

    /// The canonical second weight `a` (so the type is `1/r(1,a,r-a)`).
    pub fn a(&self) -> u32 {
        self.a
    }

    /// The third weight `r - a`.
    pub fn b(&self) -> u32 {
        self.r - self.a
    }

    /// The blow-up weights `(1, a, r-a)`.
    pub fn blowup_weights(&self) -> [u32; 3] {
        [1, self.a, self.b()]
    }
}

impl fmt::Display for QuotientSingularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1/{}(1,{},{})", self.r, self.a, self.b())
    }
}

/// Canonicalizes a raw quotient type `1/r(w1,w2,w3)`.
///
/// Multiplies the triple by every unit `u` of `Z/r` and looks for an image
/// whose multiset is `{1, a, r-a}` with `gcd(a,r) = 1`; the result is
/// independent of which unit produces it.  Inputs with a weight divisible by
/// `r`, or with no unit producing that shape, are not terminal points of
/// this kind and are rejected.
pub fn normalize_quotient(
    r: u32,
    raw_weights: [u32; 3],
) -> Result<QuotientSingularity, NonTerminalError> {
    let err = || NonTerminalError {
        r,
        weights: raw_weights,
    };
    if r < 2 {
        return Err(err());
    }
    let reduced: Vec<u64> = raw_weights.iter().map(|&w| (w % r) as u64).collect();
    if reduced.contains(&0) {
        return Err(err());
    }
    let r64 = r as u64;
    for unit in 1..r64 {
        if unit.gcd(&r64) != 1 {
            continue;
        }
        let mut image: Vec<u64> = reduced.iter().map(|&w| (w * unit) % r64).collect();
        image.sort_unstable();
        // After sorting, a valid image is [1, a, r-a] with a <= r-a; the
        // only other placement of the forced entry 1 is a = 1 itself.
        if image[0] != 1 {
            continue;
        }
        let (x, y) = (image[1], image[2]);
        if x + y == r64 && x.gcd(&r64) == 1 {
            let a = x as u32;
            return Ok(QuotientSingularity { r, a });
        }
        // [1, 1, r-1] is covered above (x = 1); nothing else to try for
        // this unit.
    }
    Err(err())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn already_canonical_inputs() {
        assert_eq!(
            normalize_quotient(2, [1, 1, 1]).unwrap(),
            QuotientSingularity::new(2, 1).unwrap()
        );
        assert_eq!(
            normalize_quotient(5, [1, 2, 3]).unwrap(),
            QuotientSingularity::new(5, 2).unwrap()
        );
    }

    #[test]
    fn reorders_and_rescales() {
        // 1/3(1,2,1) is 1/3(1,1,2) after sorting the weights.
        assert_eq!(
            normalize_quotient(3, [1, 2, 1]).unwrap(),
            QuotientSingularity::new(3, 1).unwrap()
        );
        // 1/5(2,4,6) = 2·(1,2,3); the unit 3 maps it back.
        assert_eq!(
            normalize_quotient(5, [2, 4, 6]).unwrap(),
            QuotientSingularity::new(5, 2).unwrap()
        );
    }

    #[test]
    fn rejects_non_terminal_types() {
        // 1/7(1,2,4) has age exactly 1 in the generator direction: no two
        // entries sum to 7 in any unit image.
        assert!(normalize_quotient(7, [1, 2, 4]).is_err());
        // A weight divisible by r means the point is not isolated of this
        // shape.
        assert!(normalize_quotient(4, [1, 2, 4]).is_err());
        // gcd(a, r) > 1 after pairing: 1/6(1,2,4).
        assert!(normalize_quotient(6, [1, 2, 4]).is_err());
    }

    #[test]
    fn idempotent_on_canonical_types() {
        for r in 2..40 {
            for a in 1..=r / 2 {
                if let Some(s) = QuotientSingularity::new(r, a) {
                    assert_eq!(normalize_quotient(r, [1, a, r - a]).unwrap(), s);
                }
            }
        }
    }

    #[test]
    fn display_form() {
        assert_eq!(
            QuotientSingularity::new(9, 4).unwrap().to_string(),
            "1/9(1,4,5)"
        );
    }
}
