//! The Kawamata weighted blow-up of a terminal cyclic quotient point.
//!
//! Over a point of type `1/r(1,a,b)` with `b = r-a` there is a unique
//! divisorial extraction with weights `(1,a,b)`.  Its exceptional divisor is
//! the weighted plane `P(1,a,b)`, the discrepancy is `1/r`, and the
//! anticanonical degree drops by exactly `1/(r·a·b)`.  The two singular
//! vertices of the exceptional plane are again terminal quotient points of
//! strictly smaller index, computed here by subdividing the defining cone:
//! at the index-`a` vertex the chart weights are `(1, -r, b) mod a`, at the
//! index-`b` vertex they are `(1, a, -r) mod b`.

use alloc::vec::Vec;

use crate::rational::Rational;
use crate::singularity::{normalize_quotient, QuotientSingularity};

/// Invariants of one Kawamata blow-up.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BlowupResult {
    /// Decrease of `-K^3`: `1/(r·a·(r-a))`.
    pub drop: Rational,
    /// Coefficient of the exceptional divisor in `K_Y - pi^*(K_X)`: `1/r`.
    pub discrepancy: Rational,
    /// Triple self-intersection of the exceptional class:
    /// `r^2/(a·(r-a))`.
    pub e_cube: Rational,
    /// The blow-up weights `(1, a, r-a)`; the exceptional divisor is the
    /// weighted plane with these weights.
    pub exceptional_weights: [u32; 3],
    /// Quotient points on the exceptional plane, ascending; only indices
    /// `>= 2` appear, so there are at most two.
    pub children: Vec<QuotientSingularity>,
}

/// Blows up a terminal point `1/r(1,a,r-a)` with weights `(1,a,r-a)`.
pub fn kawamata_blowup(s: QuotientSingularity) -> BlowupResult {
    let (r, a, b) = (s.r() as u64, s.a() as u64, s.b() as u64);
    let mut children = Vec::new();
    if a >= 2 {
        let triple = [1, (a - r % a) % a, b % a];
        children.push(
            normalize_quotient(a as u32, triple.map(|w| w as u32))
                .expect("vertex of an exceptional plane over a terminal point is terminal"),
        );
    }
    if b >= 2 {
        let triple = [1, a % b, (b - r % b) % b];
        children.push(
            normalize_quotient(b as u32, triple.map(|w| w as u32))
                .expect("vertex of an exceptional plane over a terminal point is terminal"),
        );
    }
    children.sort_unstable();
    BlowupResult {
        drop: Rational::new(1, r * a * b),
        discrepancy: Rational::new(1, r),
        e_cube: Rational::new(r * r, a * b),
        exceptional_weights: [1, s.a(), s.b()],
        children,
    }
}
