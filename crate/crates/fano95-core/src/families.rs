//! Enumeration of the 95 families and their standard entry numbers.
//!
//! A weight system gives a family when the general member is quasismooth
//! and every singular point in its basket is terminal.  Families are ordered
//! by degree, then lexicographically by weights, and numbered from 1; this
//! reproduces the standard numbering of the list (quartic threefold first,
//! the degree-66 hypersurface in P(1,5,6,22,33) last).

use alloc::vec::Vec;

use crate::basket::{compute_basket, Basket};
use crate::monomials::has_monomial_of_degree;
use crate::rational::Rational;
use crate::weights::WeightSystem;

/// Degree bound used by the default enumeration; the largest family has
/// degree 66, and the acceptance suite checks nothing new appears up to
/// here.
pub const DEFAULT_DEGREE_BOUND: u32 = 100;

/// One of the 95 families: entry number, weights, anticanonical degree, and
/// the basket of singularities of a general member.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FanoFamily {
    n: u32,
    weights: WeightSystem,
    kcube: Rational,
    basket: Basket,
}

impl FanoFamily {
    /// The 1-based entry number in the standard ordering.
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn weights(&self) -> &WeightSystem {
        &self.weights
    }

    /// `-K^3` of the family, exact.
    pub fn kcube(&self) -> &Rational {
        &self.kcube
    }

    pub fn basket(&self) -> &Basket {
        &self.basket
    }
}

/// The quasismoothness criterion for a general hypersurface of degree
/// `d = sum(a_i)` in `P(1,a1,a2,a3,a4)`.
///
/// For every nonempty subset `I` of the five coordinates, either some
/// monomial of degree `d` uses only `I`-variables, or there are at least
/// `|I|` distinct coordinates `e` outside `I` such that a monomial of the
/// form (monomial in `I`-variables)·`x_e` has degree `d`.
pub fn is_quasismooth_general(ws: &WeightSystem) -> bool {
    let w = ws.coordinate_weights();
    let d = ws.degree();
    for mask in 1u32..(1 << 5) {
        let subset: Vec<u32> = (0..5).filter(|&k| mask & (1 << k) != 0).map(|k| w[k]).collect();
        if has_monomial_of_degree(&subset, d) {
            continue;
        }
        let needed = subset.len();
        let witnesses = (0..5)
            .filter(|&e| mask & (1 << e) == 0)
            .filter(|&e| w[e] <= d && has_monomial_of_degree(&subset, d - w[e]))
            .count();
        if witnesses < needed {
            return false;
        }
    }
    true
}

/// Enumerates every family with degree at most `d_max`, in the standard
/// order, numbered from 1.
///
/// Candidates run over all weight four-tuples `a1 <= a2 <= a3 <= a4` with
/// `4 <= d = sum(a_i) <= d_max`; a candidate survives when the weight
/// system is well-formed with no triple common factor, the general member
/// is quasismooth, and its basket consists of terminal points only.
pub fn enumerate_families(d_max: u32) -> Vec<FanoFamily> {
    let mut out = Vec::new();
    for d in 4..=d_max {
        for a1 in 1..=d / 4 {
            for a2 in a1..=(d - a1) / 3 {
                for a3 in a2..=(d - a1 - a2) / 2 {
                    let a4 = d - a1 - a2 - a3;
                    let Ok(ws) = WeightSystem::new([a1, a2, a3, a4]) else {
                        continue;
                    };
                    if !is_quasismooth_general(&ws) {
                        continue;
                    }
                    let Ok(basket) = compute_basket(&ws) else {
                        continue;
                    };
                    out.push(FanoFamily {
                        n: 0,
                        kcube: ws.minus_k_cubed(),
                        weights: ws,
                        basket,
                    });
                }
            }
        }
    }
    // The generation order is already (degree, weights) ascending; assign
    // entry numbers.
    for (idx, family) in out.iter_mut().enumerate() {
        family.n = idx as u32 + 1;
    }
    out
}

/// The entry number of the family with the given weights, if any.
pub fn entry_number(families: &[FanoFamily], ws: &WeightSystem) -> Option<u32> {
    families.iter().find(|f| f.weights() == ws).map(|f| f.n())
}
