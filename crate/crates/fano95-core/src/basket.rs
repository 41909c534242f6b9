//! Singularity baskets: the multiset of terminal quotient points on a
//! general member of a family.
//!
//! Singular points of a general hypersurface sit only at coordinate points
//! and along coordinate edges of the ambient weighted projective space:
//!
//! * the vertex with weight `w >= 2` lies on the hypersurface iff `w` does
//!   not divide `d` (no pure power monomial); its transverse type is read
//!   off by eliminating one coordinate `j` with `d ≡ w_j (mod w)`;
//! * an edge whose two weights share `g = gcd >= 2` meets the hypersurface
//!   in the zeros of the restricted binary form; the zeros with both
//!   coordinates nonzero (one fewer than the number of lattice monomials on
//!   the segment) are `1/g` points transverse to the edge.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::monomials::count_binary_monomials;
use crate::singularity::{normalize_quotient, NonTerminalError, QuotientSingularity};
use crate::weights::WeightSystem;

/// A multiset of terminal quotient singularity types with multiplicities.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Basket {
    entries: BTreeMap<QuotientSingularity, u32>,
}

impl Basket {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in canonical `(r, a)` order with their counts.
    pub fn iter(&self) -> impl Iterator<Item = (QuotientSingularity, u32)> + '_ {
        self.entries.iter().map(|(&s, &c)| (s, c))
    }

    pub fn count_of(&self, s: QuotientSingularity) -> u32 {
        self.entries.get(&s).copied().unwrap_or(0)
    }

    /// Total number of singular points.
    pub fn total_points(&self) -> u32 {
        self.entries.values().sum()
    }

    fn add(&mut self, s: QuotientSingularity, count: u32) {
        if count > 0 {
            *self.entries.entry(s).or_insert(0) += count;
        }
    }

    /// Builds a basket from `(r, a, count)` triples, merging duplicates.
    /// `None` if some triple is not a canonical terminal type.
    pub fn from_counts(items: &[(u32, u32, u32)]) -> Option<Basket> {
        let mut basket = Basket::default();
        for &(r, a, count) in items {
            basket.add(QuotientSingularity::new(r, a)?, count);
        }
        Some(basket)
    }
}

impl fmt::Display for Basket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("none");
        }
        let mut first = true;
        for (s, c) in self.iter() {
            if !first {
                f.write_str(", ")?;
            }
            write!(f, "{s} x{c}")?;
            first = false;
        }
        Ok(())
    }
}

/// Failure modes of basket computation on a candidate weight system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BasketError {
    /// A coordinate point with `w_i` not dividing `d` has no eliminating
    /// witness: the general member is not quasismooth there.
    NotQuasismooth { coordinate: usize },
    /// Two witnesses produced different canonical types; cannot happen for
    /// a genuine quotient point (witness weights are congruent mod `w_i`),
    /// so this guards against internal inconsistency.
    AmbiguousType { coordinate: usize },
    /// An edge with `gcd >= 2` carries no monomial of degree `d`, so the
    /// whole edge curve lies in the hypersurface (a one-dimensional
    /// singular locus).
    EdgeInHypersurface { i: usize, j: usize },
    /// A computed transverse type is not terminal.
    NonTerminal(NonTerminalError),
}

impl fmt::Display for BasketError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasketError::NotQuasismooth { coordinate } => {
                write!(f, "no eliminating witness at coordinate {coordinate}")
            }
            BasketError::AmbiguousType { coordinate } => {
                write!(f, "witnesses disagree at coordinate {coordinate}")
            }
            BasketError::EdgeInHypersurface { i, j } => {
                write!(f, "edge ({i},{j}) is contained in the hypersurface")
            }
            BasketError::NonTerminal(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for BasketError {}

impl From<NonTerminalError> for BasketError {
    fn from(e: NonTerminalError) -> Self {
        BasketError::NonTerminal(e)
    }
}

/// The quotient type at coordinate point `i` (0-based over the five
/// coordinates, weight `w_i >= 2`), or `None` when `w_i | d` so the general
/// member misses the point.
///
/// A witness is a coordinate `j != i` with `d ≡ w_j (mod w_i)` and
/// `d - w_j >= w_i`: the monomial `x_i^k x_j` then has degree `d`, the
/// member is quasismooth at the point, and locally eliminates `x_j`.  The
/// type is `1/w_i` acting with the three remaining coordinate weights.  All
/// witnesses give the same canonical type; disagreement is reported as an
/// error rather than resolved.
pub fn coordinate_point_singularity(
    ws: &WeightSystem,
    i: usize,
) -> Result<Option<QuotientSingularity>, BasketError> {
    let w = ws.coordinate_weights();
    let wi = w[i];
    debug_assert!(wi >= 2, "coordinate weight must be >= 2");
    let d = ws.degree();
    if d.is_multiple_of(wi) {
        return Ok(None);
    }
    let mut found: Option<QuotientSingularity> = None;
    for j in 0..5 {
        if j == i || d % wi != w[j] % wi || d - w[j] < wi {
            continue;
        }
        let others: Vec<u32> = (0..5).filter(|&k| k != i && k != j).map(|k| w[k]).collect();
        let ty = normalize_quotient(wi, [others[0], others[1], others[2]])?;
        match found {
            None => found = Some(ty),
            Some(prev) if prev != ty => {
                return Err(BasketError::AmbiguousType { coordinate: i })
            }
            _ => {}
        }
    }
    match found {
        Some(ty) => Ok(Some(ty)),
        None => Err(BasketError::NotQuasismooth { coordinate: i }),
    }
}

/// The singular points on the coordinate edge `(i, j)` (0-based, with
/// `g = gcd(w_i, w_j) >= 2`): the count of torus zeros of the restricted
/// binary form and their common transverse type `1/g`.
///
/// The general restricted form has one distinct root per lattice monomial
/// on the segment; roots at the two vertices are the coordinate points,
/// handled separately, so the edge contributes `#monomials - 1` points.
pub fn edge_singularities(
    ws: &WeightSystem,
    i: usize,
    j: usize,
) -> Result<(u32, QuotientSingularity), BasketError> {
    let w = ws.coordinate_weights();
    let g = w[i].gcd(&w[j]);
    debug_assert!(g >= 2, "edge weights must share a factor");
    let d = ws.degree();
    let monomials = count_binary_monomials(w[i], w[j], d);
    if monomials == 0 {
        return Err(BasketError::EdgeInHypersurface { i, j });
    }
    let others: Vec<u32> = (0..5).filter(|&k| k != i && k != j).map(|k| w[k]).collect();
    let ty = normalize_quotient(g, [others[0], others[1], others[2]])?;
    Ok((monomials - 1, ty))
}

/// The full basket of a general member: all coordinate point types plus all
/// edge contributions.
pub fn compute_basket(ws: &WeightSystem) -> Result<Basket, BasketError> {
    let w = ws.coordinate_weights();
    let mut basket = Basket::default();
    for (i, &wi) in w.iter().enumerate() {
        if wi >= 2 {
            if let Some(ty) = coordinate_point_singularity(ws, i)? {
                basket.add(ty, 1);
            }
        }
    }
    for i in 0..5 {
        for j in (i + 1)..5 {
            if w[i].gcd(&w[j]) >= 2 {
                let (count, ty) = edge_singularities(ws, i, j)?;
                basket.add(ty, count);
            }
        }
    }
    Ok(basket)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ws(a: [u32; 4]) -> WeightSystem {
        WeightSystem::new(a).unwrap()
    }

    fn sing(r: u32, a: u32) -> QuotientSingularity {
        QuotientSingularity::new(r, a).unwrap()
    }

    #[test]
    fn coordinate_points_of_degree_nine_example() {
        // P(1,1,1,3,4), d = 9: the weight-4 vertex is a 1/4(1,1,3) point,
        // the weight-3 vertex is missed because t^3 has degree 9.
        let w = ws([1, 1, 3, 4]);
        assert_eq!(
            coordinate_point_singularity(&w, 4).unwrap(),
            Some(sing(4, 1))
        );
        assert_eq!(coordinate_point_singularity(&w, 3).unwrap(), None);
    }

    #[test]
    fn coordinate_point_with_two_witnesses() {
        // P(1,2,3,4,5), d = 14: at the weight-5 vertex the only witness is
        // the weight-4 coordinate, giving 1/5(1,2,3); at the weight-3
        // vertex both weight-2 and weight-5 witnesses give 1/3(1,1,2).
        let w = ws([2, 3, 4, 5]);
        assert_eq!(
            coordinate_point_singularity(&w, 4).unwrap(),
            Some(sing(5, 2))
        );
        assert_eq!(
            coordinate_point_singularity(&w, 2).unwrap(),
            Some(sing(3, 1))
        );
    }

    #[test]
    fn edge_counts() {
        // P(1,1,2,2,3), d = 8: the (2,2) edge carries 4 half points.
        let (count, ty) = edge_singularities(&ws([1, 2, 2, 3]), 2, 3).unwrap();
        assert_eq!((count, ty), (4, sing(2, 1)));

        // P(1,1,3,4,4), d = 12: the (4,4) edge carries 3 points 1/4(1,1,3).
        let (count, ty) = edge_singularities(&ws([1, 3, 4, 4]), 3, 4).unwrap();
        assert_eq!((count, ty), (3, sing(4, 1)));

        // P(1,1,3,5,6), d = 15: the (3,6) edge carries 2 points 1/3(1,1,2).
        let (count, ty) = edge_singularities(&ws([1, 3, 5, 6]), 2, 4).unwrap();
        assert_eq!((count, ty), (2, sing(3, 1)));
    }

    #[test]
    fn full_baskets() {
        let b = compute_basket(&ws([1, 3, 5, 6])).unwrap();
        assert_eq!(
            b,
            Basket::from_counts(&[(3, 1, 2), (6, 1, 1)]).unwrap()
        );

        let b = compute_basket(&ws([2, 3, 4, 5])).unwrap();
        assert_eq!(
            b,
            Basket::from_counts(&[(2, 1, 3), (3, 1, 1), (4, 1, 1), (5, 2, 1)]).unwrap()
        );

        // The degree-6 hypersurface in P(1,1,1,1,3) is smooth.
        assert!(compute_basket(&ws([1, 1, 1, 3])).unwrap().is_empty());

        let b = compute_basket(&ws([4, 5, 6, 9])).unwrap();
        assert_eq!(
            b,
            Basket::from_counts(&[(2, 1, 2), (3, 1, 1), (5, 1, 1), (9, 4, 1)]).unwrap()
        );
    }
}
