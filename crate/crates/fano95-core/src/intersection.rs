//! Triple intersection products on towers of Kawamata blow-ups.
//!
//! Divisor classes on the top of a tower are written over the basis
//! `{D0, E1, ..., Ek}` where `D0` is the pullback of a base class and each
//! `Ei` is the full pullback of the `i`-th exceptional divisor.  Full
//! pullbacks of exceptionals from different stages are orthogonal: every
//! mixed triple monomial vanishes by the projection formula, so a triple
//! product reduces to the diagonal terms
//! `A0·B0·C0·D0^3 + sum_i Ai·Bi·Ci·Ei^3`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::rational::Rational;
use crate::search::BlowupChain;

/// Self-triple-products of the basis classes of one tower.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TowerContext {
    /// `D0^3`, typically `-K^3` of the base variety.
    pub d0_cube: Rational,
    /// `Ei^3` per exceptional class, in blow-up order.
    pub e_cubes: Vec<Rational>,
}

impl TowerContext {
    pub fn new(d0_cube: Rational, e_cubes: Vec<Rational>) -> Self {
        TowerContext { d0_cube, e_cubes }
    }

    /// The context of a chain's tower over its family: `D0^3` is the
    /// family's `-K^3` and each event contributes the `E^3` of its blow-up.
    pub fn for_chain(family_kcube: &Rational, chain: &BlowupChain) -> Self {
        TowerContext {
            d0_cube: family_kcube.clone(),
            e_cubes: chain
                .events()
                .map(|event| event.result().e_cube.clone())
                .collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.e_cubes.len() + 1
    }
}

/// A divisor class `c0·D0 + sum_i c_i·Ei` on a tower.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DivisorClass {
    /// Coefficient of `D0`.
    pub c0: Rational,
    /// Coefficients of `E1..Ek`, matching the context order.
    pub c: Vec<Rational>,
}

impl DivisorClass {
    pub fn new(c0: Rational, c: Vec<Rational>) -> Self {
        DivisorClass { c0, c }
    }

    /// Parses a coefficient vector `(c0, c1, ..., ck)`.
    pub fn from_coefficients(coeffs: &[Rational]) -> Option<Self> {
        let (first, rest) = coeffs.split_first()?;
        Some(DivisorClass {
            c0: first.clone(),
            c: rest.to_vec(),
        })
    }

    pub fn scale(&self, s: &Rational) -> DivisorClass {
        DivisorClass {
            c0: &self.c0 * s,
            c: self.c.iter().map(|ci| ci * s).collect(),
        }
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.c0)?;
        for ci in &self.c {
            write!(f, ",{ci}")?;
        }
        Ok(())
    }
}

/// A class does not match the rank of the tower context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionMismatch {
    pub expected: usize,
    pub got: usize,
}

impl fmt::Display for DimensionMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "divisor class has {} coefficients, context expects {}",
            self.got, self.expected
        )
    }
}

impl core::error::Error for DimensionMismatch {}

/// The exact triple product `A·B·C` on the tower.
pub fn triple_product(
    a: &DivisorClass,
    b: &DivisorClass,
    c: &DivisorClass,
    ctx: &TowerContext,
) -> Result<Rational, DimensionMismatch> {
    for class in [a, b, c] {
        if class.c.len() != ctx.e_cubes.len() {
            return Err(DimensionMismatch {
                expected: ctx.rank(),
                got: class.c.len() + 1,
            });
        }
    }
    let mut total = &(&a.c0 * &b.c0) * &(&c.c0 * &ctx.d0_cube);
    for i in 0..ctx.e_cubes.len() {
        total += &(&a.c[i] * &b.c[i]) * &(&c.c[i] * &ctx.e_cubes[i]);
    }
    Ok(total)
}

/// The anticanonical class of the top of a chain's tower: pulling `-K` up
/// through each blow-up subtracts `discrepancy · E`, giving coefficients
/// `(1, -1/r_1, ..., -1/r_k)` over the chain's exceptionals.
pub fn anticanonical_class(chain: &BlowupChain) -> DivisorClass {
    DivisorClass {
        c0: Rational::one(),
        c: chain
            .events()
            .map(|event| -&event.result().discrepancy)
            .collect(),
    }
}

/// Convenience: the anticanonical class for a rank-1 tower (no blow-ups).
pub fn base_anticanonical() -> DivisorClass {
    DivisorClass {
        c0: Rational::one(),
        c: vec![],
    }
}
