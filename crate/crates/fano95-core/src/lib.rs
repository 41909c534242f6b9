//! Exact combinatorial geometry of the 95 families of quasismooth terminal
//! Fano weighted hypersurface threefolds.
//!
//! A general hypersurface of degree `d = a1 + a2 + a3 + a4` in the weighted
//! projective space `P(1,a1,a2,a3,a4)` with terminal singularities is a Fano
//! threefold, and exactly 95 weight four-tuples occur.  This crate
//! reconstructs that classification and the intersection-theoretic data that
//! drives it, entirely in exact rational arithmetic:
//!
//! * [`rational`] — arbitrary-precision rationals (no floats anywhere);
//! * [`weights`] — weight systems and the anticanonical degree
//!   `-K^3 = d / (a1 a2 a3 a4)`;
//! * [`singularity`] — terminal cyclic quotient types `1/r(1,a,r-a)` and
//!   their canonical normal form;
//! * [`monomials`] — weighted monomial (lattice knapsack) enumeration;
//! * [`families`] — quasismoothness filter and enumeration of the 95
//!   families with their standard entry numbers;
//! * [`basket`] — the multiset of quotient singularities of a general
//!   member;
//! * [`blowup`] — the Kawamata weighted blow-up of a terminal point:
//!   anticanonical drop, discrepancy, exceptional self-intersection, and
//!   induced child singularities;
//! * [`intersection`] — triple products of divisor classes on towers of
//!   such blow-ups, over an orthogonal pullback basis;
//! * [`search`] — exhaustive search for blow-up chains that drive `-K^3`
//!   to exactly zero (the anticanonical elliptic-fibration criterion).
//!
//! The crate is `no_std` (with `alloc`); all state is immutable after
//! construction and every operation is a pure function.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod basket;
pub mod blowup;
pub mod families;
pub mod intersection;
pub mod monomials;
pub mod rational;
pub mod search;
pub mod singularity;
pub mod weights;

pub use basket::Basket;
pub use blowup::{kawamata_blowup, BlowupResult};
pub use families::{enumerate_families, entry_number, FanoFamily, DEFAULT_DEGREE_BOUND};
pub use intersection::{anticanonical_class, triple_product, DivisorClass, TowerContext};
pub use rational::Rational;
pub use search::{
    classify_all, fibration_targets, find_chains, find_chains_over, has_elliptic_fibration,
    BlowupChain, ChainEvent, Classification,
};
pub use singularity::{normalize_quotient, QuotientSingularity};
pub use weights::WeightSystem;
