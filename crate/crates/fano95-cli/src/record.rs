//! The on-disk family record schema.
//!
//! Rationals are serialized as exact `"num/den"` strings (`/den` omitted
//! for integers) so the files stay float-free; field order is fixed and the
//! JSON output is byte-stable across runs.

use serde::{Deserialize, Serialize};

use fano95_core::search::{fibration_targets, find_chains, has_elliptic_fibration};
use fano95_core::{enumerate_families, BlowupChain, ChainEvent, FanoFamily};

/// One basket entry: `count` points of type `1/r(1,a,r-a)`.
#[derive(Serialize, Deserialize, Clone, Copy, PartialEq, Eq, Debug)]
pub struct BasketEntry {
    pub r: u32,
    pub a: u32,
    pub count: u32,
}

/// One blow-up event in a chain: the point blown up and the child events
/// performed on its exceptional divisor.
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct ChainEventRecord {
    pub r: u32,
    pub a: u32,
    pub children: Vec<ChainEventRecord>,
}

impl ChainEventRecord {
    fn from_event(event: &ChainEvent) -> Self {
        ChainEventRecord {
            r: event.target().r(),
            a: event.target().a(),
            children: event.children().iter().map(Self::from_event).collect(),
        }
    }
}

/// The full record of one family.
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct FamilyRecord {
    pub n: u32,
    /// All five coordinate weights `[1, a1, a2, a3, a4]`.
    pub weights: [u32; 5],
    pub degree: u32,
    /// `-K^3` as an exact `"num/den"` string.
    pub kcube: String,
    pub basket: Vec<BasketEntry>,
    /// Every zero-chain, as a forest of events.
    pub chains: Vec<Vec<ChainEventRecord>>,
    /// Recorded fibration base surfaces, as weight triples.
    pub targets: Vec<[u32; 3]>,
    pub has_fibration: bool,
}

impl FamilyRecord {
    pub fn from_family(family: &FanoFamily) -> Self {
        let chains = find_chains(family);
        FamilyRecord {
            n: family.n(),
            weights: family.weights().coordinate_weights(),
            degree: family.weights().degree(),
            kcube: family.kcube().to_text(),
            basket: family
                .basket()
                .iter()
                .map(|(s, count)| BasketEntry {
                    r: s.r(),
                    a: s.a(),
                    count,
                })
                .collect(),
            chains: chains.iter().map(chain_record).collect(),
            targets: fibration_targets(family),
            has_fibration: has_elliptic_fibration(family),
        }
    }
}

fn chain_record(chain: &BlowupChain) -> Vec<ChainEventRecord> {
    chain.roots().iter().map(ChainEventRecord::from_event).collect()
}

/// Builds the full database: one record per family, in entry order.
pub fn build_database(d_max: u32) -> Vec<FamilyRecord> {
    enumerate_families(d_max)
        .iter()
        .map(FamilyRecord::from_family)
        .collect()
}

/// Serializes the database in its canonical form: pretty JSON with a
/// trailing newline.
pub fn to_canonical_json(records: &[FamilyRecord]) -> String {
    let mut text = serde_json::to_string_pretty(records).expect("records serialize");
    text.push('\n');
    text
}
