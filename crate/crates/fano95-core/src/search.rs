//! Exhaustive search for blow-up chains that drive `-K^3` to exactly zero.
//!
//! Starting from a family's basket, one may blow up any singular point and
//! then any quotient point appearing on an exceptional divisor, and so on;
//! each event lowers `-K^3` by its fixed positive drop.  A chain reaching
//! exactly zero is the anticanonical criterion for an elliptic fibration on
//! the top of the tower.  Families 1 and 2 are the curated exceptions whose
//! fibrations come from curve-centered constructions (projection from a
//! line on the quartic, and projection through the contracted double cover
//! for the quintic) rather than from such chains.
//!
//! Chains are recorded up to symmetry: singular points of equal type are
//! interchangeable for every tracked quantity, so a chain is a sorted
//! forest of events, and the number of distinct point assignments realizing
//! it is kept as its multiplicity.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::basket::Basket;
use crate::blowup::{kawamata_blowup, BlowupResult};
use crate::families::FanoFamily;
use crate::rational::Rational;
use crate::singularity::QuotientSingularity;

/// Entry numbers with no elliptic fibration at all.
pub const NO_FIBRATION_ENTRIES: [u32; 6] = [3, 60, 75, 84, 87, 93];

/// Entry numbers whose fibrations are centered on curves instead of
/// blow-up chains.
pub const CURVE_CENTER_FAMILIES: [u32; 2] = [1, 2];

/// One blow-up in a chain: the point blown up (an original basket entry or
/// a child of the parent event), its invariants, and the child points that
/// were blown up in turn.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChainEvent {
    target: QuotientSingularity,
    result: BlowupResult,
    children: Vec<ChainEvent>,
}

impl ChainEvent {
    /// An event that blows up `target` and leaves its children alone.
    pub fn leaf(target: QuotientSingularity) -> Self {
        ChainEvent {
            target,
            result: kawamata_blowup(target),
            children: Vec::new(),
        }
    }

    /// An event that blows up `target` and then the given events on its
    /// exceptional divisor.
    ///
    /// Panics unless the child events target distinct points of the
    /// exceptional divisor (each child point can be blown up at most once).
    pub fn with_children(target: QuotientSingularity, children: &[ChainEvent]) -> Self {
        let result = kawamata_blowup(target);
        let mut children = children.to_vec();
        children.sort_unstable();
        for pair in children.windows(2) {
            assert!(
                pair[0].target != pair[1].target,
                "child point blown up twice"
            );
        }
        for child in &children {
            assert!(
                result.children.contains(&child.target),
                "{} is not a point of the exceptional divisor over {target}",
                child.target
            );
        }
        ChainEvent {
            target,
            result,
            children,
        }
    }

    pub fn target(&self) -> QuotientSingularity {
        self.target
    }

    pub fn result(&self) -> &BlowupResult {
        &self.result
    }

    /// Child events, in canonical order.
    pub fn children(&self) -> &[ChainEvent] {
        &self.children
    }

    /// The total drop of this event and everything below it.
    pub fn total_drop(&self) -> Rational {
        let mut total = self.result.drop.clone();
        for child in &self.children {
            total += child.total_drop();
        }
        total
    }

    fn collect_preorder<'a>(&'a self, out: &mut Vec<&'a ChainEvent>) {
        out.push(self);
        for child in &self.children {
            child.collect_preorder(out);
        }
    }
}

impl fmt::Display for ChainEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.target)?;
        if !self.children.is_empty() {
            f.write_str(" -> [")?;
            for (i, child) in self.children.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{child}")?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}

impl PartialOrd for ChainEvent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ChainEvent {
    fn cmp(&self, other: &Self) -> Ordering {
        // The blow-up result is determined by the target, so the canonical
        // order compares targets and then subtrees.
        self.target
            .cmp(&other.target)
            .then_with(|| self.children.cmp(&other.children))
    }
}

/// A rooted forest of blow-up events over one family, with the running
/// `-K^3` after all events and the number of distinct point assignments
/// realizing the forest.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BlowupChain {
    roots: Vec<ChainEvent>,
    multiplicity: u128,
    running_kcube: Rational,
}

impl BlowupChain {
    /// Builds a chain over a variety with the given starting `-K^3`; roots
    /// are canonicalized and multiplicity defaults to 1.
    pub fn new(initial_kcube: &Rational, mut roots: Vec<ChainEvent>) -> Self {
        roots.sort_unstable();
        let total: Rational = roots.iter().map(ChainEvent::total_drop).sum();
        BlowupChain {
            running_kcube: initial_kcube.clone() - total,
            multiplicity: 1,
            roots,
        }
    }

    /// Root events in canonical order.
    pub fn roots(&self) -> &[ChainEvent] {
        &self.roots
    }

    /// Number of ways to assign the forest to actual points of the family
    /// (points of equal type are interchangeable).
    pub fn multiplicity(&self) -> u128 {
        self.multiplicity
    }

    /// `-K^3` after all events.
    pub fn running_kcube(&self) -> &Rational {
        &self.running_kcube
    }

    pub fn total_drop(&self) -> Rational {
        self.roots.iter().map(ChainEvent::total_drop).sum()
    }

    /// All events, parents before children.
    pub fn events(&self) -> impl Iterator<Item = &ChainEvent> {
        let mut flat = Vec::new();
        for root in &self.roots {
            root.collect_preorder(&mut flat);
        }
        flat.into_iter()
    }

    pub fn len(&self) -> usize {
        self.events().count()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }
}

impl fmt::Display for BlowupChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, root) in self.roots.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{root}")?;
        }
        write!(f, "}} (x{})", self.multiplicity)
    }
}

/// All expansions rooted at `s`: blow up `s`, then any sub-forest of its
/// descendants.  Finite because child indices strictly decrease.
fn tree_options(s: QuotientSingularity) -> Vec<ChainEvent> {
    let result = kawamata_blowup(s);
    let mut combos: Vec<Vec<ChainEvent>> = vec![Vec::new()];
    for &child in &result.children {
        let menu = tree_options(child);
        let mut extended = Vec::with_capacity(combos.len() * (menu.len() + 1));
        for combo in &combos {
            extended.push(combo.clone());
            for option in &menu {
                let mut next = combo.clone();
                next.push(option.clone());
                extended.push(next);
            }
        }
        combos = extended;
    }
    let mut out: Vec<ChainEvent> = combos
        .into_iter()
        .map(|mut children| {
            children.sort_unstable();
            ChainEvent {
                target: s,
                result: result.clone(),
                children,
            }
        })
        .collect();
    out.sort_unstable();
    out
}

/// One selectable item of the search: a fully expanded tree over a basket
/// type, shared multiplicity with the other trees over the same type.
struct Item {
    group: usize,
    event: ChainEvent,
    drop: Rational,
}

struct SearchState<'a> {
    /// Remaining multiplicity per basket type group.
    available: Vec<u32>,
    /// `-K^3` still to be consumed; kept nonnegative at all retained
    /// states.
    kcube_left: Rational,
    items: &'a [Item],
    /// Smallest drop among items from position i on (a safe lower bound
    /// for any further event).
    suffix_min: &'a [Rational],
    group_sizes: &'a [u32],
}

/// All chains over the basket whose cumulative drop equals `kcube`
/// exactly, deduplicated up to interchanging points of equal type.
pub fn find_chains_over(kcube: &Rational, basket: &Basket) -> Vec<BlowupChain> {
    let groups: Vec<(QuotientSingularity, u32)> = basket.iter().collect();
    let mut items: Vec<Item> = Vec::new();
    for (gi, &(s, _count)) in groups.iter().enumerate() {
        for event in tree_options(s) {
            let drop = event.total_drop();
            items.push(Item {
                group: gi,
                event,
                drop,
            });
        }
    }
    let mut suffix_min: Vec<Rational> = vec![Rational::zero(); items.len() + 1];
    for i in (0..items.len()).rev() {
        suffix_min[i] = if i + 1 < items.len() && suffix_min[i + 1] < items[i].drop {
            suffix_min[i + 1].clone()
        } else {
            items[i].drop.clone()
        };
    }
    let group_sizes: Vec<u32> = groups.iter().map(|&(_, c)| c).collect();
    let mut state = SearchState {
        available: group_sizes.clone(),
        kcube_left: kcube.clone(),
        items: &items,
        suffix_min: &suffix_min,
        group_sizes: &group_sizes,
    };
    let mut chosen: Vec<u32> = vec![0; items.len()];
    let mut out = Vec::new();
    dfs(&mut state, 0, &mut chosen, &mut out);
    out
}

fn dfs(state: &mut SearchState<'_>, pos: usize, chosen: &mut Vec<u32>, out: &mut Vec<BlowupChain>) {
    if state.kcube_left.is_zero() {
        out.push(assemble(state, chosen));
        return;
    }
    // kcube_left > 0 here: dead end unless some remaining item fits.
    if pos == state.items.len() || state.suffix_min[pos] > state.kcube_left {
        return;
    }
    let item = &state.items[pos];
    let group = item.group;
    let mut max_count = state.available[group];
    // Cap by how many copies fit in the remaining budget.
    let mut budget = state.kcube_left.clone();
    let mut fits = 0u32;
    while fits < max_count && item.drop <= budget {
        budget -= item.drop.clone();
        fits += 1;
    }
    max_count = fits;
    // count = 0 branch first, then increasing counts.
    dfs(state, pos + 1, chosen, out);
    for count in 1..=max_count {
        state.available[group] -= 1;
        state.kcube_left -= item.drop.clone();
        chosen[pos] = count;
        dfs(state, pos + 1, chosen, out);
    }
    if max_count > 0 {
        state.available[group] += max_count;
        let mut restore = Rational::zero();
        for _ in 0..max_count {
            restore += item.drop.clone();
        }
        state.kcube_left += restore;
        chosen[pos] = 0;
    }
}

fn assemble(state: &SearchState<'_>, chosen: &[u32]) -> BlowupChain {
    let mut roots = Vec::new();
    let mut multiplicity: u128 = 1;
    let mut remaining: Vec<u32> = state.group_sizes.to_vec();
    for (pos, &count) in chosen.iter().enumerate() {
        if count == 0 {
            continue;
        }
        let item = &state.items[pos];
        multiplicity *= binomial(remaining[item.group], count);
        remaining[item.group] -= count;
        for _ in 0..count {
            roots.push(item.event.clone());
        }
    }
    // Items are grouped by ascending basket type and sorted within each
    // group, so the roots are already canonical.
    debug_assert!(roots.windows(2).all(|w| w[0] <= w[1]));
    BlowupChain {
        roots,
        multiplicity,
        running_kcube: Rational::zero(),
    }
}

fn binomial(n: u32, k: u32) -> u128 {
    debug_assert!(k <= n);
    let mut result: u128 = 1;
    for i in 0..k as u128 {
        result = result * (n as u128 - i) / (i + 1);
    }
    result
}

/// All zero-chains of a family.
pub fn find_chains(family: &FanoFamily) -> Vec<BlowupChain> {
    find_chains_over(family.kcube(), family.basket())
}

/// Whether the family carries an elliptic fibration: a zero-chain exists,
/// or the family is one of the curated curve-centered exceptions.
pub fn has_elliptic_fibration(family: &FanoFamily) -> bool {
    CURVE_CENTER_FAMILIES.contains(&family.n()) || !find_chains(family).is_empty()
}

/// The classification outcome over a full enumeration.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Classification {
    /// Entry numbers with no zero-chain.
    pub no_chain: Vec<u32>,
    /// Entry numbers with no elliptic fibration (no zero-chain and not a
    /// curve-centered exception).
    pub no_fibration: Vec<u32>,
}

/// Runs the chain search over every family and partitions the entry
/// numbers.
pub fn classify_all(families: &[FanoFamily]) -> Classification {
    let mut result = Classification::default();
    for family in families {
        if find_chains(family).is_empty() {
            result.no_chain.push(family.n());
            if !CURVE_CENTER_FAMILIES.contains(&family.n()) {
                result.no_fibration.push(family.n());
            }
        }
    }
    result
}

/// Base surfaces of the fibrations constructed for this family, as weight
/// triples of weighted planes (the plane `P^2` appears as `(1,1,1)`).
///
/// This is a catalog of the classical constructions, not a computation:
/// families with a fibration always carry the projection to
/// `P(1,a1,a2)`; a fixed list of families has further recorded bases; the
/// six no-fibration families get an empty list.
pub fn fibration_targets(family: &FanoFamily) -> Vec<[u32; 3]> {
    // Recorded bases beyond the natural projection.
    const EXTRA_TARGETS: &[(u32, [u32; 3])] = &[
        (9, [1, 1, 3]),
        (17, [1, 1, 4]),
        (20, [1, 1, 4]),
        (26, [1, 1, 6]),
        (30, [1, 1, 4]),
        (31, [1, 1, 5]),
        (31, [1, 1, 6]),
        (36, [1, 1, 6]),
        (44, [1, 1, 3]),
        (49, [1, 3, 6]),
        (51, [1, 1, 6]),
        (64, [1, 1, 3]),
        (68, [1, 2, 3]),
        (69, [1, 3, 4]),
    ];
    let n = family.n();
    if NO_FIBRATION_ENTRIES.contains(&n) {
        return Vec::new();
    }
    if CURVE_CENTER_FAMILIES.contains(&n) {
        return vec![[1, 1, 1]];
    }
    let a = family.weights().weights();
    let mut targets = vec![[1, a[0], a[1]]];
    targets.extend(
        EXTRA_TARGETS
            .iter()
            .filter(|&&(entry, _)| entry == n)
            .map(|&(_, t)| t),
    );
    targets.sort_unstable();
    targets.dedup();
    targets
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::enumerate_families;

    fn sing(r: u32, a: u32) -> QuotientSingularity {
        QuotientSingularity::new(r, a).unwrap()
    }

    fn family(n: u32) -> FanoFamily {
        use std::sync::OnceLock;
        static FAMILIES: OnceLock<Vec<FanoFamily>> = OnceLock::new();
        FAMILIES
            .get_or_init(|| enumerate_families(crate::families::DEFAULT_DEGREE_BOUND))
            .iter()
            .find(|f| f.n() == n)
            .unwrap()
            .clone()
    }

    #[test]
    fn single_half_point_chain() {
        // Degree 12 in P(1,1,1,4,6): one 1/2(1,1,1) point, -K^3 = 1/2.
        let f = family(14);
        let chains = find_chains(&f);
        assert_eq!(chains.len(), 1);
        assert_eq!(chains[0].roots().len(), 1);
        assert_eq!(chains[0].roots()[0].target(), sing(2, 1));
        assert_eq!(chains[0].multiplicity(), 1);
        assert!(chains[0].running_kcube().is_zero());
    }

    #[test]
    fn chain_descending_into_exceptional_divisor() {
        // Degree 16 in P(1,1,4,5,6): blow up 1/5(1,1,4), then the
        // 1/4(1,1,3) point on its exceptional divisor.
        let f = family(31);
        let chains = find_chains(&f);
        let expected = ChainEvent::with_children(sing(5, 1), &[ChainEvent::leaf(sing(4, 1))]);
        assert!(chains
            .iter()
            .any(|c| c.roots() == core::slice::from_ref(&expected)));
    }

    #[test]
    fn two_chains_for_degree_nine() {
        // Degree 9 in P(1,1,2,3,3): either all three 1/3(1,1,2) points, or
        // the single 1/2(1,1,1) point.
        let f = family(9);
        let chains = find_chains(&f);
        assert_eq!(chains.len(), 2);
        let shapes: Vec<Vec<QuotientSingularity>> = chains
            .iter()
            .map(|c| c.events().map(|e| e.target()).collect())
            .collect();
        assert!(shapes.contains(&vec![sing(2, 1)]));
        assert!(shapes.contains(&vec![sing(3, 1), sing(3, 1), sing(3, 1)]));
    }

    #[test]
    fn no_chain_for_entry_sixty() {
        let f = family(60);
        assert!(find_chains(&f).is_empty());
        assert!(!has_elliptic_fibration(&f));
    }

    #[test]
    fn deep_chain_for_entry_fifty_six() {
        // 1/11(1,3,8) -> 1/8(1,3,5) -> 1/5(1,2,3):
        // 1/22 - 1/264 - 1/120 - 1/30 = 0.
        let f = family(56);
        let expected = ChainEvent::with_children(
            sing(11, 3),
            &[ChainEvent::with_children(
                sing(8, 3),
                &[ChainEvent::leaf(sing(5, 2))],
            )],
        );
        assert!(find_chains(&f)
            .iter()
            .any(|c| c.roots() == core::slice::from_ref(&expected)));
    }

    #[test]
    fn interchangeable_points_collapse_with_multiplicity() {
        // For a2 = a3 families the d/a2 points of type 1/a2(1,1,a2-1) are
        // interchangeable: one canonical chain carries the whole count.
        for n in [7u32, 11, 19] {
            let f = family(n);
            let a = f.weights().weights();
            let d_over_a2 = (f.weights().degree() / a[1]) as u128;
            let edge_type = sing(a[1], 1);
            assert_eq!(f.basket().count_of(edge_type) as u128, d_over_a2);
            let witnesses: Vec<BlowupChain> = find_chains(&f)
                .into_iter()
                .filter(|c| {
                    c.multiplicity() == d_over_a2
                        && c.roots().iter().any(|r| r.target() == edge_type)
                })
                .collect();
            assert!(!witnesses.is_empty(), "entry {n}");
        }
    }

    #[test]
    fn curated_exceptions() {
        let f1 = family(1);
        assert!(find_chains(&f1).is_empty());
        assert!(has_elliptic_fibration(&f1));
        let f3 = family(3);
        assert!(find_chains(&f3).is_empty());
        assert!(!has_elliptic_fibration(&f3));
    }

    #[test]
    fn target_catalog() {
        assert_eq!(
            fibration_targets(&family(26)),
            vec![[1, 1, 3], [1, 1, 6]]
        );
        assert_eq!(
            fibration_targets(&family(49)),
            vec![[1, 3, 5], [1, 3, 6]]
        );
        assert!(fibration_targets(&family(3)).is_empty());
        assert_eq!(fibration_targets(&family(1)), vec![[1, 1, 1]]);
        assert_eq!(fibration_targets(&family(18)), vec![[1, 2, 2]]);
    }
}
