//! The fast gamma path: build a flag chain from a minimal flag building
//! set and accumulate one increment per added element,
//!     gamma(B + I) = gamma(B) + t * gamma((B+I)|_I) * gamma((B+I)/I),
//! recursing on strictly smaller ground sets with memoization. Cross-
//! checked against the nested-set oracle throughout the test suites.

use crate::buildset::{binary_decomposition, BuildingSet, Subset};
use crate::error::{Error, Result};
use crate::nested;
use crate::poly::IntPolynomial;
use std::collections::HashMap;
use std::sync::RwLock;

/// Scan direction used when picking the next chain element; the resulting
/// chains differ but the accumulated gamma must not.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanOrder {
    Forward,
    Reverse,
}

/// Shared gamma cache keyed on the order-compacted element list (ground
/// labels relabeled to 1..m preserving order; no isomorphism
/// canonicalization). Concurrent lookups with insert-if-absent semantics:
/// duplicated computation is fine, torn values are not.
#[derive(Default)]
pub struct GammaMemo {
    map: RwLock<HashMap<Box<[u64]>, IntPolynomial>>,
}

impl GammaMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.read().expect("memo lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn get(&self, key: &[u64]) -> Option<IntPolynomial> {
        self.map.read().expect("memo lock poisoned").get(key).cloned()
    }

    fn insert(&self, key: Box<[u64]>, value: IntPolynomial) {
        self.map.write().expect("memo lock poisoned").entry(key).or_insert(value);
    }

    /// All cached entries, for probabilistic cross-checks against the
    /// oracle.
    pub fn entries(&self) -> Vec<(Vec<u64>, IntPolynomial)> {
        self.map
            .read()
            .expect("memo lock poisoned")
            .iter()
            .map(|(k, v)| (k.to_vec(), v.clone()))
            .collect()
    }
}

fn compact_mask(mask: u64, ground: u64) -> u64 {
    let mut out = 0u64;
    let mut g = ground;
    let mut pos = 0u32;
    while g != 0 {
        let bit = g & g.wrapping_neg();
        if mask & bit != 0 {
            out |= 1 << pos;
        }
        pos += 1;
        g &= g - 1;
    }
    out
}

/// Memo key: element masks after relabeling the ground labels to 1..m in
/// order. Monotone relabeling preserves the canonical element order.
pub fn memo_key(b: &BuildingSet) -> Box<[u64]> {
    let ground = b.ground().bits();
    b.elements().iter().map(|e| compact_mask(e.bits(), ground)).collect()
}

/// Rebuilds the building set a memo key stands for (ground = {1..m}).
pub fn building_set_from_memo_key(key: &[u64]) -> Result<BuildingSet> {
    let ground = key.iter().fold(0u64, |acc, &m| acc | m);
    BuildingSet::new(Subset::from_bits(ground), key.iter().map(|&m| Subset::from_bits(m)))
}

/// A minimal flag building set contained in a connected flag building
/// set. Prefers the comb of a traversal order v1..vn with every prefix a
/// member (deterministic: smallest viable label first, exhaustive
/// backtracking); falls back to the binary decomposition of the ground
/// set when no such order exists.
pub fn initial_comb(b: &BuildingSet) -> Result<BuildingSet> {
    if !b.is_connected() {
        return Err(Error::Domain("initial comb requires a connected building set".into()));
    }
    let ground = b.ground();
    let mut chain: Vec<Subset> = Vec::with_capacity(ground.card());
    let mut budget = 200_000usize;
    if comb_order_search(b, Subset::EMPTY, &mut chain, &mut budget) {
        let mut elements: Vec<Subset> = ground.labels().map(Subset::singleton).collect();
        elements.extend(chain.iter().copied().filter(|p| p.card() >= 2));
        return BuildingSet::new(ground, elements);
    }
    let decomposition = binary_decomposition(b, ground)?;
    BuildingSet::new(ground, decomposition.node_set())
}

fn comb_order_search(
    b: &BuildingSet,
    prefix: Subset,
    chain: &mut Vec<Subset>,
    budget: &mut usize,
) -> bool {
    if prefix == b.ground() {
        return true;
    }
    if *budget == 0 {
        return false;
    }
    *budget -= 1;
    for v in b.ground().minus(prefix).labels() {
        let ext = prefix.union(Subset::singleton(v));
        if b.contains(ext) {
            chain.push(ext);
            if comb_order_search(b, ext, chain, budget) {
                return true;
            }
            chain.pop();
        }
    }
    false
}

/// Whether current + i is still a flag building set: i needs a disjoint
/// two-member split in current, and every union with an intersecting
/// member must already be present (or be i itself).
fn addition_keeps_flag(current: &BuildingSet, i: Subset) -> bool {
    let has_split = current
        .elements()
        .iter()
        .any(|&d| d.is_proper_subset_of(i) && current.contains(i.minus(d)));
    if !has_split {
        return false;
    }
    current.elements().iter().all(|&j| {
        if !j.intersects(i) {
            return true;
        }
        let u = i.union(j);
        u == i || u == j || current.contains(u)
    })
}

pub fn flag_chain(base: &BuildingSet, target: &BuildingSet) -> Result<Vec<Subset>> {
    flag_chain_with(base, target, ScanOrder::Forward)
}

/// Orders the members of target - base so that every prefix extension of
/// base stays a flag building set. Greedy: scan candidates in canonical
/// (cardinality, bits) order, or reversed, and take the first that keeps
/// flagness; for connected flag base and target some candidate always
/// qualifies, so exhaustion is a bug trap, not an expected path.
pub fn flag_chain_with(
    base: &BuildingSet,
    target: &BuildingSet,
    order: ScanOrder,
) -> Result<Vec<Subset>> {
    if base.ground() != target.ground() {
        return Err(Error::Domain("base and target must share a ground set".into()));
    }
    if !base.is_connected() || !target.is_connected() {
        return Err(Error::Domain("flag chains need connected building sets".into()));
    }
    if base.elements().iter().any(|&e| !target.contains(e)) {
        return Err(Error::Domain("base is not contained in target".into()));
    }
    let mut remaining: Vec<Subset> = target
        .elements()
        .iter()
        .copied()
        .filter(|&e| !base.contains(e))
        .collect();
    let mut current = base.clone();
    let mut additions = Vec::with_capacity(remaining.len());
    while !remaining.is_empty() {
        let found = match order {
            ScanOrder::Forward => (0..remaining.len()).find(|&k| addition_keeps_flag(&current, remaining[k])),
            ScanOrder::Reverse => (0..remaining.len()).rev().find(|&k| addition_keeps_flag(&current, remaining[k])),
        };
        let Some(k) = found else {
            return Err(Error::Internal(format!(
                "flag chain stuck with {} elements remaining",
                remaining.len()
            )));
        };
        let i = remaining.remove(k);
        current = current.with_element(i);
        additions.push(i);
    }
    Ok(additions)
}

pub fn gamma_incremental(b: &BuildingSet, memo: &GammaMemo) -> Result<IntPolynomial> {
    gamma_incremental_with(b, memo, ScanOrder::Forward)
}

/// Gamma-polynomial of a building set. Flag building sets go through the
/// incremental chain engine; everything else is routed to the nested-set
/// oracle.
pub fn gamma_incremental_with(
    b: &BuildingSet,
    memo: &GammaMemo,
    order: ScanOrder,
) -> Result<IntPolynomial> {
    if b.ground().is_empty() {
        return Ok(IntPolynomial::one());
    }
    if !b.is_flag() {
        return nested::gamma_oracle(b);
    }
    gamma_flag(b, memo, order)
}

fn gamma_flag(b: &BuildingSet, memo: &GammaMemo, order: ScanOrder) -> Result<IntPolynomial> {
    let key = memo_key(b);
    if let Some(hit) = memo.get(&key) {
        return Ok(hit);
    }
    let result = if !b.is_connected() {
        // product over the connected blocks
        let mut acc = IntPolynomial::one();
        for &block in b.b_max() {
            acc = acc.mul(&gamma_flag(&b.restriction(block)?, memo, order)?);
        }
        acc
    } else if b.len() == 2 * b.ground().card() - 1 {
        // minimal flag building set
        IntPolynomial::one()
    } else {
        let base = initial_comb(b)?;
        let additions = flag_chain_with(&base, b, order)?;
        let mut current = base;
        let mut gamma = IntPolynomial::one();
        for i in additions {
            current = current.with_element(i);
            let restr = current.restriction(i)?;
            let contr = current.contraction(i)?;
            let inc = gamma_flag(&restr, memo, order)?
                .mul(&gamma_flag(&contr, memo, order)?)
                .shift_up(1);
            if !inc.is_nonnegative() {
                return Err(Error::Internal(format!(
                    "negative gamma increment {inc} when adding {i}"
                )));
            }
            gamma = gamma.add(&inc);
        }
        gamma
    };
    memo.insert(key, result.clone());
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::buildset::graphical_building_set;
    use crate::moves::LabeledGraph;

    fn b_of(g: &LabeledGraph) -> BuildingSet {
        graphical_building_set(g).unwrap()
    }

    fn sub(labels: &[usize]) -> Subset {
        Subset::from_labels(labels).unwrap()
    }

    fn poly(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(coeffs.to_vec())
    }

    #[test]
    fn comb_of_path3() {
        let comb = initial_comb(&b_of(&LabeledGraph::path(3))).unwrap();
        let mut expect = vec![sub(&[1]), sub(&[2]), sub(&[3]), sub(&[1, 2]), sub(&[1, 2, 3])];
        expect.sort_by_key(|s| s.canonical_key());
        assert_eq!(comb.elements(), expect.as_slice());
    }

    #[test]
    fn comb_of_path2_is_itself() {
        let b = b_of(&LabeledGraph::path(2));
        assert_eq!(initial_comb(&b).unwrap(), b);
    }

    #[test]
    fn comb_of_k3() {
        let comb = initial_comb(&b_of(&LabeledGraph::complete(3))).unwrap();
        assert_eq!(comb.len(), 2 * 3 - 1, "minimal flag size");
        let mut expect = vec![sub(&[1]), sub(&[2]), sub(&[3]), sub(&[1, 2]), sub(&[1, 2, 3])];
        expect.sort_by_key(|s| s.canonical_key());
        assert_eq!(comb.elements(), expect.as_slice());
    }

    #[test]
    fn comb_falls_back_without_prefix_order() {
        // {12}, {34} force a pairing no prefix order can follow
        let b = BuildingSet::new(
            sub(&[1, 2, 3, 4]),
            vec![
                sub(&[1]),
                sub(&[2]),
                sub(&[3]),
                sub(&[4]),
                sub(&[1, 2]),
                sub(&[3, 4]),
                sub(&[1, 2, 3]),
                sub(&[1, 2, 3, 4]),
            ],
        )
        .unwrap();
        assert!(b.is_flag());
        let comb = initial_comb(&b).unwrap();
        assert_eq!(comb.len(), 2 * 4 - 1);
        assert!(comb.is_flag());
        assert!(comb.elements().iter().all(|&e| b.contains(e)));
    }

    #[test]
    fn chain_path3() {
        let target = b_of(&LabeledGraph::path(3));
        let base = initial_comb(&target).unwrap();
        assert_eq!(flag_chain(&base, &target).unwrap(), vec![sub(&[2, 3])]);
    }

    #[test]
    fn chain_k3_scan_order() {
        let target = b_of(&LabeledGraph::complete(3));
        let base = initial_comb(&target).unwrap();
        assert_eq!(flag_chain(&base, &target).unwrap(), vec![sub(&[1, 3]), sub(&[2, 3])]);
    }

    #[test]
    fn chain_of_equal_sets_is_empty() {
        let b = b_of(&LabeledGraph::path(4));
        assert!(flag_chain(&b, &b).unwrap().is_empty());
    }

    #[test]
    fn chain_rejects_non_subset() {
        let p3 = b_of(&LabeledGraph::path(3));
        let k3 = b_of(&LabeledGraph::complete(3));
        assert!(flag_chain(&k3, &p3).is_err());
    }

    #[test]
    fn gamma_examples() {
        let memo = GammaMemo::new();
        assert_eq!(gamma_incremental(&b_of(&LabeledGraph::path(2)), &memo).unwrap(), poly(&[1]));
        assert_eq!(
            gamma_incremental(&b_of(&LabeledGraph::complete(3)), &memo).unwrap(),
            poly(&[1, 2])
        );
        assert_eq!(gamma_incremental(&b_of(&LabeledGraph::path(4)), &memo).unwrap(), poly(&[1, 3]));
    }

    #[test]
    fn engine_matches_oracle_on_small_graphs() {
        let memo = GammaMemo::new();
        let graphs = vec![
            LabeledGraph::path(4),
            LabeledGraph::star(5),
            LabeledGraph::complete(4),
            LabeledGraph::with_edges(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]).unwrap(),
            LabeledGraph::with_edges(4, &[(1, 2), (3, 4)]).unwrap(),
        ];
        for g in graphs {
            let b = b_of(&g);
            assert_eq!(
                gamma_incremental(&b, &memo).unwrap(),
                nested::gamma_oracle(&b).unwrap(),
                "graph {g:?}"
            );
        }
    }

    #[test]
    fn scan_order_does_not_change_gamma() {
        for g in [LabeledGraph::complete(4), LabeledGraph::star(5)] {
            let b = b_of(&g);
            let fwd = gamma_incremental_with(&b, &GammaMemo::new(), ScanOrder::Forward).unwrap();
            let rev = gamma_incremental_with(&b, &GammaMemo::new(), ScanOrder::Reverse).unwrap();
            assert_eq!(fwd, rev);
        }
    }

    #[test]
    fn memo_key_round_trip() {
        let b = b_of(&LabeledGraph::path(3));
        let shifted = b.contraction(sub(&[1])).unwrap(); // ground {2,3}
        let key = memo_key(&shifted);
        let back = building_set_from_memo_key(&key).unwrap();
        assert_eq!(back.ground(), sub(&[1, 2]));
        assert_eq!(back.len(), shifted.len());
    }
}
