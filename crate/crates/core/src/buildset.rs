//! Building sets as first-class values: construction from graphs, the
//! closure axioms, restriction, contraction, flagness, binary
//! decompositions, and block products.

use crate::error::{Error, Result};
use crate::moves::LabeledGraph;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

/// A subset of a ground set of at most 64 labels, stored as a bit mask.
/// Label k (1-based) occupies bit k-1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    pub fn singleton(label: usize) -> Self {
        debug_assert!((1..=64).contains(&label));
        Subset(1u64 << (label - 1))
    }

    pub fn from_labels(labels: &[usize]) -> Result<Self> {
        let mut bits = 0u64;
        for &l in labels {
            if !(1..=64).contains(&l) {
                return Err(Error::TooManyLabels(l));
            }
            bits |= 1 << (l - 1);
        }
        Ok(Subset(bits))
    }

    /// The full set {1, ..., n}.
    pub fn full(n: usize) -> Result<Self> {
        if n > 64 {
            return Err(Error::TooManyLabels(n));
        }
        Ok(Subset(if n == 64 { u64::MAX } else { (1u64 << n) - 1 }))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn card(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, label: usize) -> bool {
        label >= 1 && label <= 64 && self.0 & (1 << (label - 1)) != 0
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersect(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn minus(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset_of(self, other: Subset) -> bool {
        self.is_subset_of(other) && self != other
    }

    pub fn intersects(self, other: Subset) -> bool {
        self.0 & other.0 != 0
    }

    pub fn labels(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let l = bits.trailing_zeros() as usize + 1;
                bits &= bits - 1;
                Some(l)
            }
        })
    }

    pub fn smallest_label(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize + 1)
        }
    }

    /// Canonical element order used throughout: cardinality, then bit
    /// pattern.
    pub fn canonical_key(self) -> (usize, u64) {
        (self.card(), self.0)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, l) in self.labels().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "}}")
    }
}

/// Serialized form of a building set: ground labels plus element label
/// lists.
#[derive(Serialize, Deserialize)]
struct BuildingSetJson {
    ground: Vec<usize>,
    elements: Vec<Vec<usize>>,
}

/// A building set: a family of nonempty subsets of a ground set that
/// contains every singleton and is closed under unions of intersecting
/// members. Immutable after construction; elements are kept sorted by
/// (cardinality, bit pattern).
#[derive(Debug, Clone)]
pub struct BuildingSet {
    ground: Subset,
    elements: Vec<Subset>,
    b_max: Vec<Subset>,
    flag: OnceLock<bool>,
}

impl PartialEq for BuildingSet {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.elements == other.elements
    }
}

impl Eq for BuildingSet {}

/// Checks the two building-set axioms for an arbitrary family on `ground`:
/// all singletons present, and unions of intersecting members present.
/// Members must be nonempty subsets of the ground set.
pub fn is_building_set(candidate: &[Subset], ground: Subset) -> bool {
    let set: HashSet<u64> = candidate.iter().map(|s| s.bits()).collect();
    for l in ground.labels() {
        if !set.contains(&Subset::singleton(l).bits()) {
            return false;
        }
    }
    for s in candidate {
        if s.is_empty() || !s.is_subset_of(ground) {
            return false;
        }
    }
    for (i, &a) in candidate.iter().enumerate() {
        for &b in &candidate[i + 1..] {
            if a.intersects(b) && !set.contains(&a.union(b).bits()) {
                return false;
            }
        }
    }
    true
}

impl BuildingSet {
    /// Validating constructor. Duplicate elements are merged.
    pub fn new(ground: Subset, elements: impl IntoIterator<Item = Subset>) -> Result<Self> {
        let mut elems: Vec<Subset> = elements.into_iter().collect();
        elems.sort_by_key(|s| s.canonical_key());
        elems.dedup();
        if !is_building_set(&elems, ground) {
            return Err(Error::Domain(format!(
                "not a building set on {ground}: closure or singleton axiom violated"
            )));
        }
        Ok(Self::new_unchecked(ground, elems))
    }

    /// Internal constructor for families already known to satisfy the
    /// axioms (restriction, contraction, graphical construction). Elements
    /// must be sorted by canonical key and deduplicated.
    fn new_unchecked(ground: Subset, elements: Vec<Subset>) -> Self {
        debug_assert!(is_building_set(&elements, ground));
        let mut b_max: Vec<Subset> = Vec::new();
        // elements are sorted by cardinality, so scan from the largest down
        for &e in elements.iter().rev() {
            if !b_max.iter().any(|m| e.is_subset_of(*m)) {
                b_max.push(e);
            }
        }
        b_max.sort_by_key(|s| s.canonical_key());
        debug_assert_eq!(
            b_max.iter().fold(Subset::EMPTY, |acc, m| acc.union(*m)),
            ground,
            "maximal elements must cover the ground set"
        );
        debug_assert!(
            b_max
                .iter()
                .enumerate()
                .all(|(i, a)| b_max[i + 1..].iter().all(|b| !a.intersects(*b))),
            "maximal elements must be pairwise disjoint"
        );
        BuildingSet { ground, elements, b_max, flag: OnceLock::new() }
    }

    pub fn ground(&self) -> Subset {
        self.ground
    }

    pub fn elements(&self) -> &[Subset] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn b_max(&self) -> &[Subset] {
        &self.b_max
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.elements
            .binary_search_by_key(&s.canonical_key(), |e| e.canonical_key())
            .is_ok()
    }

    pub fn is_connected(&self) -> bool {
        !self.ground.is_empty() && self.contains(self.ground)
    }

    /// Dimension of the associated nestohedron: n - |B_max|.
    pub fn dimension(&self) -> usize {
        self.ground.card() - self.b_max.len()
    }

    /// A building set is flag iff every non-singleton member splits as a
    /// disjoint union of two members. The result is computed once and
    /// cached.
    pub fn is_flag(&self) -> bool {
        *self.flag.get_or_init(|| {
            self.elements
                .iter()
                .filter(|e| e.card() >= 2)
                .all(|&e| self.find_split(e).is_some())
        })
    }

    /// Finds the canonical disjoint two-member split of `i`, if any:
    /// among all splits {d1, d2} with d1 ∪ d2 = i, d1 ∩ d2 = ∅, picks the
    /// one whose larger part is least under (cardinality, bits).
    fn find_split(&self, i: Subset) -> Option<(Subset, Subset)> {
        let mut best: Option<(Subset, Subset)> = None;
        for &d in &self.elements {
            if d.is_proper_subset_of(i) {
                let rest = i.minus(d);
                if self.contains(rest) {
                    let (small, large) = if d.canonical_key() <= rest.canonical_key() {
                        (d, rest)
                    } else {
                        (rest, d)
                    };
                    let better = match best {
                        None => true,
                        Some((bs, bl)) => {
                            (large.canonical_key(), small.canonical_key())
                                < (bl.canonical_key(), bs.canonical_key())
                        }
                    };
                    if better {
                        best = Some((small, large));
                    }
                }
            }
        }
        best
    }

    /// B restricted to i: all members contained in i, a building set on i.
    pub fn restriction(&self, i: Subset) -> Result<BuildingSet> {
        if !i.is_subset_of(self.ground) {
            return Err(Error::Domain(format!(
                "restriction set {i} not contained in ground {}",
                self.ground
            )));
        }
        let elems: Vec<Subset> = self.elements.iter().copied().filter(|e| e.is_subset_of(i)).collect();
        Ok(BuildingSet::new_unchecked(i, elems))
    }

    /// B contracted by i: {J - (J ∩ i) | J ∈ B, J ⊄ i} on ground - i.
    /// Surviving labels are kept unchanged (no recompaction).
    pub fn contraction(&self, i: Subset) -> Result<BuildingSet> {
        if !self.contains(i) {
            return Err(Error::Domain(format!("contraction set {i} is not a member")));
        }
        let mut elems: Vec<Subset> = self
            .elements
            .iter()
            .filter(|j| !j.is_subset_of(i))
            .map(|j| j.minus(i))
            .collect();
        elems.sort_by_key(|s| s.canonical_key());
        elems.dedup();
        Ok(BuildingSet::new_unchecked(self.ground.minus(i), elems))
    }

    /// The building set extended by one element, for chain construction.
    /// The caller is responsible for the result satisfying the axioms
    /// (checked in debug builds).
    pub(crate) fn with_element(&self, i: Subset) -> BuildingSet {
        debug_assert!(!self.contains(i));
        let mut elems = self.elements.clone();
        let pos = elems
            .binary_search_by_key(&i.canonical_key(), |e| e.canonical_key())
            .unwrap_err();
        elems.insert(pos, i);
        BuildingSet::new_unchecked(self.ground, elems)
    }

    /// JSON export: {"ground": [labels], "elements": [[labels], ...]}.
    pub fn to_json(&self) -> String {
        let json = BuildingSetJson {
            ground: self.ground.labels().collect(),
            elements: self.elements.iter().map(|e| e.labels().collect()).collect(),
        };
        serde_json::to_string(&json).expect("building set serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<BuildingSet> {
        let json: BuildingSetJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("building set JSON: {e}")))?;
        let ground = Subset::from_labels(&json.ground)?;
        let mut elements = Vec::with_capacity(json.elements.len());
        for labels in &json.elements {
            if labels.is_empty() {
                return Err(Error::Domain("building set elements must be nonempty".into()));
            }
            elements.push(Subset::from_labels(labels)?);
        }
        BuildingSet::new(ground, elements)
    }
}

/// The graphical building set B(G): all vertex subsets inducing connected
/// subgraphs. Its maximal elements are the connected components of G.
pub fn graphical_building_set(g: &LabeledGraph) -> Result<BuildingSet> {
    let n = g.vertex_count();
    if n == 0 || n > 64 {
        return Err(Error::TooManyLabels(n));
    }
    let mut elems = g.connected_vertex_sets();
    elems.sort_by_key(|s| s.canonical_key());
    Ok(BuildingSet::new_unchecked(Subset::full(n)?, elems))
}

/// A binary decomposition witnessing flagness: a minimal flag building set
/// on `root` drawn from the ambient building set, laid out as a binary
/// tree where each non-singleton node is the disjoint union of its two
/// children.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionTree {
    pub root: Subset,
    /// (node, left child, right child); children ordered by (cardinality
    /// descending, bits ascending). Singletons do not appear as nodes here.
    pub splits: Vec<(Subset, Subset, Subset)>,
}

impl DecompositionTree {
    /// All node subsets, including singleton leaves.
    pub fn node_set(&self) -> Vec<Subset> {
        let mut nodes: Vec<Subset> = self.root.labels().map(Subset::singleton).collect();
        for &(node, _, _) in &self.splits {
            nodes.push(node);
        }
        nodes.sort_by_key(|s| s.canonical_key());
        nodes.dedup();
        nodes
    }

    /// Structural validity: each listed node splits into its two disjoint
    /// children, every node belongs to `ambient`, and the node set has the
    /// binary-tree cardinality 2n-1.
    pub fn validate(&self, ambient: &BuildingSet) -> Result<()> {
        let nodes = self.node_set();
        if nodes.len() != 2 * self.root.card() - 1 {
            return Err(Error::Internal(format!(
                "decomposition of {} has {} nodes, expected {}",
                self.root,
                nodes.len(),
                2 * self.root.card() - 1
            )));
        }
        for &n in &nodes {
            if !ambient.contains(n) {
                return Err(Error::Internal(format!(
                    "decomposition node {n} missing from ambient building set"
                )));
            }
        }
        let split_of: std::collections::HashMap<Subset, (Subset, Subset)> =
            self.splits.iter().map(|&(n, a, b)| (n, (a, b))).collect();
        for &n in &nodes {
            if n.card() >= 2 {
                let Some(&(a, b)) = split_of.get(&n) else {
                    return Err(Error::Internal(format!("non-singleton node {n} has no split")));
                };
                if a.intersects(b) || a.union(b) != n || a.is_empty() || b.is_empty() {
                    return Err(Error::Internal(format!(
                        "invalid split of {n} into {a} and {b}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Deterministic binary decomposition of a member `i` of a flag building
/// set: at each node the split whose larger part is least under
/// (cardinality, bits) is chosen.
pub fn binary_decomposition(b: &BuildingSet, i: Subset) -> Result<DecompositionTree> {
    if !b.contains(i) {
        return Err(Error::Domain(format!("{i} is not a member of the building set")));
    }
    let mut splits = Vec::new();
    let mut stack = vec![i];
    while let Some(node) = stack.pop() {
        if node.card() < 2 {
            continue;
        }
        let Some((small, large)) = b.find_split(node) else {
            return Err(Error::Domain(format!(
                "{node} has no disjoint two-member split: building set is not flag"
            )));
        };
        // children ordered by (cardinality descending, bits ascending)
        let (c1, c2) = if (std::cmp::Reverse(large.card()), large.bits())
            <= (std::cmp::Reverse(small.card()), small.bits())
        {
            (large, small)
        } else {
            (small, large)
        };
        splits.push((node, c1, c2));
        stack.push(c2);
        stack.push(c1);
    }
    Ok(DecompositionTree { root: i, splits })
}

/// A decomposition of `i` that contains `j` as a node, built by repeated
/// bipartition of the collection {j} ∪ singletons(i - j): flagness
/// guarantees each collection of disjoint members whose union is a member
/// splits into two sub-collections with member unions.
pub fn decomposition_containing(b: &BuildingSet, i: Subset, j: Subset) -> Result<DecompositionTree> {
    if !b.is_flag() {
        return Err(Error::Domain("building set is not flag".into()));
    }
    if !b.contains(i) || !b.contains(j) || !j.is_proper_subset_of(i) {
        return Err(Error::Domain(format!(
            "need members j ⊊ i, got i = {i}, j = {j}"
        )));
    }
    let mut parts: Vec<Subset> = vec![j];
    parts.extend(i.minus(j).labels().map(Subset::singleton));
    let mut splits = Vec::new();
    split_collection(b, i, &parts, &mut splits)?;
    // j itself still needs a decomposition below it
    let sub = binary_decomposition(b, j)?;
    splits.extend(sub.splits);
    let tree = DecompositionTree { root: i, splits };
    tree.validate(b)?;
    Ok(tree)
}

/// Recursively bipartitions a collection of disjoint members whose union
/// `whole` lies in `b`, recording one split per recursion level. Scans
/// bipartitions in ascending index-mask order for determinism.
fn split_collection(
    b: &BuildingSet,
    whole: Subset,
    parts: &[Subset],
    splits: &mut Vec<(Subset, Subset, Subset)>,
) -> Result<()> {
    if parts.len() <= 1 {
        return Ok(());
    }
    let m = parts.len();
    // fix parts[0] on the left side so each bipartition is seen once
    for mask in 0..(1u64 << (m - 1)) {
        let mut left = parts[0];
        let mut right = Subset::EMPTY;
        let mut left_parts = vec![parts[0]];
        let mut right_parts = Vec::new();
        for (k, &p) in parts.iter().enumerate().skip(1) {
            if mask & (1 << (k - 1)) != 0 {
                left = left.union(p);
                left_parts.push(p);
            } else {
                right = right.union(p);
                right_parts.push(p);
            }
        }
        if right.is_empty() || !b.contains(left) || !b.contains(right) {
            continue;
        }
        let (c1, c2) = if (std::cmp::Reverse(left.card()), left.bits())
            <= (std::cmp::Reverse(right.card()), right.bits())
        {
            (left, right)
        } else {
            (right, left)
        };
        splits.push((whole, c1, c2));
        split_collection(b, left, &left_parts, splits)?;
        split_collection(b, right, &right_parts, splits)?;
        return Ok(());
    }
    Err(Error::Internal(format!(
        "no bipartition of disjoint members with union {whole}: building set is not flag"
    )))
}

/// Composes building sets block-wise: `b` on m labels (in ascending label
/// order) selects which blocks merge; each part i is relabeled onto a
/// consecutive block of the new ground set. For connected parts this
/// produces the building set of the product polytope.
pub fn product_building_set(b: &BuildingSet, parts: &[BuildingSet]) -> Result<BuildingSet> {
    let positions: Vec<usize> = b.ground().labels().collect();
    if positions.len() != parts.len() {
        return Err(Error::Domain(format!(
            "outer building set has {} labels but {} parts were given",
            positions.len(),
            parts.len()
        )));
    }
    for p in parts {
        if !p.is_connected() {
            return Err(Error::Domain("all parts must be connected building sets".into()));
        }
    }
    let total: usize = parts.iter().map(|p| p.ground().card()).sum();
    if total > 64 {
        return Err(Error::TooManyLabels(total));
    }
    // block i occupies labels offset+1 ..= offset+k_i of the new ground set
    let mut offsets = Vec::with_capacity(parts.len());
    let mut offset = 0usize;
    let mut blocks = Vec::with_capacity(parts.len());
    for p in parts {
        offsets.push(offset);
        let k = p.ground().card();
        let block = Subset::from_bits(((1u128 << k) - 1) as u64) ;
        blocks.push(Subset::from_bits(block.bits() << offset));
        offset += k;
    }
    let mut elements: Vec<Subset> = Vec::new();
    for (idx, p) in parts.iter().enumerate() {
        // relabel part elements: ascending old labels onto the block interval
        let old_labels: Vec<usize> = p.ground().labels().collect();
        for &e in p.elements() {
            let mut bits = 0u64;
            for l in e.labels() {
                let pos = old_labels.iter().position(|&x| x == l).expect("label in ground");
                bits |= 1 << (offsets[idx] + pos);
            }
            elements.push(Subset::from_bits(bits));
        }
    }
    for &e in b.elements() {
        let mut bits = 0u64;
        for l in e.labels() {
            let pos = positions.iter().position(|&x| x == l).expect("label in ground");
            bits |= blocks[pos].bits();
        }
        elements.push(Subset::from_bits(bits));
    }
    elements.sort_by_key(|s| s.canonical_key());
    elements.dedup();
    BuildingSet::new(Subset::full(total)?, elements)
}
