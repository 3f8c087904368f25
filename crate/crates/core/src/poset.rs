//! Unlabeled trees, centroid-rooted canonical codes, and the partial
//! order generated by tree shifts, with flossing moves annotated on the
//! side.

use crate::error::{Error, Result};
use crate::gamma_engine::{gamma_incremental, GammaMemo};
use crate::moves::{
    apply_flossing, apply_tree_shift, enumerate_flossing, enumerate_tree_shifts, LabeledGraph,
};
use crate::poly::{gamma_le, IntPolynomial};
use crate::buildset::graphical_building_set;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Write as _;

/// An isomorphism class of trees: the centroid-rooted canonical code, a
/// concrete representative, and basic statistics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalTree {
    pub code: String,
    pub n: usize,
    pub leaf_count: usize,
    pub representative: LabeledGraph,
}

fn rooted_code(g: &LabeledGraph, root: usize, parent: Option<usize>) -> String {
    let mut child_codes: Vec<String> = g
        .neighbors(root)
        .labels()
        .filter(|&v| Some(v) != parent)
        .map(|v| rooted_code(g, v, Some(root)))
        .collect();
    child_codes.sort();
    let mut out = String::with_capacity(2 + child_codes.iter().map(String::len).sum::<usize>());
    out.push('(');
    for c in child_codes {
        out.push_str(&c);
    }
    out.push(')');
    out
}

/// Centroid(s) of a tree: the one or two vertices minimizing the largest
/// component of the forest left after their removal.
fn centroids(g: &LabeledGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut best = usize::MAX;
    let mut arg = Vec::new();
    for v in 1..=n {
        // subtree sizes via DFS from v
        let mut max_comp = 0usize;
        let mut stack = vec![(v, 0usize)];
        let mut size = vec![0usize; n + 1];
        let mut order = Vec::new();
        let mut parent = vec![0usize; n + 1];
        while let Some((u, p)) = stack.pop() {
            order.push(u);
            parent[u] = p;
            for w in g.neighbors(u).labels() {
                if w != p {
                    stack.push((w, u));
                }
            }
        }
        for &u in order.iter().rev() {
            size[u] += 1;
            if parent[u] != 0 {
                size[parent[u]] += size[u];
            }
        }
        for w in g.neighbors(v).labels() {
            max_comp = max_comp.max(size[w]);
        }
        match max_comp.cmp(&best) {
            std::cmp::Ordering::Less => {
                best = max_comp;
                arg = vec![v];
            }
            std::cmp::Ordering::Equal => arg.push(v),
            std::cmp::Ordering::Greater => {}
        }
    }
    debug_assert!(arg.len() == 1 || arg.len() == 2);
    arg
}

/// Canonical code of an unlabeled tree: the AHU code rooted at the
/// centroid; with a bicentroid, the lexicographically smaller of the two
/// rootings. Two trees are isomorphic iff their codes are equal.
pub fn canonical_code(g: &LabeledGraph) -> Result<String> {
    if !g.is_tree() {
        return Err(Error::Domain("canonical code is defined for trees".into()));
    }
    Ok(centroids(g)
        .into_iter()
        .map(|c| rooted_code(g, c, None))
        .min()
        .expect("a tree has at least one centroid"))
}

pub fn canonical_tree(g: &LabeledGraph) -> Result<CanonicalTree> {
    Ok(CanonicalTree {
        code: canonical_code(g)?,
        n: g.vertex_count(),
        leaf_count: g.leaf_count(),
        representative: g.clone(),
    })
}

/// One representative per isomorphism class of trees on n vertices,
/// ordered by canonical code. Generation extends every class on n-1
/// vertices by one leaf at every vertex and deduplicates.
pub fn enumerate_trees(n: usize) -> Result<Vec<CanonicalTree>> {
    if n == 0 || n > 12 {
        return Err(Error::Domain(format!("tree enumeration supports 1..=12 vertices, got {n}")));
    }
    let mut classes: Vec<CanonicalTree> = vec![canonical_tree(&LabeledGraph::new(1))?];
    for k in 2..=n {
        let mut seen: BTreeMap<String, CanonicalTree> = BTreeMap::new();
        for class in &classes {
            let rep = &class.representative;
            for v in 1..=rep.vertex_count() {
                let mut extended = LabeledGraph::new(k);
                for (a, b) in rep.edges() {
                    extended.add_edge(a, b).expect("copied edge is valid");
                }
                extended.add_edge(v, k).expect("new leaf edge is valid");
                let t = canonical_tree(&extended)?;
                seen.entry(t.code.clone()).or_insert(t);
            }
        }
        classes = seen.into_values().collect();
    }
    Ok(classes)
}

/// A node of the tree poset: the tree class and its gamma-polynomial.
#[derive(Clone, Debug)]
pub struct TreeNode {
    pub tree: CanonicalTree,
    pub gamma: IntPolynomial,
}

/// The poset of trees on n vertices: directed shift edges (tail shifts to
/// head, one leaf fewer), flossing edges within a leaf class (chain
/// length >= 3 on the near side), and the reachability order generated by
/// the shift edges alone.
#[derive(Clone, Debug)]
pub struct TreePoset {
    pub n: usize,
    pub nodes: Vec<TreeNode>,
    pub shift_edges: Vec<(usize, usize)>,
    pub floss_edges: Vec<(usize, usize)>,
    /// order[i] = bit set of nodes reachable from i via shift edges
    /// (reflexive).
    order: Vec<u128>,
}

pub fn build_poset(n: usize, memo: &GammaMemo) -> Result<TreePoset> {
    if n == 0 || n > 10 {
        return Err(Error::Domain(format!("poset construction supports 1..=10 vertices, got {n}")));
    }
    let trees = enumerate_trees(n)?;
    assert!(trees.len() <= 128, "tree classes fit the order bit sets");
    let index: HashMap<String, usize> =
        trees.iter().enumerate().map(|(i, t)| (t.code.clone(), i)).collect();
    let mut nodes = Vec::with_capacity(trees.len());
    for t in trees {
        let gamma = gamma_incremental(&graphical_building_set(&t.representative)?, memo)?;
        nodes.push(TreeNode { tree: t, gamma });
    }
    let mut shift_edges: HashSet<(usize, usize)> = HashSet::new();
    let mut floss_edges: HashSet<(usize, usize)> = HashSet::new();
    for (i, node) in nodes.iter().enumerate() {
        let rep = &node.tree.representative;
        for mv in enumerate_tree_shifts(rep) {
            let result = apply_tree_shift(rep, &mv)?;
            let j = index[&canonical_code(&result)?];
            shift_edges.insert((i, j));
        }
        for mv in enumerate_flossing(rep) {
            if mv.r < 3 {
                // chain length 2 flossing is a tree shift; it already
                // appears among the shift edges
                continue;
            }
            let result = apply_flossing(rep, &mv)?;
            let j = index[&canonical_code(&result)?];
            debug_assert_eq!(
                nodes[j].tree.leaf_count, node.tree.leaf_count,
                "flossing with r >= 3 stays in the leaf class"
            );
            floss_edges.insert((i, j));
        }
    }
    let mut shift_edges: Vec<(usize, usize)> = shift_edges.into_iter().collect();
    shift_edges.sort();
    let mut floss_edges: Vec<(usize, usize)> = floss_edges.into_iter().collect();
    floss_edges.sort();

    // reflexive-transitive reachability over shift edges
    let count = nodes.len();
    let mut order: Vec<u128> = (0..count).map(|i| 1u128 << i).collect();
    let mut changed = true;
    while changed {
        changed = false;
        for &(a, b) in &shift_edges {
            let merged = order[a] | order[b];
            if merged != order[a] {
                order[a] = merged;
                changed = true;
            }
        }
    }
    Ok(TreePoset { n, nodes, shift_edges, floss_edges, order })
}

impl TreePoset {
    /// Whether `small` <= `big` in the shift order, i.e. `small` is
    /// reachable from `big` by tree shifts.
    pub fn le(&self, small: usize, big: usize) -> bool {
        self.order[big] & (1u128 << small) != 0
    }

    pub fn node_index(&self, code: &str) -> Option<usize> {
        self.nodes.iter().position(|n| n.tree.code == code)
    }

    pub fn leaf_class_sizes(&self) -> BTreeMap<usize, usize> {
        let mut sizes = BTreeMap::new();
        for n in &self.nodes {
            *sizes.entry(n.tree.leaf_count).or_insert(0) += 1;
        }
        sizes
    }

    /// Shift-edge multiplicities between leaf classes, keyed by
    /// (tail leaves, head leaves).
    pub fn shift_class_multiplicities(&self) -> BTreeMap<(usize, usize), usize> {
        let mut mult = BTreeMap::new();
        for &(a, b) in &self.shift_edges {
            let key = (self.nodes[a].tree.leaf_count, self.nodes[b].tree.leaf_count);
            *mult.entry(key).or_insert(0) += 1;
        }
        mult
    }

    /// Flossing-edge multiplicities per leaf class.
    pub fn floss_class_multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut mult = BTreeMap::new();
        for &(a, _) in &self.floss_edges {
            *mult.entry(self.nodes[a].tree.leaf_count).or_insert(0) += 1;
        }
        mult
    }

    /// DOT rendering: one rank per leaf count, solid arrows for shifts,
    /// dashed for flossing moves, node labels "code | gamma coefficients".
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        out.push_str("digraph tree_poset {\n");
        out.push_str("  rankdir=TB;\n  node [shape=box, fontname=\"monospace\"];\n");
        let mut by_leaves: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, n) in self.nodes.iter().enumerate() {
            by_leaves.entry(n.tree.leaf_count).or_default().push(i);
        }
        for (i, n) in self.nodes.iter().enumerate() {
            let gamma = n
                .gamma
                .coeffs()
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            let _ = writeln!(out, "  t{i} [label=\"{}|{}\"];", n.tree.code, gamma);
        }
        for idxs in by_leaves.values().rev() {
            let names: Vec<String> = idxs.iter().map(|i| format!("t{i}")).collect();
            let _ = writeln!(out, "  {{ rank=same; {}; }}", names.join("; "));
        }
        for &(a, b) in &self.shift_edges {
            let _ = writeln!(out, "  t{a} -> t{b} [style=solid];");
        }
        for &(a, b) in &self.floss_edges {
            let _ = writeln!(out, "  t{a} -> t{b} [style=dashed];");
        }
        out.push_str("}\n");
        out
    }
}

/// Everything `verify_poset` certifies about a poset, for reporting.
#[derive(Clone, Debug)]
pub struct PosetReport {
    pub n: usize,
    pub node_count: usize,
    pub leaf_class_sizes: BTreeMap<usize, usize>,
    pub shift_edge_count: usize,
    pub floss_edge_count: usize,
    pub minimum_code: String,
    pub maximum_code: String,
    pub path_gamma: IntPolynomial,
    pub star_gamma: IntPolynomial,
}

/// Certifies the order-theoretic claims: the path is the unique minimum,
/// the star the unique maximum, gamma is monotone along shift and
/// flossing edges, and the path/star gammas bound every tree, with
/// equality only at the extremes. Any violation is an error naming the
/// counterexample.
pub fn verify_poset(p: &TreePoset) -> Result<PosetReport> {
    let path_code = canonical_code(&LabeledGraph::path(p.n))?;
    let star_code = canonical_code(&LabeledGraph::star(p.n))?;
    let path_idx = p
        .node_index(&path_code)
        .ok_or_else(|| Error::Verification(format!("path on {} vertices missing", p.n)))?;
    let star_idx = p
        .node_index(&star_code)
        .ok_or_else(|| Error::Verification(format!("star on {} vertices missing", p.n)))?;

    for &(a, b) in &p.shift_edges {
        if p.nodes[a].tree.leaf_count != p.nodes[b].tree.leaf_count + 1 {
            return Err(Error::Verification(format!(
                "shift edge {} -> {} does not drop the leaf count by one",
                p.nodes[a].tree.code, p.nodes[b].tree.code
            )));
        }
        if !gamma_le(&p.nodes[b].gamma, &p.nodes[a].gamma) {
            return Err(Error::Verification(format!(
                "gamma not monotone along shift edge {} -> {}",
                p.nodes[a].tree.code, p.nodes[b].tree.code
            )));
        }
    }
    for &(a, b) in &p.floss_edges {
        if !gamma_le(&p.nodes[b].gamma, &p.nodes[a].gamma) {
            return Err(Error::Verification(format!(
                "gamma not monotone along flossing edge {} -> {}",
                p.nodes[a].tree.code, p.nodes[b].tree.code
            )));
        }
    }
    let path_gamma = p.nodes[path_idx].gamma.clone();
    let star_gamma = p.nodes[star_idx].gamma.clone();
    for (i, node) in p.nodes.iter().enumerate() {
        if !p.le(path_idx, i) {
            return Err(Error::Verification(format!(
                "path not reachable from {}: not the unique minimum",
                node.tree.code
            )));
        }
        if !p.le(i, star_idx) {
            return Err(Error::Verification(format!(
                "{} not reachable from the star: not the unique maximum",
                node.tree.code
            )));
        }
        if !gamma_le(&path_gamma, &node.gamma) || !gamma_le(&node.gamma, &star_gamma) {
            return Err(Error::Verification(format!(
                "gamma bounds violated at {}",
                node.tree.code
            )));
        }
        if i != path_idx && node.gamma == path_gamma {
            return Err(Error::Verification(format!(
                "lower gamma bound attained off the path at {}",
                node.tree.code
            )));
        }
        if i != star_idx && node.gamma == star_gamma {
            return Err(Error::Verification(format!(
                "upper gamma bound attained off the star at {}",
                node.tree.code
            )));
        }
        // every non-path tree admits a shift, every non-star tree a
        // reverse shift
        if i != path_idx && !p.shift_edges.iter().any(|&(a, _)| a == i) {
            return Err(Error::Verification(format!(
                "non-path tree {} has no outgoing shift edge",
                node.tree.code
            )));
        }
        if i != star_idx && p.n >= 3 && !p.shift_edges.iter().any(|&(_, b)| b == i) {
            return Err(Error::Verification(format!(
                "non-star tree {} has no incoming shift edge",
                node.tree.code
            )));
        }
    }
    Ok(PosetReport {
        n: p.n,
        node_count: p.nodes.len(),
        leaf_class_sizes: p.leaf_class_sizes(),
        shift_edge_count: p.shift_edges.len(),
        floss_edge_count: p.floss_edges.len(),
        minimum_code: path_code,
        maximum_code: star_code,
        path_gamma,
        star_gamma,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn code_identifies_isomorphic_trees() {
        // path 1-2-3-4 relabeled as 2-4-1-3
        let a = LabeledGraph::with_edges(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        let b = LabeledGraph::with_edges(4, &[(2, 4), (1, 4), (1, 3)]).unwrap();
        assert_eq!(canonical_code(&a).unwrap(), canonical_code(&b).unwrap());
        let star = LabeledGraph::star(4);
        assert_ne!(canonical_code(&a).unwrap(), canonical_code(&star).unwrap());
    }

    #[test]
    fn code_rejects_non_trees() {
        assert!(canonical_code(&LabeledGraph::complete(3)).is_err());
        assert!(canonical_code(&LabeledGraph::new(2)).is_err());
    }

    #[test]
    fn tree_counts_match_the_classics() {
        let expect = [1usize, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551];
        for (i, &count) in expect.iter().enumerate() {
            assert_eq!(enumerate_trees(i + 1).unwrap().len(), count, "n = {}", i + 1);
        }
        assert!(enumerate_trees(13).is_err());
    }

    #[test]
    fn seven_vertex_leaf_classes() {
        let p = build_poset(7, &GammaMemo::new()).unwrap();
        let sizes = p.leaf_class_sizes();
        let expect: BTreeMap<usize, usize> =
            [(2, 1), (3, 3), (4, 4), (5, 2), (6, 1)].into_iter().collect();
        assert_eq!(sizes, expect);
    }

    #[test]
    fn poset_n4() {
        let p = build_poset(4, &GammaMemo::new()).unwrap();
        assert_eq!(p.nodes.len(), 2);
        assert_eq!(p.shift_edges.len(), 1);
        let (a, b) = p.shift_edges[0];
        assert_eq!(p.nodes[a].tree.leaf_count, 3, "star shifts");
        assert_eq!(p.nodes[b].tree.leaf_count, 2, "to the path");
        let report = verify_poset(&p).unwrap();
        assert_eq!(report.path_gamma, IntPolynomial::from_coeffs(vec![1, 3]));
        assert_eq!(report.star_gamma, IntPolynomial::from_coeffs(vec![1, 4]));
    }

    #[test]
    fn poset_n2_trivial() {
        let p = build_poset(2, &GammaMemo::new()).unwrap();
        assert_eq!(p.nodes.len(), 1);
        assert!(p.shift_edges.is_empty());
        verify_poset(&p).unwrap();
    }

    #[test]
    fn dot_output_shape() {
        let p = build_poset(4, &GammaMemo::new()).unwrap();
        let dot = p.to_dot();
        assert!(dot.starts_with("digraph tree_poset {"));
        assert_eq!(dot.matches("rank=same").count(), 2);
        assert_eq!(dot.matches("style=solid").count(), 1);
        assert!(dot.contains("|1 4"), "star gamma label");
    }
}
