//! Simple labeled graphs and the two graph rewrites: tree shifts and
//! flossing moves, plus reverse shifts and the Wiener index.

use crate::buildset::Subset;
use crate::error::{Error, Result};
use std::fmt;

/// A simple undirected graph on vertices labeled 1..=n (n <= 64), stored
/// as per-vertex neighbor bit masks.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LabeledGraph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LabeledGraph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Enumerates every vertex subset of `verts` inducing a connected
/// subgraph, given neighbor masks indexed by bit position. Classic
/// branch-and-exclude enumeration: output-sensitive, each set exactly once.
fn connected_subsets_masked(verts: u64, adj: &[u64]) -> Vec<Subset> {
    fn rec(s: u64, frontier_src: u64, x: u64, adj: &[u64], out: &mut Vec<Subset>) {
        out.push(Subset::from_bits(s));
        let mut f = frontier_src & !s & !x;
        let mut x = x;
        while f != 0 {
            let fb = f & f.wrapping_neg();
            let v = fb.trailing_zeros() as usize;
            rec(s | fb, frontier_src | adj[v], x, adj, out);
            x |= fb;
            f &= f - 1;
        }
    }
    let mut out = Vec::new();
    let mut rest = verts;
    while rest != 0 {
        let vb = rest & rest.wrapping_neg();
        let v = vb.trailing_zeros() as usize;
        // sets whose minimum vertex is v: everything below v is excluded
        let excluded = !verts | (vb - 1);
        rec(vb, adj[v] & verts, excluded, adj, &mut out);
        rest &= rest - 1;
    }
    out
}

/// A graph on an arbitrary label subset, as produced by edge contraction
/// where surviving labels keep their names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaskedGraph {
    pub verts: Subset,
    /// neighbor masks indexed by bit position (0-based label - 1)
    adj: Vec<u64>,
}

impl MaskedGraph {
    pub fn connected_vertex_sets(&self) -> Vec<Subset> {
        connected_subsets_masked(self.verts.bits(), &self.adj)
    }
}

impl LabeledGraph {
    /// The edgeless graph on n vertices.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1 && n <= 64, "vertex count must be in 1..=64");
        LabeledGraph { n, adj: vec![0; n] }
    }

    pub fn with_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 || n > 64 {
            return Err(Error::TooManyLabels(n));
        }
        let mut g = LabeledGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Self {
        let mut g = LabeledGraph::new(n);
        for v in 1..n {
            g.add_edge(v, v + 1).expect("path edges are valid");
        }
        g
    }

    /// The star K_{1,n-1} with center 1.
    pub fn star(n: usize) -> Self {
        let mut g = LabeledGraph::new(n);
        for v in 2..=n {
            g.add_edge(1, v).expect("star edges are valid");
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = LabeledGraph::new(n);
        for u in 1..=n {
            for v in u + 1..=n {
                g.add_edge(u, v).expect("complete graph edges are valid");
            }
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1 && u <= self.n && v >= 1 && v <= self.n && self.adj[u - 1] & (1 << (v - 1)) != 0
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        if self.has_edge(u, v) {
            return Err(Error::Domain(format!("duplicate edge ({u},{v})")));
        }
        self.adj[u - 1] |= 1 << (v - 1);
        self.adj[v - 1] |= 1 << (u - 1);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        if !self.has_edge(u, v) {
            return Err(Error::Domain(format!("no edge ({u},{v}) to remove")));
        }
        self.adj[u - 1] &= !(1 << (v - 1));
        self.adj[v - 1] &= !(1 << (u - 1));
        Ok(())
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        if u < 1 || u > self.n || v < 1 || v > self.n {
            return Err(Error::Domain(format!(
                "vertex out of range in ({u},{v}); n = {}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::Domain(format!("self-loop at vertex {u}")));
        }
        Ok(())
    }

    pub fn neighbors(&self, v: usize) -> Subset {
        Subset::from_bits(self.adj[v - 1])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 1..=self.n {
            for v in Subset::from_bits(self.adj[u - 1]).labels() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn full_vertex_set(&self) -> Subset {
        Subset::full(self.n).expect("n <= 64")
    }

    /// Vertices reachable from `start` while staying inside `within`.
    fn reachable_within(&self, start: usize, within: u64) -> u64 {
        let start_bit = 1u64 << (start - 1);
        if within & start_bit == 0 {
            return 0;
        }
        let mut seen = start_bit;
        let mut frontier = start_bit;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                next |= self.adj[v] & within;
                f &= f - 1;
            }
            frontier = next & !seen;
            seen |= frontier;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.reachable_within(1, self.full_vertex_set().bits()).count_ones() as usize == self.n
    }

    pub fn components(&self) -> Vec<Subset> {
        self.components_within(self.full_vertex_set().bits())
    }

    fn components_within(&self, within: u64) -> Vec<Subset> {
        let mut rest = within;
        let mut out = Vec::new();
        while rest != 0 {
            let v = rest.trailing_zeros() as usize + 1;
            let comp = self.reachable_within(v, rest);
            out.push(Subset::from_bits(comp));
            rest &= !comp;
        }
        out
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() == self.n - 1
    }

    pub fn leaves(&self) -> Vec<usize> {
        (1..=self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn leaf_count(&self) -> usize {
        (1..=self.n).filter(|&v| self.degree(v) == 1).count()
    }

    /// Whether the induced subgraph on `set` is connected. The empty set
    /// counts as disconnected.
    pub fn induces_connected(&self, set: Subset) -> bool {
        match set.smallest_label() {
            None => false,
            Some(v) => self.reachable_within(v, set.bits()) == set.bits(),
        }
    }

    /// All vertex subsets inducing connected subgraphs.
    pub fn connected_vertex_sets(&self) -> Vec<Subset> {
        connected_subsets_masked(self.full_vertex_set().bits(), &self.adj)
    }

    /// BFS distances and shortest-path counts from `start`. Unreachable
    /// vertices get distance `usize::MAX` and count 0.
    pub fn shortest_path_data(&self, start: usize) -> (Vec<usize>, Vec<u64>) {
        let mut dist = vec![usize::MAX; self.n];
        let mut count = vec![0u64; self.n];
        dist[start - 1] = 0;
        count[start - 1] = 1;
        let mut layer = vec![start - 1];
        while !layer.is_empty() {
            let mut next = Vec::new();
            for &u in &layer {
                let du = dist[u];
                let mut nb = self.adj[u];
                while nb != 0 {
                    let w = nb.trailing_zeros() as usize;
                    nb &= nb - 1;
                    if dist[w] == usize::MAX {
                        dist[w] = du + 1;
                        next.push(w);
                    }
                    if dist[w] == du + 1 {
                        count[w] = count[w].saturating_add(count[u]);
                    }
                }
            }
            layer = next;
        }
        (dist, count)
    }

    /// The graph obtained by contracting the vertex set `i` away: vertices
    /// outside `i` keep their labels; two survivors are adjacent if they
    /// were adjacent before or both had neighbors inside `i`.
    pub fn contract_set(&self, i: Subset) -> MaskedGraph {
        let survivors = self.full_vertex_set().minus(i);
        let mut adj = vec![0u64; self.n];
        let touching: Vec<usize> = survivors
            .labels()
            .filter(|&v| self.adj[v - 1] & i.bits() != 0)
            .collect();
        for v in survivors.labels() {
            adj[v - 1] = self.adj[v - 1] & survivors.bits();
        }
        for (a_idx, &a) in touching.iter().enumerate() {
            for &b in &touching[a_idx + 1..] {
                adj[a - 1] |= 1 << (b - 1);
                adj[b - 1] |= 1 << (a - 1);
            }
        }
        MaskedGraph { verts: survivors, adj }
    }

    /// Parses the plain text format: first line "n m", then m lines
    /// "u v" with 1 <= u < v <= n. Blank lines and '#' comments ignored.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty graph file".into()))?;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad header line: {header:?}")))?;
        let m: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad header line: {header:?}")))?;
        if it.next().is_some() {
            return Err(Error::Parse(format!("trailing tokens in header: {header:?}")));
        }
        if n == 0 || n > 64 {
            return Err(Error::TooManyLabels(n));
        }
        let mut g = LabeledGraph::new(n);
        let mut seen = 0usize;
        for line in lines {
            let mut it = line.split_whitespace();
            let (Some(u), Some(v)) = (
                it.next().and_then(|t| t.parse::<usize>().ok()),
                it.next().and_then(|t| t.parse::<usize>().ok()),
            ) else {
                return Err(Error::Parse(format!("bad edge line: {line:?}")));
            };
            if it.next().is_some() {
                return Err(Error::Parse(format!("trailing tokens in edge line: {line:?}")));
            }
            if !(1 <= u && u < v && v <= n) {
                return Err(Error::Parse(format!(
                    "edge ({u},{v}) violates 1 <= u < v <= {n}"
                )));
            }
            g.add_edge(u, v).map_err(|e| Error::Parse(e.to_string()))?;
            seen += 1;
        }
        if seen != m {
            return Err(Error::Parse(format!("header declared {m} edges, found {seen}")));
        }
        Ok(g)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edge_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// Data of a tree shift: pendant trees `moved` detach from `branch` and
/// reattach to the far leaf.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeShiftMove {
    /// the leaf l the moved trees reattach to
    pub leaf: usize,
    /// the nearest vertex to `leaf` of degree >= 3
    pub branch: usize,
    /// interior path vertices strictly between branch and leaf (degree 2)
    pub path: Subset,
    /// F: a union of pendant-tree components of G - branch
    pub moved: Subset,
}

/// Data of a flossing move: leaves `near_leaf` and `far_leaf` floss the
/// unique branched vertex on the unique shortest path between them; the
/// edge (near_leaf, detach_from) is replaced by (far_leaf, near_leaf).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlossingMove {
    pub near_leaf: usize,
    pub far_leaf: usize,
    /// the flossed vertex v (degree >= 3, unique such on the path)
    pub branch: usize,
    /// w, the unique neighbor of near_leaf
    pub detach_from: usize,
    /// vertices in the chain from near_leaf to branch, inclusive
    pub r: usize,
    /// vertices in the chain from far_leaf to branch, inclusive
    pub r_hat: usize,
}

/// Walks inward from a leaf to the first vertex of degree >= 3. Returns
/// (branch, interior path mask), or None when the walk ends at another
/// leaf (the graph is a path).
fn leaf_branch_walk(g: &LabeledGraph, leaf: usize) -> Option<(usize, Subset)> {
    debug_assert_eq!(g.degree(leaf), 1);
    let mut prev = leaf;
    let mut cur = g.neighbors(leaf).smallest_label()?;
    let mut interior = Subset::EMPTY;
    loop {
        match g.degree(cur) {
            d if d >= 3 => return Some((cur, interior)),
            2 => {
                let next = g
                    .neighbors(cur)
                    .minus(Subset::singleton(prev))
                    .smallest_label()
                    .expect("degree-2 vertex has another neighbor");
                interior = interior.union(Subset::singleton(cur));
                prev = cur;
                cur = next;
            }
            _ => return None,
        }
    }
}

/// Pendant components of g - branch that qualify for F: each must induce
/// a tree attached to branch by exactly one edge.
fn eligible_components(g: &LabeledGraph, branch: usize, skip: Subset) -> (Vec<Subset>, Subset) {
    let within = g.full_vertex_set().minus(Subset::singleton(branch)).bits();
    let mut eligible = Vec::new();
    let mut others = Subset::EMPTY;
    let branch_adj = g.neighbors(branch);
    let mut rest = within;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize + 1;
        let comp = Subset::from_bits(g.reachable_within(v, rest));
        rest &= !comp.bits();
        if comp.intersects(skip) {
            continue;
        }
        others = others.union(comp);
        let internal_edges: usize = comp
            .labels()
            .map(|u| (g.neighbors(u).intersect(comp)).card())
            .sum::<usize>()
            / 2;
        let edges_to_branch = branch_adj.intersect(comp).card();
        if internal_edges == comp.card() - 1 && edges_to_branch == 1 {
            eligible.push(comp);
        }
    }
    (eligible, others)
}

/// All valid tree shifts of a connected graph. Moves are data; two moves
/// with isomorphic results are both listed.
pub fn enumerate_tree_shifts(g: &LabeledGraph) -> Vec<TreeShiftMove> {
    let mut out = Vec::new();
    if !g.is_connected() {
        return out;
    }
    for leaf in g.leaves() {
        let Some((branch, interior)) = leaf_branch_walk(g, leaf) else {
            continue;
        };
        let skip = interior.union(Subset::singleton(leaf));
        let (eligible, others) = eligible_components(g, branch, skip);
        if eligible.is_empty() {
            continue;
        }
        for mask in 1u64..(1 << eligible.len()) {
            let mut moved = Subset::EMPTY;
            for (k, comp) in eligible.iter().enumerate() {
                if mask & (1 << k) != 0 {
                    moved = moved.union(*comp);
                }
            }
            // E = remaining components besides the leaf path must be nonempty
            if moved == others {
                continue;
            }
            out.push(TreeShiftMove { leaf, branch, path: interior, moved });
        }
    }
    out
}

fn validate_tree_shift(g: &LabeledGraph, m: &TreeShiftMove) -> Result<()> {
    if m.leaf < 1 || m.leaf > g.vertex_count() || g.degree(m.leaf) != 1 {
        return Err(Error::Domain(format!("vertex {} is not a leaf", m.leaf)));
    }
    let Some((branch, interior)) = leaf_branch_walk(g, m.leaf) else {
        return Err(Error::Domain("no branch vertex: graph is a path".into()));
    };
    if branch != m.branch || interior != m.path {
        return Err(Error::Domain(format!(
            "walk from leaf {} reaches branch {branch} via {interior}, move claims {} via {}",
            m.leaf, m.branch, m.path
        )));
    }
    if m.moved.is_empty() {
        return Err(Error::Domain("moved set F must be nonempty".into()));
    }
    let skip = interior.union(Subset::singleton(m.leaf));
    let (eligible, others) = eligible_components(g, branch, skip);
    let mut covered = Subset::EMPTY;
    for comp in &eligible {
        if comp.is_subset_of(m.moved) {
            covered = covered.union(*comp);
        } else if comp.intersects(m.moved) {
            return Err(Error::Domain(format!(
                "moved set {} cuts through component {comp}",
                m.moved
            )));
        }
    }
    if covered != m.moved {
        return Err(Error::Domain(format!(
            "moved set {} is not a union of eligible pendant components",
            m.moved
        )));
    }
    if m.moved == others {
        return Err(Error::Domain("remainder E would be empty".into()));
    }
    Ok(())
}

/// Applies a tree shift: every edge between F and the branch vertex is
/// replaced by the corresponding edge to the leaf. Decreases the leaf
/// count by exactly one.
pub fn apply_tree_shift(g: &LabeledGraph, m: &TreeShiftMove) -> Result<LabeledGraph> {
    validate_tree_shift(g, m)?;
    let mut out = g.clone();
    for v in m.moved.intersect(g.neighbors(m.branch)).labels() {
        out.remove_edge(v, m.branch)?;
        out.add_edge(v, m.leaf)?;
    }
    debug_assert!(out.is_connected());
    debug_assert_eq!(out.leaf_count(), g.leaf_count() - 1);
    Ok(out)
}

/// Reverse shift on a tree: for adjacent non-leaves c and l, every other
/// neighbor of l is reattached to c, making l a leaf. Some tree shift of
/// the result returns the original tree.
pub fn reverse_shift(t: &LabeledGraph, c: usize, l: usize) -> Result<LabeledGraph> {
    if !t.is_tree() {
        return Err(Error::Domain("reverse shift requires a tree".into()));
    }
    if !t.has_edge(c, l) {
        return Err(Error::Domain(format!("vertices {c} and {l} are not adjacent")));
    }
    if t.degree(c) < 2 || t.degree(l) < 2 {
        return Err(Error::Domain("both vertices must be non-leaves".into()));
    }
    let mut out = t.clone();
    for v in t.neighbors(l).minus(Subset::singleton(c)).labels() {
        out.remove_edge(v, l)?;
        out.add_edge(v, c)?;
    }
    debug_assert!(out.is_tree());
    Ok(out)
}

/// The unique shortest path between two vertices, or None when several
/// shortest paths exist. Returns path vertices ordered from `a` to `b`.
fn unique_shortest_path(g: &LabeledGraph, a: usize, b: usize) -> Option<Vec<usize>> {
    let (dist_a, count_a) = g.shortest_path_data(a);
    if dist_a[b - 1] == usize::MAX || count_a[b - 1] != 1 {
        return None;
    }
    let (dist_b, _) = g.shortest_path_data(b);
    let total = dist_a[b - 1];
    let mut on_path: Vec<usize> = (1..=g.vertex_count())
        .filter(|&v| {
            dist_a[v - 1] != usize::MAX
                && dist_b[v - 1] != usize::MAX
                && dist_a[v - 1] + dist_b[v - 1] == total
        })
        .collect();
    on_path.sort_by_key(|&v| dist_a[v - 1]);
    debug_assert_eq!(on_path.len(), total + 1);
    Some(on_path)
}

/// All flossing moves of a connected graph: ordered leaf pairs (l, l-hat)
/// with a unique shortest path carrying exactly one branched vertex, and
/// dist(l, v) <= dist(l-hat, v). Ties produce both orientations.
pub fn enumerate_flossing(g: &LabeledGraph) -> Vec<FlossingMove> {
    let mut out = Vec::new();
    if !g.is_connected() {
        return out;
    }
    let leaves = g.leaves();
    for &l in &leaves {
        for &lh in &leaves {
            if l == lh {
                continue;
            }
            let Some(path) = unique_shortest_path(g, l, lh) else {
                continue;
            };
            let branched: Vec<usize> =
                path.iter().copied().filter(|&v| g.degree(v) >= 3).collect();
            let [v] = branched[..] else {
                continue;
            };
            let d_near = path.iter().position(|&x| x == v).expect("v on path");
            let d_far = path.len() - 1 - d_near;
            if d_near > d_far {
                continue;
            }
            let w = g.neighbors(l).smallest_label().expect("leaf has a neighbor");
            out.push(FlossingMove {
                near_leaf: l,
                far_leaf: lh,
                branch: v,
                detach_from: w,
                r: d_near + 1,
                r_hat: d_far + 1,
            });
        }
    }
    out
}

fn validate_flossing(g: &LabeledGraph, m: &FlossingMove) -> Result<()> {
    for v in [m.near_leaf, m.far_leaf] {
        if v < 1 || v > g.vertex_count() || g.degree(v) != 1 {
            return Err(Error::Domain(format!("vertex {v} is not a leaf")));
        }
    }
    let Some(path) = unique_shortest_path(g, m.near_leaf, m.far_leaf) else {
        return Err(Error::Domain("no unique shortest path between the leaves".into()));
    };
    let branched: Vec<usize> = path.iter().copied().filter(|&v| g.degree(v) >= 3).collect();
    let [v] = branched[..] else {
        return Err(Error::Domain("path does not carry exactly one branched vertex".into()));
    };
    if v != m.branch {
        return Err(Error::Domain(format!("branched vertex is {v}, move claims {}", m.branch)));
    }
    let d_near = path.iter().position(|&x| x == v).expect("v on path");
    let d_far = path.len() - 1 - d_near;
    if d_near > d_far {
        return Err(Error::Domain("near leaf is farther from the branch than far leaf".into()));
    }
    if d_near + 1 != m.r || d_far + 1 != m.r_hat {
        return Err(Error::Domain("r or r-hat does not match the path".into()));
    }
    let w = g.neighbors(m.near_leaf).smallest_label().expect("leaf neighbor");
    if w != m.detach_from {
        return Err(Error::Domain(format!(
            "near leaf neighbor is {w}, move claims {}",
            m.detach_from
        )));
    }
    Ok(())
}

/// Applies a flossing move: remove the edge (near_leaf, detach_from), add
/// the edge (far_leaf, near_leaf).
pub fn apply_flossing(g: &LabeledGraph, m: &FlossingMove) -> Result<LabeledGraph> {
    validate_flossing(g, m)?;
    let mut out = g.clone();
    out.remove_edge(m.near_leaf, m.detach_from)?;
    out.add_edge(m.far_leaf, m.near_leaf)?;
    debug_assert!(out.is_connected());
    Ok(out)
}

/// Sum of pairwise distances over unordered vertex pairs.
pub fn wiener_index(g: &LabeledGraph) -> Result<u64> {
    if !g.is_connected() {
        return Err(Error::Domain("Wiener index requires a connected graph".into()));
    }
    let mut total = 0u64;
    for v in 1..=g.vertex_count() {
        let (dist, _) = g.shortest_path_data(v);
        total += dist.iter().map(|&d| d as u64).sum::<u64>();
    }
    Ok(total / 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sub(labels: &[usize]) -> Subset {
        Subset::from_labels(labels).unwrap()
    }

    #[test]
    fn parse_and_emit() {
        let text = "# a path\n3 2\n1 2\n\n2 3\n";
        let g = LabeledGraph::from_text(text).unwrap();
        assert_eq!(g, LabeledGraph::path(3));
        assert_eq!(g.to_text(), "3 2\n1 2\n2 3\n");
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(LabeledGraph::from_text("").is_err());
        assert!(LabeledGraph::from_text("2 1\n1 1\n").is_err(), "self-loop");
        assert!(LabeledGraph::from_text("2 2\n1 2\n1 2\n").is_err(), "multi-edge");
        assert!(LabeledGraph::from_text("2 1\n2 1\n").is_err(), "u < v required");
        assert!(LabeledGraph::from_text("2 2\n1 2\n").is_err(), "edge count mismatch");
        assert!(LabeledGraph::from_text("3 1\n1 4\n").is_err(), "vertex out of range");
    }

    #[test]
    fn connected_sets_match_brute_force() {
        // deterministic spot-check; the randomized sweep lives in the
        // property suite
        let g = LabeledGraph::with_edges(5, &[(1, 2), (2, 3), (3, 4), (2, 5)]).unwrap();
        let mut fast = g.connected_vertex_sets();
        fast.sort_by_key(|s| s.canonical_key());
        let mut brute = Vec::new();
        for bits in 1u64..(1 << 5) {
            let s = Subset::from_bits(bits);
            if g.induces_connected(s) {
                brute.push(s);
            }
        }
        brute.sort_by_key(|s| s.canonical_key());
        assert_eq!(fast, brute);
    }

    #[test]
    fn no_shift_on_paths_or_tiny_graphs() {
        for n in 2..=8 {
            assert!(enumerate_tree_shifts(&LabeledGraph::path(n)).is_empty());
        }
        for n in 1..=3 {
            assert!(enumerate_tree_shifts(&LabeledGraph::star(n.max(1))).is_empty());
            assert!(enumerate_tree_shifts(&LabeledGraph::complete(n)).is_empty());
        }
    }

    #[test]
    fn shifts_of_k13() {
        // center 2, leaves 1, 3, 4 per the classic labeling
        let g = LabeledGraph::with_edges(4, &[(1, 2), (2, 3), (2, 4)]).unwrap();
        let moves = enumerate_tree_shifts(&g);
        // each leaf admits two single-component choices of F; F = both
        // other leaves fails because E would be empty
        assert_eq!(moves.len(), 6);
        let example = TreeShiftMove {
            leaf: 1,
            branch: 2,
            path: Subset::EMPTY,
            moved: sub(&[3]),
        };
        assert!(moves.contains(&example));
        assert!(!moves.iter().any(|m| m.moved == sub(&[3, 4])));
        let shifted = apply_tree_shift(&g, &example).unwrap();
        // 4 - 2 - 1 - 3 as a labeled path
        let expect = LabeledGraph::with_edges(4, &[(1, 2), (1, 3), (2, 4)]).unwrap();
        assert_eq!(shifted, expect);
        assert_eq!(shifted.leaf_count(), g.leaf_count() - 1);
    }

    #[test]
    fn shift_star5_to_chair() {
        // K_{1,4} with center 5
        let g = LabeledGraph::with_edges(5, &[(1, 5), (2, 5), (3, 5), (4, 5)]).unwrap();
        let m = TreeShiftMove { leaf: 1, branch: 5, path: Subset::EMPTY, moved: sub(&[2]) };
        let shifted = apply_tree_shift(&g, &m).unwrap();
        // spider with legs 2, 1, 1: degree sequence [1,1,1,2,3]
        let mut degs: Vec<usize> = (1..=5).map(|v| shifted.degree(v)).collect();
        degs.sort();
        assert_eq!(degs, vec![1, 1, 1, 2, 3]);
    }

    #[test]
    fn shift_reduces_leaves_by_one() {
        let g = LabeledGraph::with_edges(
            7,
            &[(1, 2), (2, 3), (3, 4), (3, 5), (5, 6), (5, 7)],
        )
        .unwrap();
        for m in enumerate_tree_shifts(&g) {
            let shifted = apply_tree_shift(&g, &m).unwrap();
            assert_eq!(shifted.leaf_count(), g.leaf_count() - 1, "move {m:?}");
        }
    }

    #[test]
    fn reverse_shift_path4() {
        let t = LabeledGraph::path(4);
        let r = reverse_shift(&t, 2, 3).unwrap();
        let expect = LabeledGraph::with_edges(4, &[(1, 2), (2, 3), (2, 4)]).unwrap();
        assert_eq!(r, expect);
        assert!(reverse_shift(&t, 1, 2).is_err(), "1 is a leaf");
        assert!(reverse_shift(&t, 2, 4).is_err(), "not adjacent");
    }

    #[test]
    fn reverse_shift_round_trip() {
        let t = LabeledGraph::with_edges(5, &[(1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        let r = reverse_shift(&t, 3, 4).unwrap();
        let back: Vec<LabeledGraph> = enumerate_tree_shifts(&r)
            .iter()
            .map(|m| apply_tree_shift(&r, m).unwrap())
            .collect();
        assert!(back.contains(&t));
    }

    #[test]
    fn no_flossing_on_paths() {
        for n in 2..=8 {
            assert!(enumerate_flossing(&LabeledGraph::path(n)).is_empty());
        }
    }

    #[test]
    fn flossing_spider_221() {
        // spider with legs 2, 2, 1: center 1, legs 2-3, 4-5, 6
        let g =
            LabeledGraph::with_edges(6, &[(1, 2), (2, 3), (1, 4), (4, 5), (1, 6)]).unwrap();
        let moves = enumerate_flossing(&g);
        let tips = moves
            .iter()
            .find(|m| m.near_leaf == 3 && m.far_leaf == 5)
            .expect("move between the two long leg tips");
        assert_eq!(tips.branch, 1);
        assert_eq!((tips.r, tips.r_hat), (3, 3));
        let res = apply_flossing(&g, tips).unwrap();
        // legs become 1, 1, 3; leaf count preserved
        assert_eq!(res.leaf_count(), g.leaf_count());
        let mut degs: Vec<usize> = (1..=6).map(|v| res.degree(v)).collect();
        degs.sort();
        assert_eq!(degs, vec![1, 1, 1, 2, 2, 3]);
    }

    #[test]
    fn flossing_with_branch_as_neighbor() {
        // l=1 adjacent to v=2; extra leaf 3 on v; chain 2-4-5-6 to far leaf
        let g =
            LabeledGraph::with_edges(6, &[(1, 2), (2, 3), (2, 4), (4, 5), (5, 6)]).unwrap();
        let moves = enumerate_flossing(&g);
        let m = moves
            .iter()
            .find(|m| m.near_leaf == 1 && m.far_leaf == 6)
            .expect("move from leaf 1 to leaf 6");
        assert_eq!(m.branch, 2);
        assert_eq!(m.detach_from, 2, "w = v when dist(l, v) = 1");
        assert_eq!((m.r, m.r_hat), (2, 4));
        let res = apply_flossing(&g, m).unwrap();
        assert!(res.is_tree());
        assert_eq!(res.leaf_count(), 2, "result is a path");
    }

    #[test]
    fn flossing_skips_double_branch_paths() {
        // two branched vertices on the leaf-to-leaf path
        let g = LabeledGraph::with_edges(
            6,
            &[(1, 2), (2, 3), (2, 4), (4, 5), (4, 6)],
        )
        .unwrap();
        let moves = enumerate_flossing(&g);
        assert!(moves
            .iter()
            .all(|m| !(m.near_leaf == 1 && m.far_leaf == 5)
                && !(m.near_leaf == 5 && m.far_leaf == 1)));
    }

    #[test]
    fn wiener_examples() {
        assert_eq!(wiener_index(&LabeledGraph::path(3)).unwrap(), 4);
        assert_eq!(wiener_index(&LabeledGraph::path(4)).unwrap(), 10);
        assert_eq!(wiener_index(&LabeledGraph::star(4)).unwrap(), 9);
        for n in 2..=6 {
            assert_eq!(
                wiener_index(&LabeledGraph::complete(n)).unwrap(),
                (n * (n - 1) / 2) as u64
            );
        }
        assert!(wiener_index(&LabeledGraph::new(3)).is_err());
    }

    #[test]
    fn contract_set_joins_neighbors() {
        let g = LabeledGraph::path(3);
        let c = g.contract_set(sub(&[2]));
        assert_eq!(c.verts, sub(&[1, 3]));
        let mut sets = c.connected_vertex_sets();
        sets.sort_by_key(|s| s.canonical_key());
        assert_eq!(sets, vec![sub(&[1]), sub(&[3]), sub(&[1, 3])]);
    }
}
