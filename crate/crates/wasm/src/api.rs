//! JSON-string API behind the wasm bindings, written as plain functions
//! so the host test suite can exercise it directly.

use nestohedra::buildset::graphical_building_set;
use nestohedra::error::{Error, Result};
use nestohedra::gamma_engine::{gamma_incremental, GammaMemo};
use nestohedra::moves::{
    apply_flossing, apply_tree_shift, enumerate_flossing, enumerate_tree_shifts, wiener_index,
    LabeledGraph,
};
use nestohedra::nested::{f_polynomial, gamma_oracle};
use nestohedra::poly::{f_to_h, gamma_le, IntPolynomial};
use nestohedra::poset::{build_poset, canonical_code};
use serde::Serialize;

/// Largest graph the interactive panels accept.
pub const MAX_DEMO_VERTICES: usize = 10;
/// Oracle cross-checks run only up to this size; the census gets big fast.
const MAX_ORACLE_VERTICES: usize = 7;

fn parse_graph(n: usize, edges_json: &str) -> Result<LabeledGraph> {
    if n == 0 || n > MAX_DEMO_VERTICES {
        return Err(Error::Domain(format!(
            "the demo handles 1..={MAX_DEMO_VERTICES} vertices, got {n}"
        )));
    }
    let edges: Vec<(usize, usize)> = serde_json::from_str(edges_json)
        .map_err(|e| Error::Parse(format!("edge list: {e}")))?;
    LabeledGraph::with_edges(n, &edges)
}

#[derive(Serialize)]
struct Analysis {
    n: usize,
    edges: Vec<(usize, usize)>,
    connected: bool,
    tree: bool,
    leaves: usize,
    dimension: usize,
    flag: bool,
    gamma: IntPolynomial,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_gamma: Option<IntPolynomial>,
    engines_agree: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    f: Option<IntPolynomial>,
    #[serde(skip_serializing_if = "Option::is_none")]
    h: Option<IntPolynomial>,
    #[serde(skip_serializing_if = "Option::is_none")]
    wiener: Option<u64>,
}

/// Full analysis of one graph: gamma through the incremental engine, an
/// oracle cross-check when the instance is small, f/h data, Wiener index.
pub fn analyze_graph(n: usize, edges_json: &str) -> Result<String> {
    let g = parse_graph(n, edges_json)?;
    let b = graphical_building_set(&g)?;
    let memo = GammaMemo::new();
    let gamma = gamma_incremental(&b, &memo)?;
    let (oracle_gamma, f, h) = if n <= MAX_ORACLE_VERTICES {
        let (f, d) = f_polynomial(&b)?;
        let h = f_to_h(&f, d)?;
        (Some(gamma_oracle(&b)?), Some(f), Some(h))
    } else {
        (None, None, None)
    };
    let engines_agree = oracle_gamma.as_ref().map(|o| o == &gamma);
    let out = Analysis {
        n,
        edges: g.edges(),
        connected: g.is_connected(),
        tree: g.is_tree(),
        leaves: g.leaf_count(),
        dimension: b.dimension(),
        flag: b.is_flag(),
        gamma,
        oracle_gamma,
        engines_agree,
        f,
        h,
        wiener: wiener_index(&g).ok(),
    };
    Ok(serde_json::to_string(&out).expect("serializable"))
}

#[derive(Serialize)]
struct PosetNodeOut {
    code: String,
    leaves: usize,
    gamma: IntPolynomial,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize)]
struct PosetOut {
    n: usize,
    nodes: Vec<PosetNodeOut>,
    shift_edges: Vec<(usize, usize)>,
    floss_edges: Vec<(usize, usize)>,
}

/// The full tree poset on n vertices with per-class gamma and a
/// representative edge list for drawing.
pub fn tree_poset(n: usize) -> Result<String> {
    if n == 0 || n > 9 {
        return Err(Error::Domain(format!("the poset panel handles 1..=9 vertices, got {n}")));
    }
    let memo = GammaMemo::new();
    let p = build_poset(n, &memo)?;
    let out = PosetOut {
        n,
        nodes: p
            .nodes
            .iter()
            .map(|node| PosetNodeOut {
                code: node.tree.code.clone(),
                leaves: node.tree.leaf_count,
                gamma: node.gamma.clone(),
                edges: node.tree.representative.edges(),
            })
            .collect(),
        shift_edges: p.shift_edges.clone(),
        floss_edges: p.floss_edges.clone(),
    };
    Ok(serde_json::to_string(&out).expect("serializable"))
}

#[derive(Serialize)]
struct MoveOut {
    kind: &'static str,
    label: String,
    result_edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    result_code: Option<String>,
    gamma_before: IntPolynomial,
    gamma_after: IntPolynomial,
    lowers_gamma: bool,
    leaves_before: usize,
    leaves_after: usize,
    wiener_before: u64,
    wiener_after: u64,
}

/// Every tree shift and flossing move of a connected graph, each with its
/// rewritten graph and the gamma/Wiener bookkeeping.
pub fn graph_moves(n: usize, edges_json: &str) -> Result<String> {
    let g = parse_graph(n, edges_json)?;
    if !g.is_connected() {
        return Err(Error::Domain("moves are defined for connected graphs".into()));
    }
    let memo = GammaMemo::new();
    let gamma_before = gamma_incremental(&graphical_building_set(&g)?, &memo)?;
    let wiener_before = wiener_index(&g)?;
    let mut out = Vec::new();
    let mut push = |kind: &'static str, label: String, result: LabeledGraph| -> Result<()> {
        let gamma_after = gamma_incremental(&graphical_building_set(&result)?, &memo)?;
        out.push(MoveOut {
            kind,
            label,
            result_code: canonical_code(&result).ok(),
            gamma_before: gamma_before.clone(),
            lowers_gamma: gamma_le(&gamma_after, &gamma_before),
            leaves_before: g.leaf_count(),
            leaves_after: result.leaf_count(),
            wiener_before,
            wiener_after: wiener_index(&result)?,
            gamma_after,
            result_edges: result.edges(),
        });
        Ok(())
    };
    for mv in enumerate_tree_shifts(&g) {
        let result = apply_tree_shift(&g, &mv)?;
        push(
            "shift",
            format!("leaf {} takes {} from {}", mv.leaf, mv.moved, mv.branch),
            result,
        )?;
    }
    for mv in enumerate_flossing(&g) {
        let result = apply_flossing(&g, &mv)?;
        push(
            "flossing",
            format!(
                "leaf {} re-hangs on leaf {} across {} (r={}, r\u{302}={})",
                mv.near_leaf, mv.far_leaf, mv.branch, mv.r, mv.r_hat
            ),
            result,
        )?;
    }
    Ok(serde_json::to_string(&out).expect("serializable"))
}
