//! wasm-bindgen surface for the browser demo. Every export returns a JSON
//! string; parsing and rendering happen on the page.

mod api;

pub use api::{analyze_graph as analyze_graph_impl, graph_moves as graph_moves_impl, tree_poset as tree_poset_impl};

use wasm_bindgen::prelude::*;

fn to_js<T>(r: nestohedra::Result<T>) -> Result<T, JsError> {
    r.map_err(|e| JsError::new(&e.to_string()))
}

/// f/h/gamma analysis of one graph; `edges_json` is `[[u,v],...]`.
#[wasm_bindgen]
pub fn analyze_graph(n: usize, edges_json: &str) -> Result<String, JsError> {
    to_js(api::analyze_graph(n, edges_json))
}

/// The tree poset on n vertices: nodes with gamma, shift and flossing edges.
#[wasm_bindgen]
pub fn tree_poset(n: usize) -> Result<String, JsError> {
    to_js(api::tree_poset(n))
}

/// All tree shifts and flossing moves of a graph, with rewritten graphs.
#[wasm_bindgen]
pub fn graph_moves(n: usize, edges_json: &str) -> Result<String, JsError> {
    to_js(api::graph_moves(n, edges_json))
}
