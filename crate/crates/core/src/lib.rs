//! Exact combinatorics of nestohedra and graph-associahedra: building
//! sets, nested-set complexes, f/h/gamma-polynomials, the incremental
//! gamma engine, tree shifts, flossing moves, and the tree poset they
//! generate.

pub mod buildset;
pub mod error;
pub mod gamma_engine;
pub mod moves;
pub mod nested;
pub mod poly;
pub mod poset;
pub mod verify;

pub use buildset::{BuildingSet, Subset};
pub use error::{Error, Result};
pub use moves::LabeledGraph;
pub use poly::IntPolynomial;
