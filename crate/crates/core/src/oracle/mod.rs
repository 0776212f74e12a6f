//! Independent ground truth for the Morse pipeline.

mod complex;
mod components;
pub mod local;
mod reduce;

pub use complex::{betti_bruteforce, betti_bruteforce_with_limit, CubicalChainComplex, HomologyReport, DEFAULT_CELL_LIMIT};
pub use components::components_union_find;
pub use reduce::sparse_rank;
