//! The Morse sweep of the diagonal height `x + y + z`.

pub mod betti;
pub mod code;
pub mod descent;
pub mod sweep;
pub mod table;

pub use betti::{betti, chain_diagnostic, compute, euler_cell_count, BettiReport, ChainDiagnostic, Computation, Options};
pub use code::{neighborhood_code, NeighborhoodCode, VertexClass};
pub use sweep::{dual_sweep, sweep, CriticalPoint, DualResult, SweepResult};
pub use table::{classify, CLASS_TABLE};
