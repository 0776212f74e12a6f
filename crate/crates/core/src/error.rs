use thiserror::Error;

use crate::grid::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("unstacking invariant violated at ({x},{y},{z}) (code {code:#04x})", x = .vertex[0], y = .vertex[1], z = .vertex[2])]
    Forbidden { vertex: Vertex, code: u8 },

    #[error("vertex ({x},{y},{z}) has no decreasing edge", x = .0[0], y = .0[1], z = .0[2])]
    NoDescent(Vertex),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("matrix dimension mismatch: {0}")]
    Dimension(String),

    #[error("corner sink not found in the complement pass; the body touches the bounding box (preprocess or pad it)")]
    CornerNotFound,

    #[error("index-1 counts differ between passes: f-pass {f}, h-pass {h}")]
    PassMismatch { f: usize, h: usize },

    #[error("negative Betti number b{index} = {value}")]
    NegativeBetti { index: usize, value: i64 },

    #[error("complex too large for brute-force homology: {cells} cells (limit {limit})")]
    TooLarge { cells: usize, limit: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
