pub mod bench;
pub mod error;
pub mod gf2;
pub mod grid;
pub mod morse;
pub mod oracle;
pub mod preprocess;
pub mod report;
pub mod shapes;

pub use error::{Error, Result};
