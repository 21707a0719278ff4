pub mod matrix;

pub use matrix::{IntMatrix, IntVector, RatMatrix};

/// Errors shared across the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
