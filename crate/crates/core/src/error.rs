use thiserror::Error;

pub type Result<T> = std::result::Result<T, OppmError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OppmError {
    #[error("sequences have different lengths ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },

    #[error("pattern is empty")]
    EmptyPattern,

    #[error("matrix has {cells} cells, expected {width}x{height}")]
    BadShape {
        width: usize,
        height: usize,
        cells: usize,
    },

    #[error("row {row} has {len} cells, expected {width}")]
    RaggedRows {
        row: usize,
        len: usize,
        width: usize,
    },
}
