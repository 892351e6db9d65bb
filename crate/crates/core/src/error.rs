use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid category matrix at ({row}, {col}): {reason}")]
    InvalidCategoryMatrix {
        row: usize,
        col: usize,
        reason: &'static str,
    },
    #[error("matrix is not square: {rows} rows, row {row} has {len} entries")]
    NotSquare { rows: usize, row: usize, len: usize },
    #[error("empty matrix")]
    Empty,
    #[error("digraph has a directed cycle through vertex {0}")]
    CyclicDigraph(usize),
    #[error("digraph arc {0} -> {0} is a loop")]
    LoopInDigraph(usize),
    #[error("category is not acyclic")]
    NotAcyclic,
    #[error("expected a {expected}x{expected} matrix, got {got}x{got}")]
    WrongDimension { expected: usize, got: usize },
    #[error("groupoid component {0} has a zero object count or automorphism order")]
    InvalidGroupoid(usize),
    #[error("groupoid must be connected (exactly one component)")]
    NotConnected,
    #[error("integer overflow while counting paths")]
    Overflow,
    #[error("series operation undefined: {0}")]
    Series(&'static str),
    #[error("numeric failure: {0}")]
    NumericFailure(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
