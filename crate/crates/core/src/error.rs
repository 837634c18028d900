use std::io;

use thiserror::Error;

use crate::graph::Vertex;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("input contains no edges or vertices")]
    EmptyInput,

    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),

    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),

    #[error("vertex {0} is not in the left set")]
    NotInLeftSet(Vertex),

    #[error("vertex {vertex} has degree {degree}, above the brute-force cap of {cap}")]
    DegreeTooLarge {
        vertex: Vertex,
        degree: usize,
        cap: usize,
    },

    #[error("graph invariant violated: {0}")]
    InvalidGraph(String),

    #[error("time limit exceeded")]
    TimedOut,

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
