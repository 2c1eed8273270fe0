use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty simplex in generator list")]
    EmptySimplex,
    #[error("face {0:?} is not in the complex")]
    FaceNotFound(Vec<u32>),
    #[error("face set is not closed under subsets: {missing:?} is missing (subset of {face:?})")]
    NotClosed { face: Vec<u32>, missing: Vec<u32> },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("graph edge ({0}, {1}) is invalid")]
    InvalidEdge(u32, u32),
    #[error("generating polynomial vanishes at t = {0}")]
    Pole(String),
    #[error("refinement would produce {predicted} faces, above the cap of {cap}")]
    FaceCapExceeded { predicted: String, cap: usize },
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
