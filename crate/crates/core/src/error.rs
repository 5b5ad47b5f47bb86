use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("level mismatch: {left} vs {right}")]
    LevelMismatch { left: u32, right: u32 },
    #[error("basis index {index} out of range for level {level}")]
    IndexOutOfRange { level: u32, index: usize },
    #[error("cannot embed level {from} into lower level {to}")]
    EmbedDown { from: u32, to: u32 },
    #[error("coordinate count {len} is not a power of two")]
    BadLength { len: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("at least one sample is required")]
    NoSamples,
    #[error("level {level} exceeds the limit {max} for this operation")]
    LevelTooLarge { level: u32, max: u32 },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ProjectiveError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("level {0} is not a division algebra level (expected 0..=3)")]
    UnsupportedLevel(u32),
    #[error("norm constraint violated: squared norm {norm_sq} (expected {expected})")]
    NormViolation { norm_sq: f64, expected: f64 },
    #[error("entries do not generate an associative subalgebra (associator norm {0:e})")]
    NotAssociative(f64),
    #[error("point lies outside the chart domain (|l(p)| = {0:e})")]
    OutsideChart(f64),
    #[error("functional (0, 0, 0) is not allowed")]
    ZeroFunctional,
    #[error("no separating functional found after {0} attempts")]
    SearchExhausted(usize),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TopologyError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Projective(#[from] ProjectiveError),
    #[error("boundary matrix in degree {degree} has shape {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    BoundaryShape {
        degree: usize,
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },
    #[error("boundary composite in degree {0} is nonzero")]
    BoundaryNotClosed(usize),
    #[error("unknown CW complex {0:?}")]
    UnknownSpace(String),
    #[error("invalid coefficient group: {0}")]
    BadCoefficients(String),
    #[error("inconsistent multiplication operator: {0}")]
    Inconsistent(String),
    #[error("linking computation failed: {0}")]
    Geometry(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
